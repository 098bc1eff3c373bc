#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "surflines/catalog/arrangement.hpp"
#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/exactnum/cyclotomic.hpp"
#include "surflines/projgeom/line.hpp"

namespace surflines {

/// Upper bound n(7n - 12) on the number of lines of a smooth degree-n surface.
inline std::int64_t max_lines_bound(int n) {
    if (n < 3) throw InvalidInput("max_lines_bound requires n >= 3");
    return static_cast<std::int64_t>(n) * (7 * static_cast<std::int64_t>(n) - 12);
}

/// True iff the whole line lies on x^n + y^n + z^n + w^n = 0.
///
/// Along the line, F(lambda p + mu q) = sum_k C(n,k) lambda^k mu^(n-k) sum_i p_i^k q_i^(n-k),
/// so the line lies on the surface iff every inner sum vanishes.
inline bool on_surface(const ProjLine& l, int n) {
    if (n < 1) throw InvalidInput("surface degree must be positive");
    const auto m = l.conductor();
    const auto un = static_cast<std::size_t>(n);
    std::vector<std::vector<CycloNum>> p_pow(4), q_pow(4);
    for (std::size_t i = 0; i < 4; ++i) {
        p_pow[i].push_back(CycloNum::one(m));
        q_pow[i].push_back(CycloNum::one(m));
        for (std::size_t e = 1; e <= un; ++e) {
            p_pow[i].push_back(p_pow[i].back() * l.first()[i]);
            q_pow[i].push_back(q_pow[i].back() * l.second()[i]);
        }
    }
    for (std::size_t k = 0; k <= un; ++k) {
        CycloNum sum = CycloNum::zero(m);
        for (std::size_t i = 0; i < 4; ++i) sum += p_pow[i][k] * q_pow[i][un - k];
        if (!sum.is_zero()) return false;
    }
    return true;
}

/// The 3n^2 lines on the Fermat surface, over Q(zeta_2n):
///   A: x = a y, z = b w     B: x = a z, y = b w     C: x = a w, y = b z
/// for all a, b with a^n = b^n = -1. Ordered by family, then a, then b;
/// labels read "A(i,j)" with a = zeta_2n^i, b = zeta_2n^j.
inline Arrangement fermat_lines(int n) {
    if (n < 3) throw InvalidInput("fermat_lines requires n >= 3");
    const auto m = static_cast<std::uint32_t>(2 * n);
    const auto roots = nth_roots_of_minus_one(static_cast<std::uint32_t>(n));
    const CycloNum zero = CycloNum::zero(m);
    const CycloNum one = CycloNum::one(m);

    std::vector<ProjLine> lines;
    std::vector<std::string> labels;
    lines.reserve(3 * roots.size() * roots.size());
    for (char family : {'A', 'B', 'C'}) {
        for (std::size_t i = 0; i < roots.size(); ++i) {
            for (std::size_t j = 0; j < roots.size(); ++j) {
                const CycloNum& a = roots[i];
                const CycloNum& b = roots[j];
                ProjPoint::Coords p{zero, zero, zero, zero};
                ProjPoint::Coords q{zero, zero, zero, zero};
                switch (family) {
                case 'A': p = {a, one, zero, zero}; q = {zero, zero, b, one}; break;
                case 'B': p = {a, zero, one, zero}; q = {zero, b, zero, one}; break;
                default: p = {a, zero, zero, one}; q = {zero, b, one, zero}; break;
                }
                lines.push_back(line_through(normalize_point(p), normalize_point(q)));
                labels.push_back(std::string(1, family) + "(" + std::to_string(2 * i + 1) + "," +
                                 std::to_string(2 * j + 1) + ")");
            }
        }
    }
    return {n, std::move(lines), std::move(labels)};
}

/// d = 3n^2, t_2 = 3n^3, t_n = 6n.
inline IncidenceProfile fermat_profile(int n) {
    if (n < 3) throw InvalidInput("fermat_profile requires n >= 3");
    const std::int64_t nn = n;
    return {n, 3 * nn * nn, {{2, 3 * nn * nn * nn}, {n, 6 * nn}}};
}

/// Grid of n(n-2)+2 disjoint lines crossed by 2 disjoint lines: only double points.
inline IncidenceProfile rams_profile(int n) {
    if (n < 6) throw InvalidInput("rams_profile requires n >= 6");
    const std::int64_t nn = n;
    return {n, nn * (nn - 2) + 4, {{2, 2 * nn * nn - 4 * nn + 4}}};
}

/// 64 lines on the Schur quartic.
inline IncidenceProfile schur_profile() { return {4, 64, {{2, 336}, {3, 64}, {4, 8}}}; }

/// 27 lines on a smooth cubic with t3 Eckardt points; t_2 + 3 t_3 = 135.
inline IncidenceProfile cubic_profile(int t3) {
    if (t3 < 0 || t3 > 18) throw InvalidInput("cubic surfaces have between 0 and 18 Eckardt points");
    return {3, 27, {{2, 135 - 3 * static_cast<std::int64_t>(t3)}, {3, t3}}};
}

/// 16 lines of the Fermat quartic meeting only in 8 quadruple points.
inline IncidenceProfile bauer_profile() { return {4, 16, {{4, 8}}}; }

} // namespace surflines
