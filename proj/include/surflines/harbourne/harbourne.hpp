#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/exactnum/rational.hpp"
#include "surflines/incidence/incidence.hpp"

namespace surflines {

/// l^2 = 2 - n for a line on a smooth degree-n surface (adjunction).
inline std::int64_t line_self_intersection(int n) {
    if (n < 3) throw InvalidInput("line self-intersection is only modelled for n >= 3");
    return 2 - static_cast<std::int64_t>(n);
}

/// Self-intersection of the strict transform after blowing up the singular points:
/// (2 - n) d + I_d - sum k^2 t_k. The cancelled form (2 - n) d - sum k t_k is
/// evaluated as well and the two must agree.
inline Rational strict_transform_sq(const IncidenceProfile& p) {
    const std::int64_t base = line_self_intersection(p.degree()) * p.lines();
    const std::int64_t full = base + incidence_count(p) - p.squared_multiplicity();
    const std::int64_t reduced = base - p.weighted_multiplicity();
    if (full != reduced) throw Error("strict transform identity failed");
    return Rational(full);
}

/// H_L = L~^2 / s.
inline Rational harbourne_linear(const IncidenceProfile& p) {
    const auto s = p.singular_points();
    if (s == 0) throw UndefinedValueError("linear Harbourne constant undefined: no singular points (s = 0)");
    return strict_transform_sq(p) / Rational(s);
}

struct MiyaokaCheck {
    std::int64_t lhs;
    std::int64_t rhs;
    bool holds;
};

inline void require_miyaoka_range(int n) {
    if (n < 4) throw InapplicableError("Miyaoka theorem requires n >= 4 (got n = " + std::to_string(n) + ")");
}

inline std::int64_t miyaoka_rhs(int n) {
    const std::int64_t nn = n;
    return 2 * nn * (nn - 1) * (nn - 1);
}

/// n d - t_2 + sum_{k>=3} (k - 4) t_k  <=  2 n (n - 1)^2.
inline MiyaokaCheck miyaoka_check(const IncidenceProfile& p) {
    require_miyaoka_range(p.degree());
    std::int64_t lhs = static_cast<std::int64_t>(p.degree()) * p.lines() - p.count(2);
    for (auto [k, c] : p.t()) {
        if (k >= 3) lhs += static_cast<std::int64_t>(k - 4) * c;
    }
    const auto rhs = miyaoka_rhs(p.degree());
    return {lhs, rhs, lhs <= rhs};
}

/// Lower bound -4 + (2d + t_2 - 2n(n-1)^2) / s for H_L.
inline Rational main_theorem_bound(const IncidenceProfile& p) {
    require_miyaoka_range(p.degree());
    const auto s = p.singular_points();
    if (s == 0) throw UndefinedValueError("main theorem bound undefined: no singular points (s = 0)");
    return Rational(-4) + Rational(2 * p.lines() + p.count(2) - miyaoka_rhs(p.degree())) / Rational(s);
}

/// Right side of the coarse form L~^2 > -4s - 2n(n-1)^2.
inline std::int64_t theorem_a_rhs(const IncidenceProfile& p) {
    require_miyaoka_range(p.degree());
    return -4 * p.singular_points() - miyaoka_rhs(p.degree());
}

/// -3n^2 / (n^2 + 2): H_L of the 3n^2 Fermat lines in closed form.
inline Rational fermat_h_closed(int n) {
    if (n < 3) throw InvalidInput("fermat_h_closed requires n >= 3");
    const std::int64_t nn = n;
    return Rational(-3 * nn * nn) / Rational(nn * nn + 2);
}

/// -n^3 / (2n^2 - 4n + 4): H_L of the Rams grid.
inline Rational rams_h_closed(int n) {
    if (n < 6) throw InvalidInput("rams_h_closed requires n >= 6");
    const std::int64_t nn = n;
    return Rational(-nn * nn * nn) / Rational(2 * nn * nn - 4 * nn + 4);
}

/// (-297 + 3t) / (135 - 2t): H_L of the 27 lines on a cubic with t Eckardt points.
inline Rational cubic_h(int t) {
    if (t < 0 || t > 18) throw InvalidInput("cubic surfaces have between 0 and 18 Eckardt points");
    return Rational(-297 + 3 * t) / Rational(135 - 2 * t);
}

enum class Verdict { holds, fails, inapplicable };

inline std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    default: return "inapplicable";
    }
}

/// Everything the library derives from one incidence profile.
/// Optional members are empty where the quantity is undefined (s = 0) or the
/// theorem does not apply (n < 4).
struct HarbourneReport {
    IncidenceProfile profile;
    std::int64_t s = 0;
    std::int64_t incidences = 0;
    Rational strict_transform_sq;
    std::optional<Rational> h_linear;
    std::optional<std::int64_t> miyaoka_lhs;
    std::optional<std::int64_t> miyaoka_rhs;
    Verdict miyaoka = Verdict::inapplicable;
    std::optional<Rational> main_bound;
    Verdict main_theorem = Verdict::inapplicable; ///< H_L >= main_bound
    std::optional<std::int64_t> theorem_a_rhs;
    Verdict theorem_a = Verdict::inapplicable;    ///< L~^2 > -4s - 2n(n-1)^2
};

inline HarbourneReport analyze(const IncidenceProfile& p) {
    HarbourneReport r{p, 0, 0, Rational(0), {}, {}, {}, Verdict::inapplicable, {}, Verdict::inapplicable, {}, Verdict::inapplicable};
    r.s = p.singular_points();
    r.incidences = incidence_count(p);
    r.strict_transform_sq = strict_transform_sq(p);
    if (r.s > 0) r.h_linear = r.strict_transform_sq / Rational(r.s);
    if (p.degree() >= 4) {
        const auto m = miyaoka_check(p);
        r.miyaoka_lhs = m.lhs;
        r.miyaoka_rhs = m.rhs;
        r.miyaoka = m.holds ? Verdict::holds : Verdict::fails;
        r.theorem_a_rhs = theorem_a_rhs(p);
        r.theorem_a = r.strict_transform_sq > Rational(*r.theorem_a_rhs) ? Verdict::holds : Verdict::fails;
        if (r.s > 0) {
            r.main_bound = main_theorem_bound(p);
            r.main_theorem = *r.h_linear >= *r.main_bound ? Verdict::holds : Verdict::fails;
        }
    }
    return r;
}

} // namespace surflines
