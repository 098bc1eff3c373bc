#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "surflines/errors.hpp"
#include "surflines/exactnum/cyclotomic.hpp"
#include "surflines/exactnum/linalg.hpp"
#include "surflines/projgeom/point.hpp"

namespace surflines {

/// Line of P^3 spanned by two distinct points.
///
/// Plucker coordinates are ordered (p01, p02, p03, p12, p13, p23) with
/// p_ij = a_i b_j - a_j b_i, scaled so the first nonzero one is 1; they are
/// the identity of the line. The two defining linear forms come from the
/// reduced echelon form of the spanning matrix, so they too depend only on
/// the line and not on the chosen base points.
class ProjLine {
public:
    using Plucker = std::array<CycloNum, 6>;
    using LinearForm = std::array<CycloNum, 4>;

    static ProjLine through(const ProjPoint& p, const ProjPoint& q) {
        if (p.conductor() != q.conductor()) throw FieldMismatch("line through points over different fields");
        if (p == q) throw InvalidInput("line through coincident points");
        return ProjLine(p, q);
    }

    [[nodiscard]] const ProjPoint& first() const { return first_; }
    [[nodiscard]] const ProjPoint& second() const { return second_; }
    [[nodiscard]] const Plucker& plucker() const { return plucker_; }
    [[nodiscard]] const std::array<LinearForm, 2>& equations() const { return equations_; }
    [[nodiscard]] std::uint32_t conductor() const { return first_.conductor(); }

    [[nodiscard]] bool contains(const ProjPoint& pt) const {
        for (const auto& form : equations_) {
            if (!evaluate(form, pt.coords()).is_zero()) return false;
        }
        return true;
    }

    static CycloNum evaluate(const LinearForm& form, const ProjPoint::Coords& x) {
        CycloNum acc = form[0] * x[0];
        for (std::size_t i = 1; i < 4; ++i) acc += form[i] * x[i];
        return acc;
    }

    friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.plucker_ == b.plucker_; }
    friend std::strong_ordering operator<=>(const ProjLine& a, const ProjLine& b) {
        for (std::size_t i = 0; i < 6; ++i) {
            if (auto c = a.plucker_[i] <=> b.plucker_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::string str() const { return "[" + first_.str() + ", " + second_.str() + "]"; }

private:
    ProjLine(ProjPoint p, ProjPoint q)
        : first_(std::move(p)), second_(std::move(q)), plucker_(compute_plucker(first_, second_)),
          equations_(compute_equations(first_, second_)) {
        const CycloNum relation = plucker_[0] * plucker_[5] - plucker_[1] * plucker_[4] + plucker_[2] * plucker_[3];
        if (!relation.is_zero()) throw Error("Plucker relation violated");
    }

    static Plucker compute_plucker(const ProjPoint& p, const ProjPoint& q) {
        auto minor = [&](std::size_t i, std::size_t j) { return p[i] * q[j] - p[j] * q[i]; };
        Plucker pl{minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};
        std::size_t lead = 0;
        while (lead < 6 && pl[lead].is_zero()) ++lead;
        if (lead == 6) throw InvalidInput("line through coincident points");
        if (!pl[lead].is_one()) {
            const CycloNum scale = pl[lead].inverse();
            for (std::size_t i = lead; i < 6; ++i) pl[i] = pl[i] * scale;
        }
        return pl;
    }

    static std::array<LinearForm, 2> compute_equations(const ProjPoint& p, const ProjPoint& q) {
        Matrix<CycloNum> span{{p[0], p[1], p[2], p[3]}, {q[0], q[1], q[2], q[3]}};
        auto basis = kernel(std::move(span));
        if (basis.size() != 2) throw Error("spanning matrix of a line must have rank 2");
        return {LinearForm{basis[0][0], basis[0][1], basis[0][2], basis[0][3]},
                LinearForm{basis[1][0], basis[1][1], basis[1][2], basis[1][3]}};
    }

    ProjPoint first_;
    ProjPoint second_;
    Plucker plucker_;
    std::array<LinearForm, 2> equations_;
};

inline ProjLine line_through(const ProjPoint& p, const ProjPoint& q) { return ProjLine::through(p, q); }

inline bool point_on_line(const ProjPoint& pt, const ProjLine& l) { return l.contains(pt); }

/// Bilinear Plucker pairing; vanishes exactly when the two lines are coplanar.
inline CycloNum plucker_pairing(const ProjLine& a, const ProjLine& b) {
    const auto& x = a.plucker();
    const auto& y = b.plucker();
    return x[0] * y[5] - x[1] * y[4] + x[2] * y[3] + x[5] * y[0] - x[4] * y[1] + x[3] * y[2];
}

/// Common point of two distinct lines, or nullopt when they are skew.
inline std::optional<ProjPoint> line_intersection(const ProjLine& a, const ProjLine& b) {
    if (a == b) throw InvalidInput("line_intersection of identical lines");
    if (!plucker_pairing(a, b).is_zero()) return std::nullopt;
    Matrix<CycloNum> system;
    for (const auto* l : {&a, &b}) {
        for (const auto& form : l->equations()) system.emplace_back(form.begin(), form.end());
    }
    auto solutions = kernel(std::move(system));
    if (solutions.size() != 1) throw Error("coplanar distinct lines must meet in exactly one point");
    auto& v = solutions.front();
    return ProjPoint::normalize({v[0], v[1], v[2], v[3]});
}

} // namespace surflines
