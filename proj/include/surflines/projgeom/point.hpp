#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "surflines/errors.hpp"
#include "surflines/exactnum/cyclotomic.hpp"

namespace surflines {

/// Point of P^3 over Q(zeta_m), normalized so the first nonzero coordinate is 1.
class ProjPoint {
public:
    using Coords = std::array<CycloNum, 4>;

    /// Rescales homogeneous coordinates into canonical form.
    static ProjPoint normalize(Coords coords) {
        const auto m = coords[0].conductor();
        for (const auto& c : coords) {
            if (c.conductor() != m) throw FieldMismatch("point coordinates over different cyclotomic fields");
        }
        std::size_t lead = 0;
        while (lead < 4 && coords[lead].is_zero()) ++lead;
        if (lead == 4) throw InvalidInput("all homogeneous coordinates are zero");
        if (!coords[lead].is_one()) {
            const CycloNum scale = coords[lead].inverse();
            for (std::size_t i = lead; i < 4; ++i) coords[i] = coords[i] * scale;
        }
        return ProjPoint(std::move(coords));
    }

    [[nodiscard]] const Coords& coords() const { return coords_; }
    [[nodiscard]] const CycloNum& operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] std::uint32_t conductor() const { return coords_[0].conductor(); }

    friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
    friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
        for (std::size_t i = 0; i < 4; ++i) {
            if (auto c = a.coords_[i] <=> b.coords_[i]; c != 0) return c;
        }
        return std::strong_ordering::equal;
    }

    [[nodiscard]] std::string str() const {
        return "(" + coords_[0].str() + " : " + coords_[1].str() + " : " + coords_[2].str() + " : " +
               coords_[3].str() + ")";
    }

private:
    explicit ProjPoint(Coords coords) : coords_(std::move(coords)) {}
    Coords coords_;
};

inline ProjPoint normalize_point(ProjPoint::Coords coords) { return ProjPoint::normalize(std::move(coords)); }

} // namespace surflines
