#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "surflines/catalog/catalog.hpp"
#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/harbourne/harbourne.hpp"

namespace surflines {

/// An abstract t-vector that passes the counting and Miyaoka constraints.
/// Nothing guarantees that a line configuration with this profile exists.
struct ExtremalCandidate {
    IncidenceProfile profile;
    std::optional<Rational> h_linear; ///< empty when s = 0
    MiyaokaCheck miyaoka;
};

namespace detail {

struct RawCandidate {
    std::vector<std::int64_t> t; ///< t[i] = t_{i+2}
    std::int64_t numerator;      ///< L~^2
    std::int64_t s;
};

/// Orders by H_L ascending (cross-multiplied, s > 0), undefined values last,
/// then by the t-vector.
inline bool raw_less(const RawCandidate& a, const RawCandidate& b) {
    if ((a.s == 0) != (b.s == 0)) return b.s == 0;
    if (a.s != 0) {
        const auto lhs = static_cast<__int128>(a.numerator) * b.s;
        const auto rhs = static_cast<__int128>(b.numerator) * a.s;
        if (lhs != rhs) return lhs < rhs;
    }
    return a.t < b.t;
}

} // namespace detail

/// Enumerates every t-vector with keys 2..k_max satisfying
/// sum (k^2 - k) t_k <= d(d - 1) and Miyaoka's inequality, sorted by H_L.
/// When limit > 0 only the `limit` lowest entries are kept.
inline std::vector<ExtremalCandidate> extremal_profile_search(int n, std::int64_t d, int k_max,
                                                              std::size_t limit = 0) {
    require_miyaoka_range(n);
    if (d < 0) throw InvalidInput("line count must be non-negative");
    if (d > max_lines_bound(n))
        throw InvalidInput("infeasible parameters: d = " + std::to_string(d) + " exceeds n(7n - 12) = " +
                           std::to_string(max_lines_bound(n)));
    if (k_max < 2) throw InvalidInput("infeasible parameters: k_max must be >= 2");
    const int top = static_cast<int>(std::min<std::int64_t>(k_max, d));
    const std::int64_t budget = d * (d - 1);
    const std::int64_t nd = static_cast<std::int64_t>(n) * d;
    const std::int64_t rhs = miyaoka_rhs(n);
    const std::int64_t self = line_self_intersection(n) * d;
    constexpr std::size_t unlimited_cap = 2'000'000;

    std::vector<detail::RawCandidate> kept;
    std::vector<std::int64_t> t(static_cast<std::size_t>(std::max(0, top - 1)), 0);

    auto offer = [&](detail::RawCandidate c) {
        if (limit == 0) {
            if (kept.size() >= unlimited_cap)
                throw InvalidInput("extremal search produced more than " + std::to_string(unlimited_cap) +
                                   " profiles; pass a result limit");
            kept.push_back(std::move(c));
            return;
        }
        // max-heap on raw_less keeps the `limit` smallest
        if (kept.size() < limit) {
            kept.push_back(std::move(c));
            std::push_heap(kept.begin(), kept.end(), detail::raw_less);
        } else if (detail::raw_less(c, kept.front())) {
            std::pop_heap(kept.begin(), kept.end(), detail::raw_less);
            kept.back() = std::move(c);
            std::push_heap(kept.begin(), kept.end(), detail::raw_less);
        }
    };

    // Depth-first over k = top..2 with the remaining pair budget.
    auto walk = [&](auto&& self_ref, int k, std::int64_t remaining, std::int64_t miyaoka_lhs, std::int64_t s,
                    std::int64_t weighted) -> void {
        if (k < 2) {
            if (miyaoka_lhs <= rhs) offer({t, self - weighted, s});
            return;
        }
        const std::int64_t cost = static_cast<std::int64_t>(k) * (k - 1);
        const std::int64_t miyaoka_coeff = k == 2 ? -1 : k - 4;
        for (std::int64_t c = 0; c * cost <= remaining; ++c) {
            t[static_cast<std::size_t>(k - 2)] = c;
            self_ref(self_ref, k - 1, remaining - c * cost, miyaoka_lhs + miyaoka_coeff * c, s + c,
                     weighted + k * c);
        }
        t[static_cast<std::size_t>(k - 2)] = 0;
    };
    walk(walk, top, budget, nd, 0, 0);

    std::sort(kept.begin(), kept.end(), detail::raw_less);
    std::vector<ExtremalCandidate> out;
    out.reserve(kept.size());
    for (const auto& raw : kept) {
        std::map<int, std::int64_t> tk;
        for (std::size_t i = 0; i < raw.t.size(); ++i)
            if (raw.t[i] != 0) tk[static_cast<int>(i) + 2] = raw.t[i];
        IncidenceProfile profile(n, d, std::move(tk));
        std::optional<Rational> value;
        if (raw.s > 0) value = harbourne_linear(profile);
        out.push_back({profile, value, miyaoka_check(profile)});
    }
    return out;
}

} // namespace surflines
