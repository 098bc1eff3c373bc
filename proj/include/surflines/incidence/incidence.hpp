#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "surflines/catalog/arrangement.hpp"
#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/projgeom/line.hpp"

namespace surflines {

/// A point where at least two lines of an arrangement meet.
struct SingularPoint {
    ProjPoint location;
    std::vector<std::size_t> lines; ///< sorted indices into the arrangement

    [[nodiscard]] std::size_t multiplicity() const { return lines.size(); }
};

namespace detail {

struct PairScan {
    std::map<ProjPoint, std::set<std::size_t>> meetings;
    std::int64_t intersecting_pairs = 0;
};

inline void scan_rows(const Arrangement& arr, std::size_t stride, std::size_t offset, PairScan& out) {
    const std::size_t d = arr.size();
    for (std::size_t i = offset; i < d; i += stride) {
        for (std::size_t j = i + 1; j < d; ++j) {
            auto pt = line_intersection(arr[i], arr[j]);
            if (!pt) continue;
            ++out.intersecting_pairs;
            auto& members = out.meetings[*pt];
            members.insert(i);
            members.insert(j);
        }
    }
}

/// All d(d-1)/2 pair intersections, grouped by canonical point. Rows are dealt
/// round-robin to the workers and merged by key, so the result does not
/// depend on the thread count.
inline PairScan scan_pairs(const Arrangement& arr, unsigned threads) {
    threads = std::max(1U, threads);
    std::vector<PairScan> partial(threads);
    if (threads == 1) {
        scan_rows(arr, 1, 0, partial[0]);
    } else {
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t)
            workers.emplace_back([&, t] { scan_rows(arr, threads, t, partial[t]); });
        for (auto& w : workers) w.join();
    }
    PairScan merged = std::move(partial[0]);
    for (unsigned t = 1; t < threads; ++t) {
        merged.intersecting_pairs += partial[t].intersecting_pairs;
        for (auto& [pt, members] : partial[t].meetings) merged.meetings[pt].insert(members.begin(), members.end());
    }
    return merged;
}

inline std::vector<SingularPoint> collect_points(const Arrangement& arr, const PairScan& scan) {
    std::vector<SingularPoint> points;
    points.reserve(scan.meetings.size());
    for (const auto& [pt, members] : scan.meetings) {
        // Recount through every line; a line through pt meets the others there,
        // so the recount must agree with the pair union.
        SingularPoint sp{pt, {}};
        for (std::size_t i = 0; i < arr.size(); ++i) {
            if (point_on_line(pt, arr[i])) sp.lines.push_back(i);
        }
        if (!std::equal(sp.lines.begin(), sp.lines.end(), members.begin(), members.end()))
            throw Error("incidence recount disagrees with the pair scan at " + pt.str());
        points.push_back(std::move(sp));
    }
    return points;
}

} // namespace detail

/// Singular locus of the arrangement, sorted by canonical point.
inline std::vector<SingularPoint> singular_points(const Arrangement& arr, unsigned threads = 1) {
    return detail::collect_points(arr, detail::scan_pairs(arr, threads));
}

inline IncidenceProfile profile_from_points(const Arrangement& arr, const std::vector<SingularPoint>& points) {
    std::map<int, std::int64_t> t;
    for (const auto& p : points) ++t[static_cast<int>(p.multiplicity())];
    return {arr.surface_degree(), static_cast<std::int64_t>(arr.size()), std::move(t)};
}

inline IncidenceProfile profile_from_arrangement(const Arrangement& arr, unsigned threads = 1) {
    return profile_from_points(arr, singular_points(arr, threads));
}

/// I_d = sum (k^2 - k) t_k, twice the number of intersecting line pairs.
inline std::int64_t incidence_count(const IncidenceProfile& p) {
    std::int64_t sum = 0;
    for (auto [k, c] : p.t()) sum += static_cast<std::int64_t>(k) * (k - 1) * c;
    return sum;
}

/// Whether the profile is compatible with every line meeting exactly v others.
inline bool valency_consistent(const IncidenceProfile& p, std::int64_t valency) {
    if (valency < 0) throw InvalidInput("valency must be non-negative");
    return incidence_count(p) == p.lines() * valency;
}

struct IdentityCheck {
    std::string name;
    std::int64_t lhs;
    std::int64_t rhs;
    [[nodiscard]] bool holds() const { return lhs == rhs; }
};

struct IdentityReport {
    IncidenceProfile profile;
    std::int64_t intersecting_pairs;
    std::vector<IdentityCheck> checks;

    [[nodiscard]] bool all_hold() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.holds(); });
    }
};

/// Checks the counting identities for the singular locus against an
/// independent tally of the pair scan.
inline IdentityReport verify_identities(const Arrangement& arr, unsigned threads = 1) {
    const auto scan = detail::scan_pairs(arr, threads);
    const auto points = detail::collect_points(arr, scan);
    const auto profile = profile_from_points(arr, points);

    std::int64_t multiplicity_sum = 0;
    std::int64_t pairs_at_points = 0;
    for (const auto& p : points) {
        const auto m = static_cast<std::int64_t>(p.multiplicity());
        multiplicity_sum += m;
        pairs_at_points += m * (m - 1) / 2;
    }
    IdentityReport report{profile, scan.intersecting_pairs, {}};
    report.checks.push_back({"sum of multiplicities = sum k t_k", multiplicity_sum, profile.weighted_multiplicity()});
    report.checks.push_back({"distinct points = sum t_k", static_cast<std::int64_t>(points.size()),
                             profile.singular_points()});
    report.checks.push_back({"sum C(mult, 2) = intersecting pairs", pairs_at_points, scan.intersecting_pairs});
    report.checks.push_back({"I_d = 2 * intersecting pairs", incidence_count(profile), 2 * scan.intersecting_pairs});
    return report;
}

} // namespace surflines
