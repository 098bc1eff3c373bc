#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "surflines/errors.hpp"

namespace surflines {

/// Combinatorial summary of a line configuration on a degree-n surface:
/// d lines and t_k points where exactly k of them meet (k >= 2).
/// Zero counts are never stored, so equal profiles compare equal.
class IncidenceProfile {
public:
    static constexpr int max_degree = 100000;
    static constexpr std::int64_t max_lines = 1000000;

    IncidenceProfile(int degree, std::int64_t lines, std::map<int, std::int64_t> t = {})
        : degree_(degree), lines_(lines) {
        for (auto [k, count] : t) {
            if (count != 0) t_[k] = count;
            else if (k < 2) throw InvalidInput("multiplicity key " + std::to_string(k) + " must be >= 2");
        }
        validate();
    }

    [[nodiscard]] int degree() const { return degree_; }
    [[nodiscard]] std::int64_t lines() const { return lines_; }
    [[nodiscard]] const std::map<int, std::int64_t>& t() const { return t_; }
    [[nodiscard]] std::int64_t count(int k) const {
        auto it = t_.find(k);
        return it == t_.end() ? 0 : it->second;
    }
    /// s, the number of singular points.
    [[nodiscard]] std::int64_t singular_points() const {
        std::int64_t s = 0;
        for (auto [k, c] : t_) s += c;
        return s;
    }
    /// sum of k * t_k: total line-through-point incidences at singular points.
    [[nodiscard]] std::int64_t weighted_multiplicity() const {
        std::int64_t sum = 0;
        for (auto [k, c] : t_) sum += static_cast<std::int64_t>(k) * c;
        return sum;
    }
    [[nodiscard]] std::int64_t squared_multiplicity() const {
        std::int64_t sum = 0;
        for (auto [k, c] : t_) sum += static_cast<std::int64_t>(k) * k * c;
        return sum;
    }

    /// "2:81;3:18", the compact t-vector form used in CSV output.
    [[nodiscard]] std::string t_string() const {
        std::string out;
        for (auto [k, c] : t_) {
            if (!out.empty()) out += ";";
            out += std::to_string(k) + ":" + std::to_string(c);
        }
        return out;
    }

    friend bool operator==(const IncidenceProfile&, const IncidenceProfile&) = default;

private:
    void validate() const {
        if (degree_ < 3 || degree_ > max_degree)
            throw InvalidInput("surface degree n = " + std::to_string(degree_) + " outside [3, " +
                               std::to_string(max_degree) + "]");
        if (lines_ < 0 || lines_ > max_lines)
            throw InvalidInput("line count d = " + std::to_string(lines_) + " outside [0, " +
                               std::to_string(max_lines) + "]");
        using boost::multiprecision::cpp_int;
        cpp_int pairs = 0;
        for (auto [k, c] : t_) {
            if (k < 2 || k > lines_)
                throw InvalidInput("multiplicity k = " + std::to_string(k) + " violates 2 <= k <= d = " +
                                   std::to_string(lines_));
            if (c < 0) throw InvalidInput("negative count t_" + std::to_string(k));
            pairs += cpp_int(k) * (k - 1) * c;
        }
        if (pairs > cpp_int(lines_) * (lines_ - 1))
            throw InvalidInput("pair-count feasibility violated: sum (k^2 - k) t_k = " + pairs.str() +
                               " exceeds d(d - 1) = " + std::to_string(lines_ * (lines_ - 1)));
    }

    int degree_;
    std::int64_t lines_;
    std::map<int, std::int64_t> t_;
};

} // namespace surflines
