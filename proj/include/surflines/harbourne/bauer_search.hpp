#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "surflines/catalog/arrangement.hpp"
#include "surflines/errors.hpp"
#include "surflines/incidence/incidence.hpp"

namespace surflines {

/// A sub-arrangement whose lines meet only in quadruple points.
struct QuadrupleSubconfiguration {
    std::vector<std::size_t> lines;  ///< sorted indices into the ambient arrangement
    std::vector<std::size_t> points; ///< indices into the ambient singular points
};

namespace detail {

/// Backtracking over the ambient points of multiplicity >= 4. Choosing a point
/// means taking 4 of its lines; a point ends up valid when it carries either
/// exactly 4 chosen lines (and was chosen) or at most 1 chosen line.
class QuadrupleSearch {
public:
    QuadrupleSearch(const Arrangement& arr, const std::vector<SingularPoint>& points, std::size_t size,
                    std::size_t cap)
        : points_(points), size_(size), cap_(cap), on_line_(arr.size()), in_set_(arr.size(), false),
          count_(points.size(), 0), state_(points.size(), State::undecided) {
        for (std::size_t p = 0; p < points.size(); ++p) {
            for (auto l : points[p].lines) on_line_[l].push_back(p);
            if (points[p].multiplicity() >= 4) candidates_.push_back(p);
            else state_[p] = State::skipped; // can never become a quadruple point
        }
    }

    std::vector<QuadrupleSubconfiguration> run() {
        recurse();
        return std::move(found_);
    }

private:
    enum class State : std::uint8_t { undecided, chosen, skipped };

    [[nodiscard]] bool done() const { return cap_ != 0 && found_.size() >= cap_; }

    [[nodiscard]] bool point_ok(std::size_t p) const {
        switch (state_[p]) {
        case State::chosen: return count_[p] <= 4;
        case State::skipped: return count_[p] <= 1;
        default: return count_[p] <= 4;
        }
    }

    /// Adds the lines not yet present; returns them so the move can be undone.
    /// Sets ok to false if some point leaves its admissible range.
    std::vector<std::size_t> add_lines(const std::vector<std::size_t>& lines, bool& ok) {
        std::vector<std::size_t> added;
        ok = true;
        for (auto l : lines) {
            if (in_set_[l]) continue;
            in_set_[l] = true;
            added.push_back(l);
            for (auto p : on_line_[l]) {
                ++count_[p];
                if (!point_ok(p)) ok = false;
            }
        }
        if (chosen_lines_ + added.size() > size_) ok = false;
        chosen_lines_ += added.size();
        return added;
    }

    void remove_lines(const std::vector<std::size_t>& added) {
        for (auto l : added) {
            in_set_[l] = false;
            for (auto p : on_line_[l]) --count_[p];
        }
        chosen_lines_ -= added.size();
    }

    void try_choose(std::size_t p) {
        const auto& through = points_[p].lines;
        // Lines already selected through p must be part of the chosen 4.
        std::vector<std::size_t> forced;
        std::vector<std::size_t> optional;
        for (auto l : through) (in_set_[l] ? forced : optional).push_back(l);
        if (forced.size() > 4) return;
        const std::size_t need = 4 - forced.size();
        if (need > optional.size()) return;

        std::vector<bool> pick(optional.size(), false);
        std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(need), true);
        do {
            std::vector<std::size_t> lines;
            for (std::size_t i = 0; i < optional.size(); ++i)
                if (pick[i]) lines.push_back(optional[i]);
            state_[p] = State::chosen;
            chosen_points_.push_back(p);
            bool ok = false;
            auto added = add_lines(lines, ok);
            if (ok) recurse();
            remove_lines(added);
            chosen_points_.pop_back();
            state_[p] = State::undecided;
            if (done()) return;
        } while (std::prev_permutation(pick.begin(), pick.end()));
    }

    void recurse() {
        if (done()) return;
        // A point already carrying >= 2 selected lines has to become quadruple.
        for (auto p : candidates_) {
            if (state_[p] == State::undecided && count_[p] >= 2) {
                try_choose(p);
                return;
            }
        }
        if (chosen_lines_ == size_) {
            record();
            return;
        }
        auto next = std::find_if(candidates_.begin(), candidates_.end(),
                                 [&](auto p) { return state_[p] == State::undecided; });
        if (next == candidates_.end()) return;
        const std::size_t p = *next;
        try_choose(p);
        if (done()) return;
        state_[p] = State::skipped;
        if (point_ok(p)) recurse();
        state_[p] = State::undecided;
    }

    void record() {
        QuadrupleSubconfiguration sol;
        for (std::size_t l = 0; l < in_set_.size(); ++l)
            if (in_set_[l]) sol.lines.push_back(l);
        sol.points = chosen_points_;
        std::sort(sol.points.begin(), sol.points.end());
        found_.push_back(std::move(sol));
    }

    const std::vector<SingularPoint>& points_;
    std::size_t size_;
    std::size_t cap_;
    std::vector<std::vector<std::size_t>> on_line_; ///< singular points on each line
    std::vector<bool> in_set_;
    std::vector<int> count_;
    std::vector<State> state_;
    std::vector<std::size_t> candidates_;
    std::vector<std::size_t> chosen_points_;
    std::size_t chosen_lines_ = 0;
    std::vector<QuadrupleSubconfiguration> found_;
};

} // namespace detail

/// Subsets of `size` lines, each lying on a chosen ambient point of multiplicity
/// >= 4, whose induced arrangement has only quadruple points. Solutions come
/// out in a fixed search order; cap = 0 means all of them.
inline std::vector<QuadrupleSubconfiguration> bauer_search(const Arrangement& arr,
                                                            const std::vector<SingularPoint>& points,
                                                            std::size_t size, std::size_t cap = 1) {
    if (size < 2) throw InvalidInput("bauer_search needs size >= 2");
    if (size > arr.size()) return {};
    return detail::QuadrupleSearch(arr, points, size, cap).run();
}

inline std::vector<QuadrupleSubconfiguration> bauer_search(const Arrangement& arr, std::size_t size,
                                                            std::size_t cap = 1, unsigned threads = 1) {
    return bauer_search(arr, singular_points(arr, threads), size, cap);
}

} // namespace surflines
