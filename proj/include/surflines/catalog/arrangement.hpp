#pragma once

#include <algorithm>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "surflines/errors.hpp"
#include "surflines/projgeom/line.hpp"

namespace surflines {

/// Finite set of pairwise distinct lines over one cyclotomic field, tagged
/// with the degree of the surface that carries them.
class Arrangement {
public:
    Arrangement(int surface_degree, std::vector<ProjLine> lines, std::vector<std::string> labels = {})
        : degree_(surface_degree), lines_(std::move(lines)), labels_(std::move(labels)) {
        if (degree_ < 1) throw InvalidInput("surface degree must be positive");
        if (!labels_.empty() && labels_.size() != lines_.size())
            throw InvalidInput("arrangement labels do not match the line count");
        if (labels_.empty()) {
            for (std::size_t i = 0; i < lines_.size(); ++i) labels_.push_back("L" + std::to_string(i));
        }
        std::set<ProjLine::Plucker> seen;
        for (std::size_t i = 0; i < lines_.size(); ++i) {
            if (lines_[i].conductor() != lines_.front().conductor())
                throw FieldMismatch("arrangement mixes cyclotomic fields");
            if (!seen.insert(lines_[i].plucker()).second)
                throw InvalidInput("distinctness violated: line " + std::to_string(i) + " repeats an earlier line");
        }
    }

    [[nodiscard]] int surface_degree() const { return degree_; }
    [[nodiscard]] std::size_t size() const { return lines_.size(); }
    [[nodiscard]] bool empty() const { return lines_.empty(); }
    [[nodiscard]] const std::vector<ProjLine>& lines() const { return lines_; }
    [[nodiscard]] const ProjLine& operator[](std::size_t i) const { return lines_[i]; }
    [[nodiscard]] const std::vector<std::string>& labels() const { return labels_; }

    [[nodiscard]] Arrangement subset(std::span<const std::size_t> indices) const {
        std::vector<ProjLine> lines;
        std::vector<std::string> labels;
        for (auto i : indices) {
            lines.push_back(lines_.at(i));
            labels.push_back(labels_.at(i));
        }
        return {degree_, std::move(lines), std::move(labels)};
    }

private:
    int degree_;
    std::vector<ProjLine> lines_;
    std::vector<std::string> labels_;
};

} // namespace surflines
