#pragma once

#include <algorithm>
#include <ostream>
#include <string>
#include <vector>

namespace surflines::cli {

/// Rows of strings rendered either as an aligned text table or as CSV.
class Table {
public:
    explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}

    void add(std::vector<std::string> row) {
        row.resize(header_.size());
        rows_.push_back(std::move(row));
    }

    [[nodiscard]] const std::vector<std::vector<std::string>>& rows() const { return rows_; }

    void print_text(std::ostream& os) const {
        std::vector<std::size_t> width(header_.size());
        for (std::size_t c = 0; c < header_.size(); ++c) {
            width[c] = header_[c].size();
            for (const auto& r : rows_) width[c] = std::max(width[c], r[c].size());
        }
        auto line = [&](const std::vector<std::string>& cells) {
            std::string out;
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != 0) out += "  ";
                out += cells[c];
                if (c + 1 < cells.size()) out.append(width[c] - cells[c].size(), ' ');
            }
            os << out << '\n';
        };
        line(header_);
        std::vector<std::string> rule;
        for (auto w : width) rule.emplace_back(w, '-');
        line(rule);
        for (const auto& r : rows_) line(r);
    }

    void print_csv(std::ostream& os) const {
        auto line = [&](const std::vector<std::string>& cells) {
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != 0) os << ',';
                os << csv_field(cells[c]);
            }
            os << '\n';
        };
        line(header_);
        for (const auto& r : rows_) line(r);
    }

private:
    static std::string csv_field(const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string out = "\"";
        for (char ch : s) {
            if (ch == '"') out += '"';
            out += ch;
        }
        return out + "\"";
    }

    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

} // namespace surflines::cli
