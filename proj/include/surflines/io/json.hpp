#pragma once

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "surflines/catalog/arrangement.hpp"
#include "surflines/catalog/catalog.hpp"
#include "surflines/catalog/profile.hpp"
#include "surflines/errors.hpp"
#include "surflines/exactnum/cyclotomic.hpp"
#include "surflines/exactnum/rational.hpp"
#include "surflines/harbourne/harbourne.hpp"
#include "surflines/incidence/incidence.hpp"

namespace surflines::io {

using nlohmann::json;

/// Malformed input text or a document that does not follow the schema.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline json rational_to_json(const Rational& r) { return r.str(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (!j.is_string()) throw FormatError("rational must be a \"p/q\" string or an integer");
    try {
        return Rational::parse(j.get<std::string>());
    } catch (const Error& e) {
        throw FormatError(e.what());
    }
}

inline json cyclo_to_json(const CycloNum& x) {
    json coeffs = json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(c.str());
    return {{"m", x.conductor()}, {"coeffs", coeffs}};
}

inline CycloNum cyclo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("m") || !j.contains("coeffs") || !j["m"].is_number_integer() ||
        !j["coeffs"].is_array())
        throw FormatError("cyclotomic number must be {\"m\": int, \"coeffs\": [\"p/q\", ...]}");
    const auto m = j["m"].get<std::int64_t>();
    if (m < 1 || m > 100000) throw FormatError("conductor m out of range: " + std::to_string(m));
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rational_from_json(c));
    return {CyclotomicField::of(static_cast<std::uint32_t>(m)), std::move(coeffs)};
}

inline json point_to_json(const ProjPoint& p) {
    json out = json::array();
    for (const auto& c : p.coords()) out.push_back(cyclo_to_json(c));
    return out;
}

inline ProjPoint point_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw FormatError("point must be an array of 4 cyclotomic numbers");
    return normalize_point({cyclo_from_json(j[0]), cyclo_from_json(j[1]), cyclo_from_json(j[2]),
                            cyclo_from_json(j[3])});
}

inline json profile_to_json(const IncidenceProfile& p) {
    json t = json::object();
    for (auto [k, c] : p.t()) t[std::to_string(k)] = c;
    return {{"n", p.degree()}, {"d", p.lines()}, {"t", t}};
}

/// Reads {n, d, t: {k: count}} and enforces the profile invariants plus d <= n(7n - 12).
inline IncidenceProfile profile_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("d") || !j["n"].is_number_integer() ||
        !j["d"].is_number_integer())
        throw FormatError("profile must be {\"n\": int, \"d\": int, \"t\": {k: count}}");
    std::map<int, std::int64_t> t;
    if (j.contains("t")) {
        if (!j["t"].is_object()) throw FormatError("profile field t must be an object {k: count}");
        for (const auto& [key, value] : j["t"].items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw FormatError("profile multiplicity key is not an integer: '" + key + "'");
            }
            if (!value.is_number_integer()) throw FormatError("profile count for k = " + key + " is not an integer");
            t[k] = value.get<std::int64_t>();
        }
    }
    const auto n = j["n"].get<std::int64_t>();
    if (n < 3 || n > IncidenceProfile::max_degree)
        throw InvalidInput("surface degree n = " + std::to_string(n) + " must be >= 3");
    IncidenceProfile profile(static_cast<int>(n), j["d"].get<std::int64_t>(), std::move(t));
    if (profile.lines() > max_lines_bound(profile.degree()))
        throw InvalidInput("line count d = " + std::to_string(profile.lines()) + " exceeds the bound n(7n - 12) = " +
                           std::to_string(max_lines_bound(profile.degree())));
    return profile;
}

inline json arrangement_to_json(const Arrangement& arr) {
    json lines = json::array();
    for (const auto& l : arr.lines()) lines.push_back(json::array({point_to_json(l.first()), point_to_json(l.second())}));
    return {{"n", arr.surface_degree()}, {"lines", lines}, {"labels", arr.labels()}};
}

/// Reads {n, lines: [[point4, point4], ...]}; labels are optional.
inline Arrangement arrangement_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("lines") ||
        !j["lines"].is_array())
        throw FormatError("lines file must be {\"n\": int, \"lines\": [[point4, point4], ...]}");
    const auto n = j["n"].get<std::int64_t>();
    if (n < 3 || n > IncidenceProfile::max_degree)
        throw InvalidInput("surface degree n = " + std::to_string(n) + " must be >= 3");
    std::vector<ProjLine> lines;
    for (const auto& pair : j["lines"]) {
        if (!pair.is_array() || pair.size() != 2) throw FormatError("each line must be a pair of points");
        lines.push_back(line_through(point_from_json(pair[0]), point_from_json(pair[1])));
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    Arrangement arr(static_cast<int>(n), std::move(lines), std::move(labels));
    if (static_cast<std::int64_t>(arr.size()) > max_lines_bound(arr.surface_degree()))
        throw InvalidInput("line count d = " + std::to_string(arr.size()) + " exceeds the bound n(7n - 12) = " +
                           std::to_string(max_lines_bound(arr.surface_degree())));
    return arr;
}

inline json singular_point_to_json(const SingularPoint& p) {
    return {{"point", point_to_json(p.location)}, {"multiplicity", p.multiplicity()}, {"lines", p.lines}};
}

/// Exact rationals as "p/q" next to a rendered decimal.
inline json report_to_json(const HarbourneReport& r, int places, RoundingMode mode) {
    auto exact_and_decimal = [&](const std::optional<Rational>& v) -> json {
        if (!v) return nullptr;
        return {{"exact", v->str()}, {"decimal", v->to_decimal(places, mode)}};
    };
    auto opt_int = [](const std::optional<std::int64_t>& v) -> json { return v ? json(*v) : json(nullptr); };
    return {
        {"profile", profile_to_json(r.profile)},
        {"s", r.s},
        {"incidences", r.incidences},
        {"strict_transform_sq", exact_and_decimal(r.strict_transform_sq)},
        {"h_linear", exact_and_decimal(r.h_linear)},
        {"miyaoka", {{"lhs", opt_int(r.miyaoka_lhs)}, {"rhs", opt_int(r.miyaoka_rhs)}, {"status", to_string(r.miyaoka)}}},
        {"main_bound", exact_and_decimal(r.main_bound)},
        {"main_theorem", to_string(r.main_theorem)},
        {"theorem_a", {{"rhs", opt_int(r.theorem_a_rhs)}, {"status", to_string(r.theorem_a)}}},
    };
}

inline json parse_document(const std::string& text, const std::string& origin) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw FormatError(origin + ": " + e.what());
    }
}

inline json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str(), path);
}

inline IncidenceProfile load_custom_profile(const std::string& path) { return profile_from_json(read_file(path)); }

inline Arrangement load_custom_lines(const std::string& path) {
    try {
        return arrangement_from_json(read_file(path));
    } catch (const json::exception& e) {
        throw FormatError(path + ": " + e.what());
    }
}

} // namespace surflines::io
