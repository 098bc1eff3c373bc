#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "surflines/catalog/catalog.hpp"
#include "surflines/cli/format.hpp"
#include "surflines/errors.hpp"
#include "surflines/harbourne/bauer_search.hpp"
#include "surflines/harbourne/extremal_search.hpp"
#include "surflines/harbourne/harbourne.hpp"
#include "surflines/incidence/incidence.hpp"
#include "surflines/io/json.hpp"

namespace surflines::cli {

enum class Command { catalog, analyze, profile, verify, bound, sweep, search_bauer, search_extremal };
enum class Surface { fermat, rams, schur, cubic, custom };
enum class Format { table, csv, json };

/// Bad flag combination or missing argument; exit status 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Range {
    int first = 0;
    int last = 0;
};

/// "a:b", inclusive on both ends.
inline Range parse_range(const std::string& text) {
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            const int v = std::stoi(text);
            return {v, v};
        }
        std::size_t used_a = 0;
        std::size_t used_b = 0;
        const std::string a = text.substr(0, colon);
        const std::string b = text.substr(colon + 1);
        Range r{std::stoi(a, &used_a), std::stoi(b, &used_b)};
        if (used_a != a.size() || used_b != b.size()) throw std::invalid_argument(text);
        if (r.first > r.last) throw UsageError("empty range '" + text + "'");
        return r;
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed range '" + text + "', expected a:b");
    }
}

struct RunConfig {
    Command command = Command::analyze;
    Surface surface = Surface::fermat;
    std::optional<int> degree;
    std::optional<Range> degrees;
    std::optional<int> eckardt;          ///< t_3 for the cubic profile
    std::optional<Range> eckardt_range;  ///< cubic sweep range
    std::string profile_path;
    std::string lines_path;
    bool from_lines = false;             ///< build Fermat profiles from explicit lines
    Format format = Format::table;
    int places = 3;
    RoundingMode rounding = RoundingMode::truncate;
    std::string output_path;
    unsigned threads = 1;
    std::optional<std::int64_t> valency;
    std::size_t size = 16;               ///< search-bauer subconfiguration size
    std::size_t cap = 1;                 ///< search-bauer solutions, 0 = all
    std::optional<std::int64_t> line_count; ///< search-extremal d
    int k_max = 4;
    std::size_t limit = 20;              ///< search-extremal rows, 0 = all
};

namespace detail {

inline const char* surface_name(Surface s) {
    switch (s) {
    case Surface::fermat: return "fermat";
    case Surface::rams: return "rams";
    case Surface::schur: return "schur";
    case Surface::cubic: return "cubic";
    default: return "custom";
    }
}

inline int require_degree(const RunConfig& cfg) {
    if (!cfg.degree) throw UsageError(std::string("--degree is required for surface ") + surface_name(cfg.surface));
    return *cfg.degree;
}

inline bool has_explicit_lines(const RunConfig& cfg) {
    return cfg.surface == Surface::fermat || (cfg.surface == Surface::custom && !cfg.lines_path.empty());
}

inline Arrangement explicit_arrangement(const RunConfig& cfg) {
    if (cfg.surface == Surface::fermat) return fermat_lines(require_degree(cfg));
    if (cfg.surface == Surface::custom && !cfg.lines_path.empty()) return io::load_custom_lines(cfg.lines_path);
    throw UsageError(std::string("explicit lines are only available for --surface fermat or --surface custom "
                                 "--lines FILE, not ") + surface_name(cfg.surface));
}

/// The profile a command operates on. Fermat profiles come from the closed
/// form unless from_lines asks for the brute-force pair scan.
inline IncidenceProfile resolve_profile(const RunConfig& cfg, bool from_lines) {
    switch (cfg.surface) {
    case Surface::fermat:
        return from_lines ? profile_from_arrangement(fermat_lines(require_degree(cfg)), cfg.threads)
                          : fermat_profile(require_degree(cfg));
    case Surface::rams: return rams_profile(require_degree(cfg));
    case Surface::schur: return schur_profile();
    case Surface::cubic:
        if (!cfg.eckardt) throw UsageError("--eckardt T (0..18) is required for surface cubic");
        return cubic_profile(*cfg.eckardt);
    default:
        if (!cfg.profile_path.empty()) return io::load_custom_profile(cfg.profile_path);
        if (!cfg.lines_path.empty())
            return profile_from_arrangement(io::load_custom_lines(cfg.lines_path), cfg.threads);
        throw UsageError("--surface custom needs --profile FILE or --lines FILE");
    }
}

inline std::string decimal(const std::optional<Rational>& v, const RunConfig& cfg) {
    return v ? v->to_decimal(cfg.places, cfg.rounding) : "";
}
inline std::string exact(const std::optional<Rational>& v) { return v ? v->str() : ""; }
inline std::string opt_int(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

inline void emit(const Table& table, const nlohmann::json& doc, const RunConfig& cfg, std::ostream& out) {
    switch (cfg.format) {
    case Format::json: out << doc.dump(2) << '\n'; break;
    case Format::csv: table.print_csv(out); break;
    default: table.print_text(out); break;
    }
}

inline void emit_profile(const IncidenceProfile& p, const RunConfig& cfg, std::ostream& out) {
    Table table({"n", "d", "s", "t"});
    table.add({std::to_string(p.degree()), std::to_string(p.lines()), std::to_string(p.singular_points()),
               p.t_string()});
    emit(table, io::profile_to_json(p), cfg, out);
}

inline Table report_table(const HarbourneReport& r, const RunConfig& cfg) {
    Table table({"quantity", "exact", "decimal"});
    auto row = [&](const std::string& name, const std::optional<Rational>& v) {
        table.add({name, v ? exact(v) : "undefined", decimal(v, cfg)});
    };
    table.add({"n", std::to_string(r.profile.degree()), ""});
    table.add({"d", std::to_string(r.profile.lines()), ""});
    table.add({"t", r.profile.t_string(), ""});
    table.add({"s", std::to_string(r.s), ""});
    table.add({"I_d", std::to_string(r.incidences), ""});
    row("L~^2", r.strict_transform_sq);
    row("H_L", r.h_linear);
    table.add({"miyaoka", opt_int(r.miyaoka_lhs) + (r.miyaoka_lhs ? " <= " : "") + opt_int(r.miyaoka_rhs),
               to_string(r.miyaoka)});
    row("main_bound", r.main_bound);
    table.add({"H_L >= main_bound", to_string(r.main_theorem), ""});
    table.add({"L~^2 > -4s - 2n(n-1)^2", r.theorem_a_rhs ? "rhs " + std::to_string(*r.theorem_a_rhs) : "",
               to_string(r.theorem_a)});
    return table;
}

inline int cmd_catalog(const RunConfig& cfg, std::ostream& out) {
    if (has_explicit_lines(cfg) && cfg.profile_path.empty()) {
        const auto arr = explicit_arrangement(cfg);
        Table table({"index", "label", "point_1", "point_2"});
        for (std::size_t i = 0; i < arr.size(); ++i)
            table.add({std::to_string(i), arr.labels()[i], arr[i].first().str(), arr[i].second().str()});
        emit(table, io::arrangement_to_json(arr), cfg, out);
    } else {
        emit_profile(resolve_profile(cfg, false), cfg, out);
    }
    return 0;
}

inline int cmd_profile(const RunConfig& cfg, std::ostream& out) {
    emit_profile(resolve_profile(cfg, has_explicit_lines(cfg)), cfg, out);
    return 0;
}

inline int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
    const auto p = resolve_profile(cfg, cfg.from_lines);
    if (p.singular_points() == 0) throw UndefinedValueError("linear Harbourne constant undefined: s = 0");
    const auto report = analyze(p);
    emit(report_table(report, cfg), io::report_to_json(report, cfg.places, cfg.rounding), cfg, out);
    return 0;
}

inline int cmd_bound(const RunConfig& cfg, std::ostream& out) {
    const auto p = resolve_profile(cfg, cfg.from_lines);
    require_miyaoka_range(p.degree());
    const auto report = analyze(p);
    emit(report_table(report, cfg), io::report_to_json(report, cfg.places, cfg.rounding), cfg, out);
    return report.miyaoka == Verdict::fails ? 2 : 0;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    Table table({"check", "lhs", "rhs", "result"});
    nlohmann::json checks = nlohmann::json::array();
    bool ok = true;
    auto add = [&](const std::string& name, const std::string& lhs, const std::string& rhs, bool holds) {
        table.add({name, lhs, rhs, holds ? "pass" : "FAIL"});
        checks.push_back({{"check", name}, {"lhs", lhs}, {"rhs", rhs}, {"pass", holds}});
        ok = ok && holds;
    };

    std::optional<IncidenceProfile> profile;
    if (has_explicit_lines(cfg) && cfg.profile_path.empty()) {
        const auto arr = explicit_arrangement(cfg);
        if (cfg.surface == Surface::fermat) {
            std::size_t on = 0;
            for (const auto& l : arr.lines()) on += on_surface(l, arr.surface_degree()) ? 1 : 0;
            add("lines on x^n + y^n + z^n + w^n = 0", std::to_string(on), std::to_string(arr.size()),
                on == arr.size());
        }
        const auto ids = verify_identities(arr, cfg.threads);
        for (const auto& c : ids.checks) add(c.name, std::to_string(c.lhs), std::to_string(c.rhs), c.holds());
        if (cfg.surface == Surface::fermat) {
            const auto expected = fermat_profile(arr.surface_degree());
            add("profile = (3n^2, t_2 = 3n^3, t_n = 6n)", ids.profile.t_string(), expected.t_string(),
                ids.profile == expected);
        }
        profile = ids.profile;
    } else {
        profile = resolve_profile(cfg, false);
    }

    const auto& p = *profile;
    add("d <= n(7n - 12)", std::to_string(p.lines()), std::to_string(max_lines_bound(p.degree())),
        p.lines() <= max_lines_bound(p.degree()));
    add("sum (k^2 - k) t_k <= d(d - 1)", std::to_string(incidence_count(p)), std::to_string(p.lines() * (p.lines() - 1)),
        incidence_count(p) <= p.lines() * (p.lines() - 1));
    const std::int64_t base = line_self_intersection(p.degree()) * p.lines();
    add("I_d - sum k^2 t_k = -sum k t_k", std::to_string(base + incidence_count(p) - p.squared_multiplicity()),
        std::to_string(base - p.weighted_multiplicity()),
        incidence_count(p) - p.squared_multiplicity() == -p.weighted_multiplicity());
    if (p.degree() == 3 && p.lines() == 27) {
        const auto lhs = p.count(2) + 3 * p.count(3);
        add("t_2 + 3 t_3 = 135", std::to_string(lhs), "135", lhs == 135);
    }
    if (cfg.valency) {
        add("I_d = d * valency", std::to_string(incidence_count(p)), std::to_string(p.lines() * *cfg.valency),
            valency_consistent(p, *cfg.valency));
    }
    emit(table, {{"profile", io::profile_to_json(p)}, {"checks", checks}, {"pass", ok}}, cfg, out);
    return ok ? 0 : 2;
}

inline int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    std::vector<IncidenceProfile> profiles;
    if (cfg.surface == Surface::fermat || cfg.surface == Surface::rams) {
        if (!cfg.degrees) throw UsageError("sweep needs --degrees a:b");
        for (int n = cfg.degrees->first; n <= cfg.degrees->last; ++n)
            profiles.push_back(cfg.surface == Surface::fermat ? fermat_profile(n) : rams_profile(n));
    } else if (cfg.surface == Surface::cubic) {
        const Range r = cfg.eckardt_range.value_or(Range{0, 18});
        for (int t = r.first; t <= r.last; ++t) profiles.push_back(cubic_profile(t));
    } else {
        throw UsageError(std::string("sweep supports fermat, rams and cubic, not ") + surface_name(cfg.surface));
    }

    // Rows are computed independently and written back by index.
    std::vector<std::optional<HarbourneReport>> reports(profiles.size());
    const unsigned workers = std::max(1U, std::min<unsigned>(cfg.threads, static_cast<unsigned>(profiles.size())));
    auto work = [&](unsigned offset) {
        for (std::size_t i = offset; i < profiles.size(); i += workers) reports[i] = analyze(profiles[i]);
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
        for (auto& t : pool) t.join();
    }

    Table table({"n", "d", "s", "t", "h_linear", "h_linear_decimal", "miyaoka_lhs", "miyaoka_rhs", "main_bound"});
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : reports) {
        table.add({std::to_string(r->profile.degree()), std::to_string(r->profile.lines()), std::to_string(r->s),
                   r->profile.t_string(), exact(r->h_linear), decimal(r->h_linear, cfg), opt_int(r->miyaoka_lhs),
                   opt_int(r->miyaoka_rhs), exact(r->main_bound)});
        rows.push_back(io::report_to_json(*r, cfg.places, cfg.rounding));
    }
    emit(table, rows, cfg, out);
    return 0;
}

inline int cmd_search_bauer(const RunConfig& cfg, std::ostream& out) {
    const auto arr = explicit_arrangement(cfg);
    const auto points = singular_points(arr, cfg.threads);
    const auto found = bauer_search(arr, points, cfg.size, cfg.cap);

    Table table({"solution", "lines", "points", "t", "h_linear", "h_linear_decimal"});
    nlohmann::json docs = nlohmann::json::array();
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto sub = arr.subset(found[i].lines);
        const auto p = profile_from_arrangement(sub, cfg.threads);
        std::optional<Rational> h;
        if (p.singular_points() > 0) h = harbourne_linear(p);
        std::string labels;
        for (const auto& l : sub.labels()) labels += (labels.empty() ? "" : " ") + l;
        std::string pts;
        for (auto idx : found[i].points) pts += (pts.empty() ? "" : " ") + std::to_string(idx);
        table.add({std::to_string(i), labels, pts, p.t_string(), exact(h), decimal(h, cfg)});
        nlohmann::json chosen = nlohmann::json::array();
        for (auto idx : found[i].points) chosen.push_back(io::point_to_json(points[idx].location));
        docs.push_back({{"lines", found[i].lines},
                        {"labels", sub.labels()},
                        {"points", chosen},
                        {"profile", io::profile_to_json(p)},
                        {"h_linear", h ? nlohmann::json(h->str()) : nlohmann::json(nullptr)}});
    }
    emit(table, {{"size", cfg.size}, {"solutions", docs}}, cfg, out);
    return 0;
}

inline int cmd_search_extremal(const RunConfig& cfg, std::ostream& out) {
    const int n = require_degree(cfg);
    if (!cfg.line_count) throw UsageError("search-extremal needs --lines-count d");
    const auto found = extremal_profile_search(n, *cfg.line_count, cfg.k_max, cfg.limit);
    Table table({"rank", "t", "s", "h_linear", "h_linear_decimal", "miyaoka_lhs", "miyaoka_rhs"});
    nlohmann::json docs = nlohmann::json::array();
    for (std::size_t i = 0; i < found.size(); ++i) {
        const auto& c = found[i];
        table.add({std::to_string(i + 1), c.profile.t_string(), std::to_string(c.profile.singular_points()),
                   c.h_linear ? c.h_linear->str() : "undefined", decimal(c.h_linear, cfg),
                   std::to_string(c.miyaoka.lhs), std::to_string(c.miyaoka.rhs)});
        docs.push_back({{"profile", io::profile_to_json(c.profile)},
                        {"h_linear", c.h_linear ? nlohmann::json(c.h_linear->str()) : nlohmann::json(nullptr)},
                        {"miyaoka_lhs", c.miyaoka.lhs},
                        {"miyaoka_rhs", c.miyaoka.rhs}});
    }
    const char* caveat = "abstract profiles passing Miyaoka; not necessarily realized by lines on a surface";
    if (cfg.format == Format::table) out << "# " << caveat << '\n';
    emit(table, {{"caveat", caveat}, {"candidates", docs}}, cfg, out);
    return 0;
}

inline int dispatch(const RunConfig& cfg, std::ostream& out) {
    switch (cfg.command) {
    case Command::catalog: return cmd_catalog(cfg, out);
    case Command::analyze: return cmd_analyze(cfg, out);
    case Command::profile: return cmd_profile(cfg, out);
    case Command::verify: return cmd_verify(cfg, out);
    case Command::bound: return cmd_bound(cfg, out);
    case Command::sweep: return cmd_sweep(cfg, out);
    case Command::search_bauer: return cmd_search_bauer(cfg, out);
    default: return cmd_search_extremal(cfg, out);
    }
}

} // namespace detail

/// Executes one validated command. Output goes to cfg.output_path when set,
/// otherwise to `out`. Returns 0 on success, 1 for usage or input-format
/// errors, 2 for domain errors and failed verifications.
inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.places < 0 || cfg.places > 60) {
        err << "error: --places must be between 0 and 60\n";
        return 1;
    }
    try {
        std::ostringstream buffer;
        const int status = detail::dispatch(cfg, buffer);
        if (cfg.output_path.empty()) {
            out << buffer.str();
        } else {
            std::ofstream file(cfg.output_path, std::ios::binary);
            if (!file) throw UsageError("cannot write " + cfg.output_path);
            file << buffer.str();
        }
        return status;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    } catch (const io::FormatError& e) {
        err << "input error: " << e.what() << '\n';
        return 1;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

} // namespace surflines::cli
