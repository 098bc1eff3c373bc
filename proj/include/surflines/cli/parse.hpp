#pragma once

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "surflines/cli/run.hpp"

namespace surflines::cli {

/// Parses argv into a RunConfig and runs it. Returns the process exit status.
inline int main_entry(int argc, const char* const* argv, std::ostream& out = std::cout,
                      std::ostream& err = std::cerr) {
    CLI::App app{"Line arrangements on smooth surfaces in P^3: exact Harbourne constants and bounds"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string degrees;
    std::string eckardt_range;
    std::optional<int> degree;
    std::optional<int> eckardt;
    std::optional<std::int64_t> valency;
    std::optional<std::int64_t> line_count;

    const std::map<std::string, Surface> surfaces{{"fermat", Surface::fermat}, {"rams", Surface::rams},
                                                  {"schur", Surface::schur},   {"cubic", Surface::cubic},
                                                  {"custom", Surface::custom}};
    const std::map<std::string, Format> formats{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}};
    const std::map<std::string, RoundingMode> roundings{{"truncate", RoundingMode::truncate},
                                                        {"nearest", RoundingMode::nearest}};

    const std::map<std::string, std::pair<Command, std::string>> commands{
        {"catalog", {Command::catalog, "List the lines (explicit surfaces) or the incidence profile"}},
        {"analyze", {Command::analyze, "Linear Harbourne constant and bounds for one configuration"}},
        {"profile", {Command::profile, "Incidence profile (brute-force pair scan for explicit lines)"}},
        {"verify", {Command::verify, "Check counting identities and consistency conditions"}},
        {"bound", {Command::bound, "Miyaoka inequality and the H_L lower bound (n >= 4)"}},
        {"sweep", {Command::sweep, "Tabulate a family over a range of degrees or Eckardt counts"}},
        {"search-bauer", {Command::search_bauer, "Find sub-arrangements meeting only in quadruple points"}},
        {"search-extremal", {Command::search_extremal, "Enumerate abstract profiles passing Miyaoka"}},
    };

    for (const auto& [name, entry] : commands) {
        auto* sub = app.add_subcommand(name, entry.second);
        const Command command = entry.first;
        sub->callback([&cfg, command] { cfg.command = command; });
        sub->add_option("--surface", cfg.surface, "fermat | rams | schur | cubic | custom")
            ->transform(CLI::CheckedTransformer(surfaces, CLI::ignore_case));
        sub->add_option("--degree,-n", degree, "surface degree n");
        sub->add_option("--eckardt", eckardt, "number of Eckardt points on the cubic (0..18)");
        sub->add_option("--profile", cfg.profile_path, "custom profile JSON {n, d, t: {k: count}}");
        sub->add_option("--lines", cfg.lines_path, "custom lines JSON {n, lines: [[point, point], ...]}");
        sub->add_option("--format", cfg.format, "table | csv | json")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
        sub->add_option("--places", cfg.places, "decimal places in rendered values")->capture_default_str();
        sub->add_option("--rounding", cfg.rounding, "truncate | nearest")
            ->transform(CLI::CheckedTransformer(roundings, CLI::ignore_case));
        sub->add_option("--output,-o", cfg.output_path, "write the report to a file");
        sub->add_option("--threads", cfg.threads, "worker threads for pair scans and sweeps")->check(CLI::Range(1U, 256U));
        if (command == Command::analyze || command == Command::bound)
            sub->add_flag("--from-lines", cfg.from_lines, "compute Fermat profiles from the explicit lines");
        if (command == Command::verify) sub->add_option("--valency", valency, "expected number of lines met by each line");
        if (command == Command::sweep) {
            sub->add_option("--degrees", degrees, "degree range a:b (fermat, rams)");
            sub->add_option("--eckardt-range", eckardt_range, "Eckardt count range a:b (cubic)");
        }
        if (command == Command::search_bauer) {
            sub->add_option("--size", cfg.size, "number of lines in the subconfiguration")->capture_default_str();
            sub->add_option("--cap", cfg.cap, "maximum number of solutions, 0 for all")->capture_default_str();
        }
        if (command == Command::search_extremal) {
            sub->add_option("--lines-count,-d", line_count, "number of lines d");
            sub->add_option("--kmax", cfg.k_max, "largest point multiplicity")->capture_default_str();
            sub->add_option("--limit", cfg.limit, "keep the lowest N profiles, 0 for all")->capture_default_str();
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? 0 : 1;
    }

    cfg.degree = degree;
    cfg.eckardt = eckardt;
    cfg.valency = valency;
    cfg.line_count = line_count;
    try {
        if (!degrees.empty()) cfg.degrees = parse_range(degrees);
        if (!eckardt_range.empty()) cfg.eckardt_range = parse_range(eckardt_range);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 1;
    }
    return run(cfg, out, err);
}

} // namespace surflines::cli
