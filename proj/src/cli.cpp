// Copyright 2026 The loccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "loccsim/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "loccsim/protocols.hpp"
#include "loccsim/report.hpp"
#include "loccsim/sweeps.hpp"
#include "loccsim/verify.hpp"

namespace loccsim {

namespace {

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_r(double r, const char *flag) {
    if (!(r > 0.0 && r <= 1.0)) {
        throw BadInput(std::string(flag) + " must lie in (0, 1]");
    }
}

void require_format(const std::string &format, std::initializer_list<const char *> allowed) {
    for (const char *a : allowed) {
        if (format == a) {
            return;
        }
    }
    throw BadInput("unsupported --format '" + format + "'");
}

std::string brief(double v) {
    std::ostringstream s;
    s << std::setprecision(3) << v;
    return s.str();
}

/// Writes `text` to `path`, or to `out` when the path is empty.
void deliver(const std::string &text, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file || !(file << text)) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
}

struct Config {
    std::optional<double> tol;
    double r = 1.0;
    double r_min = 0.02;
    double r_max = 1.0;
    int steps = 50;
    std::string family = "CaseII";
    std::string protocol = "corollary1";
    std::string set = "halder12";
    std::string out_path;
    std::string out_dir = "figures";
    std::string format = "text";
};

int cmd_verify(const Config &cfg, std::ostream &out) {
    require_format(cfg.format, {"text", "json"});
    if (cfg.tol && !(*cfg.tol >= 0.0)) {
        throw BadInput("--tol must be non-negative");
    }
    auto results = run_verify_suites(cfg.tol);
    bool all = std::all_of(results.begin(), results.end(), [](const SuiteResult &s) { return s.passed; });
    std::ostringstream text;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto &s : results) {
            arr.push_back({{"name", s.name},
                           {"passed", s.passed},
                           {"max_error", s.max_error},
                           {"tolerance", s.tolerance},
                           {"detail", s.detail}});
        }
        text << nlohmann::json{{"suites", arr}, {"passed", all}}.dump(2) << "\n";
    } else {
        for (const auto &s : results) {
            text << (s.passed ? "PASS " : "FAIL ") << s.name << "  max_error=" << brief(s.max_error)
                 << " tol=" << brief(s.tolerance) << "  " << s.detail << "\n";
        }
        text << (all ? "all " : "some ") << "suites " << (all ? "passed" : "failed") << " ("
             << std::count_if(results.begin(), results.end(), [](const SuiteResult &s) { return s.passed; })
             << "/" << results.size() << ")\n";
    }
    deliver(text.str(), cfg.out_path, out);
    return all ? kExitOk : kExitFailed;
}

int cmd_run(const Config &cfg, std::ostream &out) {
    require_format(cfg.format, {"text", "json"});
    require_r(cfg.r, "--r");
    ProtocolBundle bundle;
    try {
        bundle = protocol_by_name(cfg.protocol, cfg.r);
    } catch (const std::invalid_argument &e) {
        throw BadInput(e.what());
    }
    RunOptions options;
    options.r = cfg.protocol == "corollary1" ? 1.0 : cfg.r;
    if (cfg.tol) {
        options.tol = *cfg.tol;
    }
    RunReport report = run_protocol(bundle.tree, build_canonical_set(), bundle.resource.realized, options);
    deliver(cfg.format == "json" ? report_json(report) : report_text(report), cfg.out_path, out);
    bool ok = report.completeness_ok() && report.orthogonality_ok() && report.leaf_contracts_ok() &&
              report.probability_ok(options.tol);
    return ok ? kExitOk : kExitFailed;
}

Family family_arg(const std::string &name) {
    try {
        return parse_family(name);
    } catch (const std::invalid_argument &e) {
        throw BadInput(e.what());
    }
}

bool record_ok(const SweepRecord &rec) {
    auto unit = [](double c) { return c >= -1e-12 && c <= 1.0 + 1e-12; };
    return std::abs(rec.p1 + rec.p2 + rec.p3 - 1.0) < 1e-10 && unit(rec.c_ab) && unit(rec.c_ac) && unit(rec.c_bc) &&
           rec.tangle >= -1e-9;
}

int cmd_sweep(const Config &cfg, std::ostream &out) {
    require_format(cfg.format, {"csv", "text", "json"});
    Family family = family_arg(cfg.family);
    std::vector<double> grid;
    try {
        grid = r_grid(cfg.r_min, cfg.r_max, cfg.steps);
    } catch (const std::invalid_argument &e) {
        throw BadInput(e.what());
    }
    std::vector<SweepRecord> records;
    for (double r : grid) {
        records.push_back(sweep_point(family, r));
    }
    std::ostringstream text;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto &rec : records) {
            arr.push_back({{"family", to_string(rec.family)},
                           {"r", rec.r},
                           {"P1", rec.p1},
                           {"P2", rec.p2},
                           {"P3", rec.p3},
                           {"C_AB", rec.c_ab},
                           {"C_AC", rec.c_ac},
                           {"C_BC", rec.c_bc},
                           {"tangle", rec.tangle},
                           {"case", rec.case_label}});
        }
        text << arr.dump(2) << "\n";
    } else {
        write_sweep_csv(text, records);
    }
    deliver(text.str(), cfg.out_path, out);
    return std::all_of(records.begin(), records.end(), record_ok) ? kExitOk : kExitFailed;
}

int cmd_figures(const Config &cfg, std::ostream &out) {
    if (cfg.steps < 2) {
        throw BadInput("--steps must be at least 2");
    }
    for (const auto &path : write_figures(cfg.out_dir, cfg.steps)) {
        out << "wrote " << path << "\n";
    }
    for (Measure m : {Measure::ConcurrenceAB, Measure::Tangle}) {
        CrossoverResult c = locate_crossover(m, cfg.steps);
        out << "crossover " << to_string(m) << ": ";
        if (c.found) {
            out << "P3(CaseII) - P3(CaseIII) changes sign at x = " << format_number(c.x) << "\n";
        } else {
            out << "none on (0, " << format_number(c.x_max) << "]; CaseIII "
                << (c.sign_below > 0 ? "below" : "above") << " CaseII throughout\n";
        }
    }
    return kExitOk;
}

StateSet load_set(const std::string &name) {
    if (name == "halder12" || name == "canonical") {
        return build_canonical_set();
    }
    std::ifstream file(name);
    if (!file) {
        throw BadInput("cannot open state-set file '" + name + "'");
    }
    try {
        StateSet set = parse_state_set(file);
        if (set.states.empty()) {
            throw BadInput("state-set file '" + name + "' holds no states");
        }
        return set;
    } catch (const ParseError &e) {
        throw BadInput(name + ": " + e.what());
    }
}

int cmd_nonlocality(const Config &cfg, std::ostream &out) {
    require_format(cfg.format, {"text", "json"});
    StateSet set = load_set(cfg.set);
    double tol = cfg.tol.value_or(1e-10);
    OrthogonalityCheck orth = verify_orthogonality(set, tol);
    std::vector<OPMConstraintReport> reports;
    for (char party : {'A', 'B', 'C'}) {
        reports.push_back(opm_triviality_check(set, party, tol));
    }
    bool all = orth.orthogonal && std::all_of(reports.begin(), reports.end(),
                                              [](const OPMConstraintReport &r) { return r.trivial_only; });
    std::ostringstream text;
    if (cfg.format == "json") {
        auto arr = nlohmann::json::array();
        for (const auto &r : reports) {
            arr.push_back(nlohmann::json::parse(opm_json(r)));
        }
        text << nlohmann::json{{"states", set.size()},
                               {"orthogonal", orth.orthogonal},
                               {"max_overlap", orth.max_overlap},
                               {"parties", arr}}
                    .dump(2)
             << "\n";
    } else {
        if (!orth.orthogonal) {
            text << "set is not orthogonal (max overlap " << format_number(orth.max_overlap) << ")\n";
        }
        for (const auto &r : reports) {
            text << opm_text(r);
        }
    }
    deliver(text.str(), cfg.out_path, out);
    return all ? kExitOk : kExitFailed;
}

}  // namespace

std::vector<std::string> write_figures(const std::string &dir, int steps) {
    std::filesystem::create_directories(dir);
    auto path = [&](const char *name) { return (std::filesystem::path(dir) / name).string(); };
    std::vector<std::string> written;

    const std::pair<const char *, Family> sweeps[] = {
        {"fig1.csv", Family::BellLike}, {"fig2.csv", Family::CaseII}, {"fig3.csv", Family::CaseIII}};
    for (const auto &[name, family] : sweeps) {
        auto records = sweep(family, 1.0 / steps, 1.0, steps);
        emit_csv(path(name), records);
        written.push_back(path(name));
    }

    auto grid = r_grid(1.0 / steps, 1.0, steps);
    const std::pair<const char *, Measure> curves[] = {{"fig4.csv", Measure::Tangle},
                                                       {"fig5.csv", Measure::ConcurrenceAB}};
    for (const auto &[name, measure] : curves) {
        auto points = pe_vs_measure(Family::CaseII, measure, grid);
        auto more = pe_vs_measure(Family::CaseIII, measure, grid);
        points.insert(points.end(), more.begin(), more.end());
        emit_csv(path(name), points);
        written.push_back(path(name));
    }
    return written;
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Simulate entanglement-assisted local discrimination of a nonlocal product set", "loccsim"};
    app.require_subcommand(1, 1);
    Config cfg;
    double tol_value = 0.0;

    auto *verify = app.add_subcommand("verify", "Run every invariant suite");
    auto *run = app.add_subcommand("run", "Run one protocol and report branch masses");
    auto *sweep_cmd = app.add_subcommand("sweep", "Sweep one resource family over r");
    auto *figures = app.add_subcommand("figures", "Write fig1.csv ... fig5.csv");
    auto *nonlocality = app.add_subcommand("nonlocality", "Orthogonality-preserving measurement check");

    for (auto *sub : {verify, run, nonlocality}) {
        sub->add_option("--tol", tol_value, "Tolerance override");
    }
    for (auto *sub : {verify, run, sweep_cmd, nonlocality}) {
        sub->add_option("--out", cfg.out_path, "Output file (default: stdout)");
    }
    verify->add_option("--format", cfg.format, "text or json");
    run->add_option("--protocol", cfg.protocol, "corollary1, corollary2, theorem1, theorem2 or theorem3");
    run->add_option("--r", cfg.r, "Resource parameter in (0, 1]");
    run->add_option("--format", cfg.format, "text or json");
    sweep_cmd->add_option("--family", cfg.family, "BellLike, CaseI, CaseII or CaseIII");
    sweep_cmd->add_option("--r-min", cfg.r_min, "Lower end of the r range");
    sweep_cmd->add_option("--r-max", cfg.r_max, "Upper end of the r range");
    sweep_cmd->add_option("--steps", cfg.steps, "Number of intervals");
    sweep_cmd->add_option("--format", cfg.format, "csv or json")->default_str("csv");
    figures->add_option("--out-dir", cfg.out_dir, "Directory for the CSV files");
    figures->add_option("--steps", cfg.steps, "Number of intervals per curve");
    nonlocality->add_option("--set", cfg.set, "halder12, canonical, or a state-set file");
    nonlocality->add_option("--format", cfg.format, "text or json");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    }

    for (auto *sub : {verify, run, nonlocality}) {
        if (sub->parsed() && sub->count("--tol") > 0) {
            cfg.tol = tol_value;
        }
    }
    if (sweep_cmd->parsed() && sweep_cmd->count("--format") == 0) {
        cfg.format = "csv";
    }

    try {
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        if (run->parsed()) {
            return cmd_run(cfg, out);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(cfg, out);
        }
        if (figures->parsed()) {
            return cmd_figures(cfg, out);
        }
        return cmd_nonlocality(cfg, out);
    } catch (const BadInput &e) {
        err << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitFailed;
    }
}

}  // namespace loccsim
