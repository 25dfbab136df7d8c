// Copyright 2026 The hqc Authors
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

#include "hqc/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hqc/correlations.hpp"
#include "hqc/error.hpp"
#include "hqc/families.hpp"
#include "hqc/io.hpp"
#include "hqc/montecarlo.hpp"

namespace hqc::cli {

using nlohmann::json;

Environment Environment::from_process() {
    Environment env;
    if (const char *s = std::getenv("HQC_SEED")) {
        env.hqc_seed = std::string(s);
    }
    return env;
}

namespace {

struct Common {
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    double tol = kStateTol;
    Thresholds thresholds;
};

struct ResolvedSeed {
    std::uint64_t value = 0;
    std::string source = "default";
};

std::uint64_t parse_u64(const std::string &text, const std::string &what) {
    try {
        std::size_t used = 0;
        if (text.empty() || text.front() == '-') {
            throw std::invalid_argument(text);
        }
        const auto v = std::stoull(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::logic_error &) {
        throw Error(ErrorKind::ParseError, what + " is not an unsigned integer: '" + text + "'");
    }
}

double parse_double(const std::string &text, const std::string &what) {
    try {
        std::size_t used = 0;
        const double v = std::stod(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument(text);
        }
        return v;
    } catch (const std::logic_error &) {
        throw Error(ErrorKind::ParseError, what + " is not a number: '" + text + "'");
    }
}

std::vector<std::string> split(const std::string &text, char sep) {
    std::vector<std::string> parts;
    std::istringstream in(text);
    std::string part;
    while (std::getline(in, part, sep)) {
        parts.push_back(part);
    }
    if (!text.empty() && text.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

ResolvedSeed resolve_seed(const Common &common, const Environment &env) {
    if (common.seed) {
        return {*common.seed, "flag"};
    }
    if (env.hqc_seed) {
        return {parse_u64(*env.hqc_seed, "HQC_SEED"), "env:HQC_SEED"};
    }
    return {};
}

json metadata(const std::string &command, const ResolvedSeed &seed, const Common &common) {
    return json{{"command", command},
                {"seed", seed.value},
                {"seed_source", seed.source},
                {"workers", common.workers},
                {"tol", common.tol},
                {"thresholds", {{"c_chsh", common.thresholds.c_chsh}, {"c_f3", common.thresholds.c_f3}}}};
}

/// "lo:hi:count" or a single value.
std::vector<double> parse_grid(const std::string &text, const std::string &what) {
    const auto parts = split(text, ':');
    if (parts.size() == 1) {
        return {parse_double(parts[0], what)};
    }
    if (parts.size() != 3) {
        throw Error(ErrorKind::ParseError, what + " grid must be lo:hi:count, got '" + text + "'");
    }
    const double lo = parse_double(parts[0], what);
    const double hi = parse_double(parts[1], what);
    const auto count = parse_u64(parts[2], what + " count");
    if (count > 1'000'000) {
        throw Error(ErrorKind::DomainError, what + " grid is too large");
    }
    return linspace(lo, hi, static_cast<int>(count));
}

struct LoadedState {
    DensityMatrix rho;
    RMatrix r;
};

LoadedState load_state(const std::string &path, std::string format, double tol) {
    if (format == "auto") {
        format = std::filesystem::path(path).extension() == ".csv" ? "rcsv" : "json";
    }
    const std::string text = read_text_file(path);
    if (format == "rcsv") {
        const RMatrix r = r_from_csv(text);
        return {from_r_picture(r, tol), r};
    }
    if (format == "json") {
        const DensityMatrix rho = state_from_json(parse_json(text), tol);
        return {rho, to_r_picture(rho)};
    }
    throw Error(ErrorKind::ParseError, "unknown format '" + format + "' (expected json or rcsv)");
}

Party parse_party(const std::string &s) {
    if (s == "A" || s == "a") {
        return Party::A;
    }
    if (s == "B" || s == "b") {
        return Party::B;
    }
    throw Error(ErrorKind::ParseError, "party must be A or B, got '" + s + "'");
}

Objective parse_objective(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "chsh") {
        return Objective::Chsh;
    }
    if (s == "f3") {
        return Objective::F3;
    }
    throw Error(ErrorKind::ParseError, "objective must be chsh or f3, got '" + s + "'");
}

json correlation_values(const RMatrix &r) {
    return json{{"b", chsh_max(r).value}, {"f3", f3_max(r)}};
}

json error_json(std::string_view kind, const std::string &message, double deviation) {
    json e{{"kind", std::string(kind)}, {"message", message}};
    if (!std::isnan(deviation)) {
        e["deviation"] = deviation;
    }
    return json{{"error", e}};
}

void emit(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

// Subcommands ---------------------------------------------------------------

struct AnalyzeArgs {
    std::string state;
    std::string format = "auto";
    bool one_sided = false;
    int starts = 32;
};

int analyze(const AnalyzeArgs &a, const Common &common, const ResolvedSeed &seed, std::ostream &out) {
    const LoadedState st = load_state(a.state, a.format, common.tol);
    std::optional<OneSidedOptions> budget;
    if (a.one_sided) {
        budget = OneSidedOptions{a.starts, 500, 1e-8, seed.value, common.workers};
    }
    const InaccessibilityReport rep = classify(st.r, common.thresholds, budget);
    json j = metadata("analyze", seed, common);
    j["report"] = report_to_json(rep);
    emit(out, j);
    return rep.counterexample ? kExitCounterexample : kExitOk;
}

struct CertifyArgs {
    std::string state;
    std::string format = "auto";
    std::string party = "A";
    std::string objective = "chsh";
};

int certify(const CertifyArgs &a, const Common &common, const ResolvedSeed &seed, std::ostream &out) {
    const LoadedState st = load_state(a.state, a.format, common.tol);
    const Party target = parse_party(a.party);
    const Objective objective = parse_objective(a.objective);
    const SteeringEllipsoid e = compute_ellipsoid(st.r, other(target));
    json j = metadata("certify", seed, common);
    j["target_party"] = std::string(to_string(target));
    j["objective"] = std::string(to_string(objective));
    j["centre_magnitude"] = centre_magnitude(e);
    j["threshold"] = common.thresholds.for_objective(objective);
    j["certified"] = certify_inaccessible(st.r, target, objective, common.thresholds);
    j["conjecture_conditional"] = true;
    emit(out, j);
    return kExitOk;
}

struct ScanArgs {
    std::string family;
    std::string theta = "0:0.78539816339744828:101";
    std::string p = "0:1:101";
    std::string out;
};

int scan(const ScanArgs &a, const Common &common, const ResolvedSeed &seed, std::ostream &out) {
    const Family family = parse_family(a.family);
    const auto thetas = parse_grid(a.theta, "theta");
    const auto ps = parse_grid(a.p, "p");
    const auto rows = scan_family(family, thetas, ps, common.thresholds, common.workers);
    const std::string path = a.out.empty() ? "scan_" + std::string(to_string(family)) + ".csv" : a.out;
    write_text_file(path, scan_to_csv(rows));

    std::map<std::string, std::uint64_t> counts;
    bool counterexample = false;
    for (const auto &row : rows) {
        for (Flag f : row.report.flags) {
            ++counts[std::string(to_string(f))];
        }
        counterexample = counterexample || row.report.counterexample;
    }
    json j = metadata("scan", seed, common);
    j["family"] = std::string(to_string(family));
    j["rows"] = rows.size();
    j["out"] = path;
    j["flag_counts"] = counts;
    if (family == Family::QD) {
        j["boundary"] = {{"chsh", qd_boundary_root(common.thresholds.c_chsh)},
                         {"f3", qd_boundary_root(common.thresholds.c_f3)}};
    }
    emit(out, j);
    return counterexample ? kExitCounterexample : kExitOk;
}

struct SweepArgs {
    std::uint64_t n = 100'000;
    std::string out_prefix = "sweep";
    int bins = 200;
    std::string rank_mix = "0,1,1,1";
};

int sweep(const SweepArgs &a, const Common &common, const ResolvedSeed &seed, std::ostream &out) {
    SweepConfig config;
    config.n = a.n;
    config.seed = seed.value;
    config.bins = a.bins;
    config.workers = common.workers;
    config.thresholds = common.thresholds;
    const auto weights = split(a.rank_mix, ',');
    if (weights.size() != 4) {
        throw Error(ErrorKind::ParseError, "--rank-mix needs four comma-separated weights for ranks 1..4");
    }
    for (std::size_t k = 0; k < 4; ++k) {
        config.rank_weights[k] = parse_double(weights[k], "rank weight");
    }

    const SweepSummary summary = run_sweep(config);
    const auto envelope_b = bin_envelope(summary, Party::B);
    const auto envelope_a = bin_envelope(summary, Party::A);
    const std::string path_b = a.out_prefix + "_envelope.csv";
    const std::string path_a = a.out_prefix + "_envelope_cA.csv";
    write_text_file(path_b, envelope_to_csv(envelope_b));
    write_text_file(path_a, envelope_to_csv(envelope_a));

    json violations = json::array();
    for (const auto &v : summary.violations) {
        const std::string file = a.out_prefix + "_states/violation_" + std::to_string(v.index) + ".json";
        write_text_file(file, state_to_json(v.state).dump(2) + "\n");
        violations.push_back(
            {{"index", v.index}, {"reason", v.reason}, {"b", v.b}, {"f3", v.f3}, {"c_a", v.c_a}, {"c_b", v.c_b},
             {"state_file", file}});
    }
    json j = metadata("sweep", seed, common);
    j["n"] = summary.samples;
    j["degenerate"] = summary.degenerate;
    j["bins"] = config.bins;
    j["rank_weights"] = config.rank_weights;
    j["envelope_c_b"] = path_b;
    j["envelope_c_a"] = path_a;
    j["envelope_bound_excess"] = envelope_bound_excess(envelope_b, config.bins).size() +
                                 envelope_bound_excess(envelope_a, config.bins).size();
    j["violations"] = violations;
    j["runtime_seconds"] = summary.runtime_seconds;
    emit(out, j);
    return summary.violations.empty() ? kExitOk : kExitCounterexample;
}

struct FilterArgs {
    std::string state;
    std::string format = "auto";
    std::string fa;
    std::string fb;
    std::vector<std::string> optimize;
    int starts = 32;
    std::string out;
};

LocalFilter load_filter(const std::string &path) {
    return path.empty() ? LocalFilter::identity() : filter_from_json(parse_json(read_text_file(path)));
}

int filter(const FilterArgs &a, const Common &common, const ResolvedSeed &seed, std::ostream &out) {
    const LoadedState st = load_state(a.state, a.format, common.tol);
    json j = metadata("filter", seed, common);
    LocalFilter fa = LocalFilter::identity();
    LocalFilter fb = LocalFilter::identity();
    if (!a.optimize.empty()) {
        if (!a.fa.empty() || !a.fb.empty()) {
            throw Error(ErrorKind::ParseError, "--optimize cannot be combined with --fa/--fb");
        }
        const Party party = parse_party(a.optimize.at(0));
        const Objective objective = parse_objective(a.optimize.at(1));
        const OneSidedResult res =
            optimize_one_sided(st.rho, party, objective, {a.starts, 500, 1e-8, seed.value, common.workers});
        (party == Party::A ? fa : fb) = res.filter;
        j["optimizer"] = {{"party", std::string(to_string(party))},
                          {"objective", std::string(to_string(objective))},
                          {"value", res.value},
                          {"converged", res.converged},
                          {"starts_used", res.starts_used},
                          {"at_filter_boundary", res.at_filter_boundary}};
    } else {
        if (a.fa.empty() && a.fb.empty()) {
            throw Error(ErrorKind::ParseError, "filter needs --fa/--fb files or --optimize PARTY OBJECTIVE");
        }
        fa = load_filter(a.fa);
        fb = load_filter(a.fb);
    }
    const FilteredState fs = apply_filters(st.rho, fa, fb);
    j["success_probability"] = fs.success_probability;
    j["before"] = correlation_values(st.r);
    j["after"] = correlation_values(to_r_picture(fs.state));
    j["filters"] = {{"A", filter_to_json(fa)}, {"B", filter_to_json(fb)}};
    j["filtered_state"] = state_to_json(fs.state);
    if (!a.out.empty()) {
        write_text_file(a.out, state_to_json(fs.state).dump(2) + "\n");
        j["out"] = a.out;
    }
    emit(out, j);
    return kExitOk;
}

void add_common(CLI::App &sub, Common &common) {
    sub.add_option("--seed", common.seed, "RNG seed (overrides HQC_SEED)");
    sub.add_option("--workers", common.workers, "worker threads")->check(CLI::PositiveNumber);
    sub.add_option("--tol", common.tol, "state validation tolerance")->check(CLI::PositiveNumber);
    sub.add_option("--c-chsh", common.thresholds.c_chsh, "CHSH centre threshold");
    sub.add_option("--c-f3", common.thresholds.c_f3, "F3 centre threshold");
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env) {
    CLI::App app{"Hidden and locally inaccessible quantum correlations of two-qubit states", "hqc"};
    app.require_subcommand(1);
    Common common;

    AnalyzeArgs analyze_args;
    auto *analyze_cmd = app.add_subcommand("analyze", "classify a state and print its report");
    analyze_cmd->add_option("state", analyze_args.state, "state JSON or R-matrix CSV")->required();
    analyze_cmd->add_option("--format", analyze_args.format, "json, rcsv or auto (by extension)");
    analyze_cmd->add_flag("--one-sided", analyze_args.one_sided, "also run the one-sided filter optimiser");
    analyze_cmd->add_option("--starts", analyze_args.starts, "optimiser starts")->check(CLI::PositiveNumber);
    add_common(*analyze_cmd, common);

    CertifyArgs certify_args;
    auto *certify_cmd = app.add_subcommand("certify", "ellipsoid-centre inaccessibility certificate");
    certify_cmd->add_option("state", certify_args.state, "state JSON or R-matrix CSV")->required();
    certify_cmd->add_option("--format", certify_args.format, "json, rcsv or auto");
    certify_cmd->add_option("--party", certify_args.party, "target party A or B");
    certify_cmd->add_option("--objective", certify_args.objective, "chsh or f3");
    add_common(*certify_cmd, common);

    ScanArgs scan_args;
    auto *scan_cmd = app.add_subcommand("scan", "classify a state family over a parameter grid");
    scan_cmd->add_option("family", scan_args.family, "m, mm or qd")->required();
    scan_cmd->add_option("--theta", scan_args.theta, "lo:hi:count");
    scan_cmd->add_option("--p", scan_args.p, "lo:hi:count");
    scan_cmd->add_option("--out", scan_args.out, "CSV output path");
    add_common(*scan_cmd, common);

    SweepArgs sweep_args;
    auto *sweep_cmd = app.add_subcommand("sweep", "random-state test of the centre bounds");
    sweep_cmd->add_option("--n", sweep_args.n, "number of states");
    sweep_cmd->add_option("--out-prefix", sweep_args.out_prefix, "prefix for output files");
    sweep_cmd->add_option("--bins", sweep_args.bins, "histogram bins")->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--rank-mix", sweep_args.rank_mix, "weights of ranks 1..4, e.g. 0,1,1,1");
    add_common(*sweep_cmd, common);

    FilterArgs filter_args;
    auto *filter_cmd = app.add_subcommand("filter", "apply or optimise local filters");
    filter_cmd->add_option("state", filter_args.state, "state JSON or R-matrix CSV")->required();
    filter_cmd->add_option("--format", filter_args.format, "json, rcsv or auto");
    filter_cmd->add_option("--fa", filter_args.fa, "filter JSON for A");
    filter_cmd->add_option("--fb", filter_args.fb, "filter JSON for B");
    filter_cmd->add_option("--optimize", filter_args.optimize, "PARTY OBJECTIVE")->expected(2);
    filter_cmd->add_option("--starts", filter_args.starts, "optimiser starts")->check(CLI::PositiveNumber);
    filter_cmd->add_option("--out", filter_args.out, "write the filtered state here");
    add_common(*filter_cmd, common);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        emit(out, error_json("ParseError", e.what(), std::nan("")));
        err << e.what() << '\n';
        return kExitInputError;
    }

    try {
        common.thresholds.check();
        const ResolvedSeed seed = resolve_seed(common, env);
        if (analyze_cmd->parsed()) {
            return analyze(analyze_args, common, seed, out);
        }
        if (certify_cmd->parsed()) {
            return certify(certify_args, common, seed, out);
        }
        if (scan_cmd->parsed()) {
            return scan(scan_args, common, seed, out);
        }
        if (sweep_cmd->parsed()) {
            return sweep(sweep_args, common, seed, out);
        }
        return filter(filter_args, common, seed, out);
    } catch (const Error &e) {
        emit(out, error_json(to_string(e.kind()), e.what(), e.deviation()));
        err << e.what() << '\n';
        return kExitInputError;
    } catch (const std::exception &e) {
        emit(out, error_json("InternalError", e.what(), std::nan("")));
        err << e.what() << '\n';
        return kExitFailure;
    }
}

}  // namespace hqc::cli
