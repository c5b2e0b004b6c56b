#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "perclab/bound.hpp"
#include "perclab/io.hpp"
#include "perclab/lattice.hpp"
#include "perclab/path_count.hpp"
#include "perclab/sim.hpp"
#include "perclab/validate.hpp"

namespace {

constexpr const char* kToolVersion = "0.1.0";

using perclab::Json;

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[24];
    std::strftime(buf, sizeof buf, "%Y%m%dT%H%M%SZ", &tm);
    return buf;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stoll(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad integer '" + tok + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        std::size_t used = 0;
        out.push_back(std::stod(tok, &used));
        if (used != tok.size()) throw std::invalid_argument("bad number '" + tok + "'");
    }
    if (out.empty()) throw std::invalid_argument("empty number list");
    return out;
}

int default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

// Every run produces the same data as plain text, csv and json, plus a
// manifest checksummed over the csv bytes. The manifest goes to a file when
// an output directory is configured, to stderr otherwise; stdout carries
// only the payload so reruns are byte-comparable.
struct RunOutput {
    std::string subcommand;
    std::uint64_t seed = 0;
    std::string plain;
    std::string csv;
    Json json;
    Json parameters = Json::object();

    int emit(const std::string& format, const std::optional<std::string>& out_dir) const {
        if (format == "plain")
            std::cout << plain;
        else if (format == "csv")
            std::cout << csv;
        else
            std::cout << json.dump(2) << "\n";

        Json manifest{{"subcommand", subcommand},
                      {"version", kToolVersion},
                      {"seed", seed},
                      {"parameters", parameters},
                      {"output_checksum", perclab::fnv1a64_hex(csv)}};

        if (out_dir) {
            namespace fs = std::filesystem;
            fs::create_directories(*out_dir);
            const std::string stem =
                subcommand + "-" + utc_timestamp() + "-" + std::to_string(seed);
            const fs::path csv_path = fs::path(*out_dir) / (stem + ".csv");
            const fs::path json_path = fs::path(*out_dir) / (stem + ".json");
            std::ofstream(csv_path) << csv;
            std::ofstream(json_path) << json.dump(2) << "\n";
            manifest["files"] = {csv_path.string(), json_path.string()};
            std::ofstream(fs::path(*out_dir) / "manifest.json") << manifest.dump(2) << "\n";
        } else {
            std::cerr << manifest.dump() << "\n";
        }
        return 0;
    }
};

struct CommonOpts {
    std::string format = "plain";
    std::string out_dir;
    bool have_out_dir = false;

    std::optional<std::string> resolved_out_dir() const {
        if (have_out_dir) return out_dir;
        if (const char* env = std::getenv("PERCLAB_OUT_DIR")) return std::string(env);
        return std::nullopt;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"plain", "csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out-dir", opts.out_dir,
                    "directory for csv/json/manifest files (env PERCLAB_OUT_DIR)")
        ->each([&opts](const std::string&) { opts.have_out_dir = true; });
}

std::uint64_t resolve_seed(std::uint64_t seed, bool entropy) {
    if (!entropy) return seed;
    std::random_device rd;
    return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

int run_arcs(std::int64_t k, const std::string& variant_name, const std::string& sign_name,
             const CommonOpts& common) {
    const perclab::LatticeVariant variant = perclab::variant_from_name(variant_name);
    if (variant == perclab::LatticeVariant::TriRight)
        throw std::invalid_argument("arcs: tri-right has no arc construction");
    const perclab::ArcSign sign =
        sign_name == "-" ? perclab::ArcSign::Negative : perclab::ArcSign::Positive;

    std::vector<perclab::Vertex> arc;
    if (variant == perclab::LatticeVariant::Z2) {
        arc = perclab::arc_z2(k, sign);
    } else {
        arc = perclab::arc_t(k);
        if (sign == perclab::ArcSign::Negative)
            for (auto& v : arc) v = perclab::negated(v);
    }

    RunOutput out;
    out.subcommand = "arcs";
    out.plain = perclab::arcs_plain(arc) + "\n";
    out.csv = perclab::arcs_csv(arc);
    out.json = Json{{"k", k},
                    {"variant", variant_name},
                    {"sign", sign_name},
                    {"vertices", perclab::arcs_json(arc)}};
    out.parameters = {{"k", k}, {"variant", variant_name}, {"sign", sign_name}};
    return out.emit(common.format, common.resolved_out_dir());
}

int run_count(std::int64_t k, bool bruteforce, const CommonOpts& common) {
    const perclab::PathCountRow row = perclab::count_row(k);

    RunOutput out;
    out.subcommand = "count";
    out.parameters = {{"k", k}, {"bruteforce", bruteforce}};
    out.csv = perclab::count_row_csv(row);
    out.json = perclab::count_row_json(row);

    std::ostringstream plain;
    plain << "k=" << k << " total=" << row.total.get_str() << "\n";
    for (std::size_t i = 0; i < row.counts.size(); ++i)
        plain << "  i=" << i << " -> " << row.counts[i].get_str() << " paths to norm "
              << k + static_cast<std::int64_t>(i) << "\n";

    int status = 0;
    if (bruteforce) {
        const perclab::VerifyRowReport report = perclab::verify_row(k);
        const perclab::PathHistogram hist = perclab::enumerate_paths_bruteforce(k);
        const std::string verdict = report.ok ? "MATCH" : "MISMATCH";
        plain << "bruteforce histogram:\n";
        for (const auto& [n, c] : hist.by_norm)
            plain << "  norm=" << n << " -> " << c.get_str() << " paths\n";
        plain << verdict << (report.ok ? "" : ": " + report.detail) << "\n";
        out.csv += "\n" + perclab::histogram_csv(hist) + "\nverdict\n" + verdict + "\n";
        out.json["bruteforce"] = perclab::histogram_json(hist);
        out.json["verdict"] = verdict;
        if (!report.ok) status = 1;
    }
    out.plain = plain.str();
    const int emit_status = out.emit(common.format, common.resolved_out_dir());
    return status != 0 ? status : emit_status;
}

int run_bound(const std::string& k_list, std::int64_t k_max, bool geometric,
              const CommonOpts& common) {
    std::vector<std::int64_t> ks;
    if (!k_list.empty()) {
        ks = parse_int_list(k_list);
    } else if (k_max >= 1) {
        if (geometric) {
            for (std::int64_t k = 1; k <= k_max; k *= 2) ks.push_back(k);
            if (ks.back() != k_max) ks.push_back(k_max);
        } else {
            for (std::int64_t k = 1; k <= k_max; ++k) ks.push_back(k);
        }
    } else {
        throw std::invalid_argument("bound: need --k-list or --k-max");
    }

    const auto points = perclab::bound_series(ks);

    RunOutput out;
    out.subcommand = "bound";
    out.parameters = {{"k_list", ks}, {"geometric", geometric}};
    out.csv = perclab::bound_csv(points);
    out.json = perclab::bound_json(points);
    std::ostringstream plain;
    for (const auto& pt : points)
        plain << "k=" << pt.k << " mid=" << pt.mid
              << " b_k=" << perclab::format_float17(pt.b_k) << " abs_err_vs_limit="
              << perclab::format_float17(std::abs(pt.b_k - perclab::kBoundLimit)) << "\n";
    out.plain = plain.str();
    return out.emit(common.format, common.resolved_out_dir());
}

std::string estimate_plain(const perclab::CrossingEstimate& est) {
    std::ostringstream line;
    line << perclab::variant_name(est.config.variant) << " k=" << est.config.k
         << " p=" << perclab::format_float17(est.config.p) << " " << perclab::event_name(est.event)
         << " trials=" << est.config.trials << " hits=" << est.hits
         << " phat=" << perclab::format_float17(est.phat) << " ci=["
         << perclab::format_float17(est.ci_low) << ", " << perclab::format_float17(est.ci_high)
         << "] seed=" << est.config.seed << "\n";
    return line.str();
}

int run_simulate(const perclab::SimConfig& config, const std::string& event_name_str, int threads,
                 const CommonOpts& common) {
    const perclab::CrossingEvent event = perclab::event_from_name(event_name_str);
    const perclab::CrossingEstimate est = perclab::estimate(config, event, threads);

    RunOutput out;
    out.subcommand = "simulate";
    out.seed = config.seed;
    out.parameters = {{"variant", perclab::variant_name(config.variant)},
                      {"k", config.k},
                      {"p", config.p},
                      {"trials", config.trials},
                      {"seed", config.seed},
                      {"event", event_name_str},
                      {"origin_rule", perclab::origin_rule_name(config.origin_rule)}};
    out.csv = perclab::estimates_csv({est});
    out.json = perclab::estimate_json(est);
    out.plain = estimate_plain(est);
    return out.emit(common.format, common.resolved_out_dir());
}

int run_sweep(const std::string& variant_name_str, const std::string& k_list,
              const std::string& p_grid, std::int64_t trials, std::uint64_t seed,
              const std::string& event_name_str, const std::string& origin_rule_str, int threads,
              const CommonOpts& common) {
    const auto variant = perclab::variant_from_name(variant_name_str);
    const auto ks = parse_int_list(k_list);
    const auto ps = parse_double_list(p_grid);
    const auto event = perclab::event_from_name(event_name_str);
    const auto rule = perclab::origin_rule_from_name(origin_rule_str);

    const auto table = perclab::sweep(variant, ks, ps, trials, seed, event, rule, threads);

    RunOutput out;
    out.subcommand = "sweep";
    out.seed = seed;
    out.parameters = {{"variant", variant_name_str}, {"k_list", ks},
                      {"p_grid", ps},                {"trials", trials},
                      {"seed", seed},                {"event", event_name_str},
                      {"origin_rule", origin_rule_str}};
    out.csv = perclab::estimates_csv(table);
    out.json = perclab::estimates_json(table);
    std::string plain;
    for (const auto& est : table) plain += estimate_plain(est);
    out.plain = plain;
    return out.emit(common.format, common.resolved_out_dir());
}

int run_pc(const std::string& variant_name_str, std::int64_t k, std::int64_t trials,
           std::uint64_t seed, double target, double tol, double p_low, double p_high,
           const std::string& origin_rule_str, int threads, const CommonOpts& common) {
    const auto variant = perclab::variant_from_name(variant_name_str);
    const auto rule = perclab::origin_rule_from_name(origin_rule_str);
    const perclab::BisectionResult result =
        perclab::pc_bisect(variant, k, trials, seed, target, tol, p_low, p_high, rule, threads);

    RunOutput out;
    out.subcommand = "pc";
    out.seed = seed;
    out.parameters = {{"variant", variant_name_str}, {"k", k},
                      {"trials", trials},            {"seed", seed},
                      {"target", target},            {"tol", tol},
                      {"p_low", p_low},              {"p_high", p_high},
                      {"origin_rule", origin_rule_str}};
    out.csv = perclab::estimates_csv(result.trace) + "# p_c_estimate," +
              perclab::format_float17(result.p_c) + "\n";
    out.json = Json{{"trace", perclab::estimates_json(result.trace)},
                    {"p_c_estimate", result.p_c}};
    std::string plain;
    for (const auto& est : result.trace) plain += estimate_plain(est);
    plain += "p_c estimate = " + perclab::format_float17(result.p_c) + "\n";
    out.plain = plain;
    return out.emit(common.format, common.resolved_out_dir());
}

int run_validate(const CommonOpts& common) {
    const auto results = perclab::run_all_checks();

    RunOutput out;
    out.subcommand = "validate";
    out.csv = "name,pass,detail\n";
    out.json = Json::array();
    std::string plain;
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        plain += std::string(r.pass ? "[PASS] " : "[FAIL] ") + r.name + ": " + r.detail + "\n";
        out.csv += r.name + "," + (r.pass ? "true" : "false") + "," + r.detail + "\n";
        out.json.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    plain += all_pass ? "all invariant families passed\n" : "validation FAILED\n";
    out.plain = plain;
    const int emit_status = out.emit(common.format, common.resolved_out_dir());
    return all_pass ? emit_status : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"site percolation laboratory: arcs, exact path counts, bound series and "
                 "seeded Monte Carlo crossing estimates"};
    app.set_version_flag("--version", kToolVersion);
    app.require_subcommand(1);

    auto* arcs = app.add_subcommand("arcs", "list an arc of generation k");
    std::int64_t arcs_k = 1;
    std::string arcs_variant = "z2", arcs_sign = "+";
    CommonOpts arcs_common;
    arcs->add_option("--k", arcs_k, "generation")->required()->check(CLI::PositiveNumber);
    arcs->add_option("--variant", arcs_variant, "lattice variant")
        ->check(CLI::IsMember({"z2", "tri-up"}))
        ->capture_default_str();
    arcs->add_option("--sign", arcs_sign, "arc sign")
        ->check(CLI::IsMember({"+", "-"}))
        ->capture_default_str();
    add_common(arcs, arcs_common);

    auto* count = app.add_subcommand("count", "exact up-path tallies for generation k");
    std::int64_t count_k = 1;
    bool count_bruteforce = false;
    CommonOpts count_common;
    count->add_option("--k", count_k, "generation")->required()->check(CLI::PositiveNumber);
    count->add_flag("--bruteforce", count_bruteforce,
                    "also run the exhaustive 3^k oracle and report MATCH/MISMATCH");
    add_common(count, count_common);

    auto* bound = app.add_subcommand("bound", "bound series b_k and its distance to 2^(-3/2)");
    std::string bound_k_list;
    std::int64_t bound_k_max = 0;
    bool bound_geometric = false;
    CommonOpts bound_common;
    bound->add_option("--k-list", bound_k_list, "comma-separated k values");
    bound->add_option("--k-max", bound_k_max, "evaluate k = 1..k-max");
    bound->add_flag("--geometric", bound_geometric, "with --k-max: powers of two up to k-max");
    add_common(bound, bound_common);

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo crossing estimate");
    perclab::SimConfig sim_config;
    std::string sim_variant = "tri-up", sim_event = "one-arm", sim_rule = "conditioned-open";
    int sim_threads = default_threads();
    bool sim_entropy = false;
    CommonOpts sim_common;
    simulate->add_option("--variant", sim_variant, "lattice variant")
        ->check(CLI::IsMember({"z2", "tri-up", "tri-right"}))
        ->capture_default_str();
    simulate->add_option("--k", sim_config.k, "ball radius")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--p", sim_config.p, "open probability")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--trials", sim_config.trials, "number of trials")
        ->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--seed", sim_config.seed, "rng seed")->capture_default_str();
    simulate->add_flag("--entropy", sim_entropy, "draw the seed from the system rng");
    simulate->add_option("--event", sim_event, "crossing event")
        ->check(CLI::IsMember({"one-arm", "two-arm"}))
        ->capture_default_str();
    simulate->add_option("--origin-rule", sim_rule, "origin handling")
        ->check(CLI::IsMember({"conditioned-open", "sampled"}))
        ->capture_default_str();
    simulate->add_option("--threads", sim_threads, "worker cap (never changes results)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(simulate, sim_common);

    auto* sweep_cmd = app.add_subcommand("sweep", "estimate grid over k-list x p-grid");
    std::string sweep_variant = "tri-up", sweep_k_list, sweep_p_grid;
    std::string sweep_event = "one-arm", sweep_rule = "conditioned-open";
    std::int64_t sweep_trials = 1000;
    std::uint64_t sweep_seed = perclab::kDefaultSeed;
    bool sweep_entropy = false;
    int sweep_threads = default_threads();
    CommonOpts sweep_common;
    sweep_cmd->add_option("--variant", sweep_variant)
        ->check(CLI::IsMember({"z2", "tri-up", "tri-right"}))
        ->capture_default_str();
    sweep_cmd->add_option("--k-list", sweep_k_list, "comma-separated radii")->required();
    sweep_cmd->add_option("--p-grid", sweep_p_grid, "comma-separated ascending probabilities")
        ->required();
    sweep_cmd->add_option("--trials", sweep_trials)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep_cmd->add_option("--seed", sweep_seed)->capture_default_str();
    sweep_cmd->add_flag("--entropy", sweep_entropy, "draw the seed from the system rng");
    sweep_cmd->add_option("--event", sweep_event)
        ->check(CLI::IsMember({"one-arm", "two-arm"}))
        ->capture_default_str();
    sweep_cmd->add_option("--origin-rule", sweep_rule)
        ->check(CLI::IsMember({"conditioned-open", "sampled"}))
        ->capture_default_str();
    sweep_cmd->add_option("--threads", sweep_threads)
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    add_common(sweep_cmd, sweep_common);

    auto* pc = app.add_subcommand("pc", "bisect the two-arm threshold at fixed k");
    std::string pc_variant = "tri-up", pc_rule = "conditioned-open";
    std::int64_t pc_k = 64, pc_trials = 4000;
    std::uint64_t pc_seed = perclab::kDefaultSeed;
    bool pc_entropy = false;
    double pc_target = 0.5, pc_tol = 1.0 / 256, pc_low = 0.0, pc_high = 1.0;
    int pc_threads = default_threads();
    CommonOpts pc_common;
    pc->add_option("--variant", pc_variant)
        ->check(CLI::IsMember({"z2", "tri-up", "tri-right"}))
        ->capture_default_str();
    pc->add_option("--k", pc_k, "ball radius")->check(CLI::PositiveNumber)->capture_default_str();
    pc->add_option("--trials", pc_trials)->check(CLI::PositiveNumber)->capture_default_str();
    pc->add_option("--seed", pc_seed)->capture_default_str();
    pc->add_flag("--entropy", pc_entropy, "draw the seed from the system rng");
    pc->add_option("--target", pc_target)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    pc->add_option("--tol", pc_tol, "final interval width")->capture_default_str();
    pc->add_option("--p-low", pc_low)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    pc->add_option("--p-high", pc_high)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    pc->add_option("--origin-rule", pc_rule)
        ->check(CLI::IsMember({"conditioned-open", "sampled"}))
        ->capture_default_str();
    pc->add_option("--threads", pc_threads)->check(CLI::PositiveNumber)->capture_default_str();
    add_common(pc, pc_common);

    auto* validate = app.add_subcommand("validate", "run the embedded invariant suite");
    CommonOpts validate_common;
    add_common(validate, validate_common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*arcs) return run_arcs(arcs_k, arcs_variant, arcs_sign, arcs_common);
        if (*count) return run_count(count_k, count_bruteforce, count_common);
        if (*bound) return run_bound(bound_k_list, bound_k_max, bound_geometric, bound_common);
        if (*simulate) {
            sim_config.variant = perclab::variant_from_name(sim_variant);
            sim_config.origin_rule = perclab::origin_rule_from_name(sim_rule);
            sim_config.seed = resolve_seed(sim_config.seed, sim_entropy);
            return run_simulate(sim_config, sim_event, sim_threads, sim_common);
        }
        if (*sweep_cmd)
            return run_sweep(sweep_variant, sweep_k_list, sweep_p_grid, sweep_trials,
                             resolve_seed(sweep_seed, sweep_entropy), sweep_event, sweep_rule,
                             sweep_threads, sweep_common);
        if (*pc)
            return run_pc(pc_variant, pc_k, pc_trials, resolve_seed(pc_seed, pc_entropy),
                          pc_target, pc_tol, pc_low, pc_high, pc_rule, pc_threads, pc_common);
        if (*validate) return run_validate(validate_common);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
