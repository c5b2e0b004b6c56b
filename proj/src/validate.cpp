#include "perclab/validate.hpp"

#include <cmath>
#include <cstdio>

#include "perclab/bound.hpp"
#include "perclab/lattice.hpp"
#include "perclab/sim.hpp"

namespace perclab {

namespace {

std::string short_float(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
}

CheckResult pass(std::string name, std::string detail) {
    return {std::move(name), true, std::move(detail)};
}

CheckResult fail(std::string name, std::string detail) {
    return {std::move(name), false, std::move(detail)};
}

}  // namespace

CheckResult check_oracle_equivalence(std::int64_t max_k, PathCountFn fn) {
    const std::string name = "oracle-equivalence";
    if (!fn) fn = [](std::int64_t k, std::int64_t i) { return path_count(k, i); };
    for (std::int64_t k = 1; k <= max_k; ++k) {
        PathHistogram hist = enumerate_paths_bruteforce(k);
        for (std::int64_t i = 0; i <= k; ++i) {
            BigInt expected = fn(k, i);
            const BigInt& got = hist.by_norm.at(k + i);
            if (expected != got)
                return fail(name, "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                      ": enumerated " + got.get_str() + ", closed form " +
                                      expected.get_str());
        }
    }
    return pass(name, "brute force matches closed form for k <= " + std::to_string(max_k));
}

CheckResult check_row_totals(std::int64_t max_k) {
    const std::string name = "row-total-3k";
    for (std::int64_t k = 1; k <= max_k; ++k) {
        PathCountRow row = count_row(k);
        if (row.total != pow3(k))
            return fail(name, "k=" + std::to_string(k) + ": total " + row.total.get_str() +
                                  " != 3^k");
    }
    return pass(name, "count_row totals equal 3^k for k <= " + std::to_string(max_k));
}

CheckResult check_log_binomial_accuracy(std::vector<std::int64_t> ks) {
    const std::string name = "log-binomial-accuracy";
    double worst = 0.0;
    for (std::int64_t k : ks) {
        for (std::int64_t i = 0; i <= k; ++i) {
            const double approx = log_binomial(k, i);
            const double exact = natural_log(binomial(k, i));
            const double err = (exact == 0.0) ? std::abs(approx)
                                              : std::abs(approx - exact) / std::abs(exact);
            worst = std::max(worst, err);
            if (err > 1e-12)
                return fail(name, "k=" + std::to_string(k) + " i=" + std::to_string(i) +
                                      ": relative error " + short_float(err));
        }
    }
    return pass(name, "worst relative error " + short_float(worst) + " <= 1e-12");
}

CheckResult check_arc_constructions(std::int64_t max_k_z2, std::int64_t max_k_tri) {
    const std::string name = "arc-recursion-closure";
    for (std::int64_t k = 1; k <= max_k_z2; ++k) {
        if (arc_z2(k, ArcSign::Positive) != arc_z2_recursive(k, ArcSign::Positive))
            return fail(name, "arc_z2 closed form != recursion at k=" + std::to_string(k));
    }
    for (std::int64_t k = 1; k <= max_k_tri; ++k) {
        if (arc_t(k) != arc_t_recursive(k))
            return fail(name, "arc_t closed form != recursion at k=" + std::to_string(k));
    }
    return pass(name, "closed-form arcs match the recursive construction");
}

CheckResult check_union_find_vs_oracle(std::int64_t k, int configs_per_variant,
                                       std::uint64_t seed) {
    const std::string name = "union-find-vs-bfs";
    const Vertex origin{0, 0};
    for (LatticeVariant variant :
         {LatticeVariant::Z2, LatticeVariant::TriUp, LatticeVariant::TriRight}) {
        Ball ball(variant, k);
        for (int c = 0; c < configs_per_variant; ++c) {
            // p near criticality keeps both verdicts common
            SimConfig config{variant, k, 0.55, 1, seed + static_cast<std::uint64_t>(c),
                             OriginRule::ConditionedOpen};
            OpenConfiguration cfg = sample_configuration(ball, config, 0);
            bool oracle_one = false;
            for (std::uint32_t i = ball.boundary_begin(); i < ball.size() && !oracle_one; ++i)
                oracle_one = connectivity_oracle(cfg, origin, ball.vertices()[i]);
            if (one_arm(cfg) != oracle_one)
                return fail(name, variant_name(variant) + " config " + std::to_string(c) +
                                      ": one-arm verdict mismatch");
            bool oracle_pos = false, oracle_neg = false;
            for (std::uint32_t i : ball.positive_arc())
                if ((oracle_pos = connectivity_oracle(cfg, origin, ball.vertices()[i]))) break;
            for (std::uint32_t i : ball.negative_arc())
                if ((oracle_neg = connectivity_oracle(cfg, origin, ball.vertices()[i]))) break;
            if (two_arm(cfg) != (oracle_pos && oracle_neg))
                return fail(name, variant_name(variant) + " config " + std::to_string(c) +
                                      ": two-arm verdict mismatch");
        }
    }
    return pass(name, "union-find agrees with the search oracle on " +
                          std::to_string(configs_per_variant) + " configs per variant at k=" +
                          std::to_string(k));
}

CheckResult check_coupling_monotonicity(std::int64_t k, int grid_points, std::int64_t trials,
                                        std::uint64_t seed) {
    const std::string name = "coupling-monotonicity";
    Ball ball(LatticeVariant::TriUp, k);
    for (std::int64_t t = 0; t < trials; ++t) {
        bool prev = false;
        for (int g = 0; g < grid_points; ++g) {
            const double p = static_cast<double>(g + 1) / static_cast<double>(grid_points + 1);
            SimConfig config{LatticeVariant::TriUp, k, p, trials, seed,
                             OriginRule::ConditionedOpen};
            const bool hit = one_arm(sample_configuration(ball, config, t));
            if (prev && !hit)
                return fail(name, "trial " + std::to_string(t) + ": indicator dropped at p=" +
                                      std::to_string(p));
            prev = hit;
        }
    }
    return pass(name, "indicators nondecreasing across " + std::to_string(grid_points) +
                          "-point grid on " + std::to_string(trials) + " trials");
}

std::vector<CheckResult> run_all_checks() {
    return {
        check_oracle_equivalence(), check_row_totals(),           check_log_binomial_accuracy(),
        check_arc_constructions(),  check_union_find_vs_oracle(), check_coupling_monotonicity(),
    };
}

}  // namespace perclab
