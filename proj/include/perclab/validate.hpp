#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "perclab/path_count.hpp"

namespace perclab {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Hook for fault-injection tests; defaults to path_count.
using PathCountFn = std::function<BigInt(std::int64_t, std::int64_t)>;

// Brute-force enumeration equals the closed-form tallies for k <= max_k.
CheckResult check_oracle_equivalence(std::int64_t max_k = 10, PathCountFn fn = {});

// count_row(k).total == 3^k exactly for k <= max_k.
CheckResult check_row_totals(std::int64_t max_k = 200);

// log_binomial within 1e-12 relative of exact big-integer logs.
CheckResult check_log_binomial_accuracy(std::vector<std::int64_t> ks = {50, 100, 200});

// Closed-form arcs equal the recursive union-of-up-neighbors construction.
CheckResult check_arc_constructions(std::int64_t max_k_z2 = 100, std::int64_t max_k_tri = 20);

// one_arm/two_arm verdicts from the union-find engine agree with the
// breadth-first search oracle on random configurations of every variant.
CheckResult check_union_find_vs_oracle(std::int64_t k = 10, int configs_per_variant = 100,
                                       std::uint64_t seed = 42);

// With shared per-site uniforms the per-trial event indicator is
// nondecreasing along an ascending p grid.
CheckResult check_coupling_monotonicity(std::int64_t k = 16, int grid_points = 16,
                                        std::int64_t trials = 64, std::uint64_t seed = 42);

// The full embedded suite in fixed order.
std::vector<CheckResult> run_all_checks();

}  // namespace perclab
