#include "doctest.h"
#include "perclab/validate.hpp"

using namespace perclab;

TEST_CASE("the embedded suite passes on a fresh build") {
    auto results = run_all_checks();
    CHECK(results.size() >= 5);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}

TEST_CASE("a corrupted path count is caught and named") {
    // off-by-one in the bucket index: counts shifted one arc outward
    auto corrupted = [](std::int64_t k, std::int64_t i) {
        return path_count(k, i < k ? i + 1 : 0);
    };
    auto result = check_oracle_equivalence(6, corrupted);
    CHECK_FALSE(result.pass);
    CHECK(result.name == "oracle-equivalence");
    CHECK_FALSE(result.detail.empty());
}

TEST_CASE("individual checks report their family names") {
    CHECK(check_row_totals(40).name == "row-total-3k");
    CHECK(check_log_binomial_accuracy({50}).name == "log-binomial-accuracy");
    CHECK(check_arc_constructions(20, 8).name == "arc-recursion-closure");
    CHECK(check_union_find_vs_oracle(6, 20, 3).name == "union-find-vs-bfs");
    CHECK(check_coupling_monotonicity(8, 8, 16, 3).name == "coupling-monotonicity");
}
