#include <cmath>

#include "doctest.h"
#include "perclab/path_count.hpp"

using namespace perclab;

TEST_CASE("binomial coefficients") {
    CHECK(binomial(3, 1) == 3);
    CHECK(binomial(4, 2) == 6);
    for (std::int64_t k : {0, 1, 7, 50, 200}) CHECK(binomial(k, 0) == 1);
    CHECK(binomial(200, 100) == binomial(200, 100));
    CHECK_THROWS_AS(binomial(3, 4), std::invalid_argument);
    CHECK_THROWS_AS(binomial(3, -1), std::invalid_argument);
}

TEST_CASE("path_count reproduces the hand tallies") {
    CHECK(path_count(1, 0) == 2);
    CHECK(path_count(1, 1) == 1);
    CHECK(path_count(2, 0) == 4);
    CHECK(path_count(2, 1) == 4);
    CHECK(path_count(2, 2) == 1);
    const std::int64_t k3[] = {8, 12, 6, 1};
    for (std::int64_t i = 0; i <= 3; ++i) CHECK(path_count(3, i) == k3[i]);
    CHECK_THROWS_AS(path_count(3, 5), std::invalid_argument);
}

TEST_CASE("count_row totals are exact powers of three") {
    auto r1 = count_row(1);
    CHECK(r1.counts == std::vector<BigInt>{2, 1});
    CHECK(r1.total == 3);

    auto r2 = count_row(2);
    CHECK(r2.counts == std::vector<BigInt>{4, 4, 1});
    CHECK(r2.total == 9);

    CHECK(count_row(40).total == pow3(40));
    for (std::int64_t k = 1; k <= 200; ++k) CHECK(count_row(k).total == pow3(k));
}

TEST_CASE("count_row agrees with an independent pascal iteration") {
    std::vector<BigInt> coeffs = {1, 1};  // generation 1
    for (std::int64_t k = 1; k <= 200; ++k) {
        auto row = count_row(k);
        REQUIRE(row.counts.size() == coeffs.size());
        BigInt pow2 = 1;
        mpz_mul_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), static_cast<mp_bitcnt_t>(k));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            CHECK(row.counts[i] == coeffs[i] * pow2);
            mpz_fdiv_q_2exp(pow2.get_mpz_t(), pow2.get_mpz_t(), 1);
        }
        coeffs = pascal_next(coeffs);
    }
}

TEST_CASE("pascal_next") {
    CHECK(pascal_next({1, 1}) == std::vector<BigInt>{1, 2, 1});
    CHECK(pascal_next({1, 2, 1}) == std::vector<BigInt>{1, 3, 3, 1});
    CHECK(pascal_next({1}) == std::vector<BigInt>{1, 1});
    CHECK_THROWS_AS(pascal_next({}), std::invalid_argument);
}

TEST_CASE("pascal coefficients are symmetric, full counts are not") {
    for (std::int64_t k : {3, 10, 41}) {
        for (std::int64_t i = 0; i <= k; ++i) CHECK(binomial(k, i) == binomial(k, k - i));
        auto row = count_row(k);
        CHECK(row.counts.front() != row.counts.back());
    }
}

TEST_CASE("brute-force enumeration") {
    auto h1 = enumerate_paths_bruteforce(1);
    CHECK(h1.by_norm == std::map<std::int64_t, BigInt>{{1, 2}, {2, 1}});
    auto h2 = enumerate_paths_bruteforce(2);
    CHECK(h2.by_norm == std::map<std::int64_t, BigInt>{{2, 4}, {3, 4}, {4, 1}});
    auto h3 = enumerate_paths_bruteforce(3);
    CHECK(h3.by_norm == std::map<std::int64_t, BigInt>{{3, 8}, {4, 12}, {5, 6}, {6, 1}});

    CHECK_THROWS_WITH_AS(enumerate_paths_bruteforce(15), doctest::Contains("14"),
                         std::invalid_argument);
    CHECK_THROWS_AS(enumerate_paths_bruteforce(0), std::invalid_argument);
}

TEST_CASE("every brute-force endpoint norm lies in [k, 2k]") {
    for (std::int64_t k = 1; k <= 9; ++k) {
        auto hist = enumerate_paths_bruteforce(k);
        CHECK(hist.by_norm.begin()->first == k);
        CHECK(hist.by_norm.rbegin()->first == 2 * k);
        BigInt sum = 0;
        for (auto& [n, c] : hist.by_norm) {
            CHECK(n >= k);
            CHECK(n <= 2 * k);
            sum += c;
        }
        CHECK(sum == pow3(k));
    }
}

TEST_CASE("verify_row reconciles oracle and closed form") {
    for (std::int64_t k = 1; k <= 9; ++k) {
        auto report = verify_row(k);
        CHECK(report.ok);
        CHECK(report.detail.empty());
    }
}

TEST_CASE("natural_log of exact integers") {
    CHECK(natural_log(pow3(40)) == doctest::Approx(40.0 * std::log(3.0)).epsilon(1e-14));
    CHECK(natural_log(BigInt(1)) == 0.0);
    CHECK_THROWS_AS(natural_log(BigInt(0)), std::invalid_argument);
}
