#include "perclab/path_count.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace perclab {

namespace {

void require_index(std::int64_t k, std::int64_t i) {
    if (k < 0) throw std::invalid_argument("binomial: k must be >= 0");
    if (i < 0 || i > k)
        throw std::invalid_argument("binomial index i=" + std::to_string(i) +
                                    " out of range for k=" + std::to_string(k));
}

}  // namespace

BigInt binomial(std::int64_t k, std::int64_t i) {
    require_index(k, i);
    if (i > k - i) i = k - i;
    BigInt c = 1;
    for (std::int64_t j = 1; j <= i; ++j) {
        c *= k - i + j;
        c /= j;  // exact: c holds C(k-i+j, j) after each step
    }
    return c;
}

double natural_log(const BigInt& v) {
    if (v <= 0) throw std::invalid_argument("natural_log: argument must be positive");
    signed long exp = 0;
    const double mant = mpz_get_d_2exp(&exp, v.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp) * std::numbers::ln2;
}

BigInt path_count(std::int64_t k, std::int64_t i) {
    if (k < 1) throw std::invalid_argument("path_count: k must be >= 1");
    require_index(k, i);
    BigInt c = binomial(k, i);
    mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), static_cast<mp_bitcnt_t>(k - i));
    return c;
}

PathCountRow count_row(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("count_row: k must be >= 1");
    PathCountRow row;
    row.k = k;
    row.counts.reserve(static_cast<std::size_t>(k) + 1);
    BigInt coeff = 1;  // running C(k,i)
    for (std::int64_t i = 0; i <= k; ++i) {
        BigInt c = coeff;
        mpz_mul_2exp(c.get_mpz_t(), c.get_mpz_t(), static_cast<mp_bitcnt_t>(k - i));
        row.total += c;
        row.counts.push_back(std::move(c));
        if (i < k) {
            coeff *= k - i;
            coeff /= i + 1;
        }
    }
    return row;
}

BigInt pow3(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("pow3: k must be >= 0");
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, static_cast<unsigned long>(k));
    return r;
}

std::vector<BigInt> pascal_next(const std::vector<BigInt>& row) {
    if (row.empty()) throw std::invalid_argument("pascal_next: empty coefficient row");
    std::vector<BigInt> next(row.size() + 1);
    next.front() = row.front();
    for (std::size_t i = 1; i < row.size(); ++i) next[i] = row[i] + row[i - 1];
    next.back() = row.back();
    return next;
}

PathHistogram enumerate_paths_bruteforce(std::int64_t k) {
    if (k < 1 || k > kBruteForceMaxK)
        throw std::invalid_argument(
            "enumerate_paths_bruteforce: k=" + std::to_string(k) +
            " outside budget [1, " + std::to_string(kBruteForceMaxK) + "]");

    // Odometer over base-3 step digits: 0 -> (1,0), 1 -> (0,1), 2 -> (1,1).
    // Every step increases a1+a2, so the endpoint norm is just the sum.
    std::vector<std::uint64_t> tally(static_cast<std::size_t>(k) + 1, 0);
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    const std::int64_t norm_step[3] = {1, 1, 2};
    std::int64_t endpoint_norm = k;  // all digits at 0: k unit steps
    for (;;) {
        tally[static_cast<std::size_t>(endpoint_norm - k)] += 1;
        std::size_t pos = 0;
        while (pos < digits.size()) {
            endpoint_norm -= norm_step[digits[pos]];
            if (++digits[pos] == 3) {
                digits[pos] = 0;
                endpoint_norm += norm_step[0];
                ++pos;
            } else {
                endpoint_norm += norm_step[digits[pos]];
                break;
            }
        }
        if (pos == digits.size()) break;
    }

    PathHistogram hist;
    hist.k = k;
    for (std::int64_t i = 0; i <= k; ++i)
        hist.by_norm[k + i] = BigInt(static_cast<unsigned long>(tally[static_cast<std::size_t>(i)]));
    return hist;
}

VerifyRowReport verify_row(std::int64_t k) {
    PathHistogram hist = enumerate_paths_bruteforce(k);
    PathCountRow row = count_row(k);
    VerifyRowReport report;
    report.k = k;
    report.ok = true;
    for (std::int64_t i = 0; i <= k; ++i) {
        const BigInt& expected = row.counts[static_cast<std::size_t>(i)];
        const BigInt& got = hist.by_norm.at(k + i);
        if (expected != got) {
            report.ok = false;
            report.detail = "norm " + std::to_string(k + i) + ": enumerated " +
                            got.get_str() + ", closed form " + expected.get_str();
            return report;
        }
    }
    if (row.total != pow3(k)) {
        report.ok = false;
        report.detail = "row total " + row.total.get_str() + " != 3^" + std::to_string(k);
    }
    return report;
}

}  // namespace perclab
