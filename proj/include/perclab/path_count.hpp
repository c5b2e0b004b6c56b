#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace perclab {

// All counting in this module is exact big-integer arithmetic; rows are
// needed exactly up to k = 200, far beyond any fixed-width type.
using BigInt = mpz_class;

// Per-generation tallies of TriUp up-paths of length k, bucketed by how far
// the endpoint overshoots norm k: counts[i] = C(k,i) * 2^(k-i) is the number
// of k-step sequences over {(1,0),(0,1),(1,1)} that use exactly i diagonal
// steps and therefore end at norm k+i. total is always 3^k.
struct PathCountRow {
    std::int64_t k = 0;
    std::vector<BigInt> counts;  // index i in 0..k
    BigInt total = 0;
};

// Exhaustive tally of all 3^k step sequences, bucketed by endpoint norm.
// Counts sequences (paths), not distinct endpoints.
struct PathHistogram {
    std::int64_t k = 0;
    std::map<std::int64_t, BigInt> by_norm;  // keys k..2k
};

// Sequence budget for the exhaustive walk: 3^14 ~ 4.8M finishes in seconds.
inline constexpr std::int64_t kBruteForceMaxK = 14;

// Exact C(k,i) via the multiplicative formula. Errors on i > k or i < 0.
BigInt binomial(std::int64_t k, std::int64_t i);

// ln of a positive big integer via its mantissa/exponent split; accurate to
// a few ulps, which makes exact rows usable as oracles for log-space code.
double natural_log(const BigInt& v);

// C(k,i) * 2^(k-i): number of length-k up-paths ending at norm k+i.
BigInt path_count(std::int64_t k, std::int64_t i);

// Full row for generation k, with total verified callers can compare to 3^k.
PathCountRow count_row(std::int64_t k);

BigInt pow3(std::int64_t k);

// One Pascal step: next[i] = row[i] + row[i-1], out-of-range terms zero.
// Errors on an empty input row.
std::vector<BigInt> pascal_next(const std::vector<BigInt>& row);

// Walks every one of the 3^k step sequences; the independent oracle for the
// closed-form row. Rejects k outside [1, kBruteForceMaxK].
PathHistogram enumerate_paths_bruteforce(std::int64_t k);

struct VerifyRowReport {
    std::int64_t k = 0;
    bool ok = false;
    std::string detail;  // empty when ok
};

// Reconciles enumerate_paths_bruteforce(k) against count_row(k).
VerifyRowReport verify_row(std::int64_t k);

}  // namespace perclab
