#pragma once

#include <cstdint>
#include <numbers>
#include <vector>

namespace perclab {

// One evaluation of the bound sequence at generation k.
//   mid       = (k-1)/2 for odd k, k/2 - 1 for even k
//   log_count = ln(C(k,mid) * 2^(k-mid))
//   b_k       = 2^(-1/2) * C(k,mid)^(-1/k), the displayed bound term
struct BoundPoint {
    std::int64_t k = 0;
    std::int64_t mid = 0;
    double log_count = 0.0;
    double b_k = 0.0;
};

// Finite-k surrogate of the percolating-path tally: log of the expected
// number of open up-paths to the mid arc at vertex-open probability p.
struct PsiEstimate {
    std::int64_t k = 0;
    double p = 0.0;
    double log_psi = 0.0;
};

// 2^(-3/2), the limit of the bound sequence.
inline constexpr double kBoundLimit = std::numbers::sqrt2 / 4.0;

std::int64_t mid_index(std::int64_t k);

// ln C(k,i) with relative error <= 1e-12 for k up to 1e6 (checked against
// the exact big-integer module for k <= 200).
double log_binomial(std::int64_t k, std::int64_t i);

// ln(C(k,i) * 2^(k-i)), the log of path_count(k,i) without building it.
double log_path_count(std::int64_t k, std::int64_t i);

// Smallest p with C(k,i) * 2^(k-i) * p^k >= 1, i.e. the count^(-1/k) root,
// evaluated in log space.
double threshold_p(std::int64_t k, std::int64_t i);

BoundPoint bound_at(std::int64_t k);

// bound_at applied elementwise; errors on an empty list.
std::vector<BoundPoint> bound_series(const std::vector<std::int64_t>& ks);

// log_psi = ln path_count(k, mid_index(k)) + k ln p. Positive iff the
// expected open mid-arc path count exceeds 1; zero at p = threshold_p.
// The k-independent leading constant of the limit expression is omitted:
// it rescales psi but never moves the threshold.
PsiEstimate psi_finite(std::int64_t k, double p);

// C(k,(k-1)/2)^(1/k) for odd k; approaches 2 from below.
double binom_kth_root_limit_check(std::int64_t k);

}  // namespace perclab
