#include "perclab/bound.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace perclab {

std::int64_t mid_index(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("mid_index: k must be >= 1");
    return (k % 2 != 0) ? (k - 1) / 2 : k / 2 - 1;
}

double log_binomial(std::int64_t k, std::int64_t i) {
    if (k < 0 || i < 0 || i > k)
        throw std::invalid_argument("log_binomial index i=" + std::to_string(i) +
                                    " out of range for k=" + std::to_string(k));
    if (i == 0 || i == k) return 0.0;
    return std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(i) + 1.0) -
           std::lgamma(static_cast<double>(k - i) + 1.0);
}

double log_path_count(std::int64_t k, std::int64_t i) {
    if (k < 1) throw std::invalid_argument("log_path_count: k must be >= 1");
    return log_binomial(k, i) + static_cast<double>(k - i) * std::numbers::ln2;
}

double threshold_p(std::int64_t k, std::int64_t i) {
    if (k < 1) throw std::invalid_argument("threshold_p: k must be >= 1");
    return std::exp(-log_path_count(k, i) / static_cast<double>(k));
}

BoundPoint bound_at(std::int64_t k) {
    BoundPoint pt;
    pt.k = k;
    pt.mid = mid_index(k);
    pt.log_count = log_path_count(k, pt.mid);
    pt.b_k = std::exp(-0.5 * std::numbers::ln2 -
                      log_binomial(k, pt.mid) / static_cast<double>(k));
    return pt;
}

std::vector<BoundPoint> bound_series(const std::vector<std::int64_t>& ks) {
    if (ks.empty()) throw std::invalid_argument("bound_series: empty k list");
    std::vector<BoundPoint> out;
    out.reserve(ks.size());
    for (std::int64_t k : ks) out.push_back(bound_at(k));
    return out;
}

PsiEstimate psi_finite(std::int64_t k, double p) {
    if (!(p > 0.0) || p > 1.0)
        throw std::invalid_argument("psi_finite: p must lie in (0, 1]");
    PsiEstimate est;
    est.k = k;
    est.p = p;
    est.log_psi = log_path_count(k, mid_index(k)) + static_cast<double>(k) * std::log(p);
    return est;
}

double binom_kth_root_limit_check(std::int64_t k) {
    if (k < 1 || k % 2 == 0)
        throw std::invalid_argument("binom_kth_root_limit_check: k must be odd and >= 1");
    return std::exp(log_binomial(k, (k - 1) / 2) / static_cast<double>(k));
}

}  // namespace perclab
