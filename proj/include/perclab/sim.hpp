#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perclab/lattice.hpp"

namespace perclab {

// Fixed default so casual runs reproduce; entropy is opt-in at the CLI.
inline constexpr std::uint64_t kDefaultSeed = 1;

// Up-path enumeration budget for the Monte Carlo path-count estimator.
inline constexpr std::int64_t kPathEnumMaxK = 8;

inline constexpr std::uint32_t kNoVertex = 0xFFFFFFFFu;

enum class OriginRule { ConditionedOpen, Sampled };
enum class CrossingEvent { OneArm, TwoArm };

std::string origin_rule_name(OriginRule rule);
OriginRule origin_rule_from_name(const std::string& name);
std::string event_name(CrossingEvent event);
CrossingEvent event_from_name(const std::string& name);

struct SimConfig {
    LatticeVariant variant = LatticeVariant::TriUp;
    std::int64_t k = 1;
    double p = 0.5;
    std::int64_t trials = 1;
    std::uint64_t seed = kDefaultSeed;
    OriginRule origin_rule = OriginRule::ConditionedOpen;
};

// Throws invalid_argument when trials < 1, p outside [0,1] or k < 1.
void validate_config(const SimConfig& config);

// Graph-distance ball of radius k with a fixed vertex indexing: BFS layer
// order, (a1,a2)-sorted within a layer, origin at index 0. Precomputes the
// forward-neighbor table the union-find engine walks per trial, plus the
// boundary range and the opposite Z2-frame arc memberships the crossing
// queries scan.
class Ball {
public:
    Ball(LatticeVariant variant, std::int64_t k);

    LatticeVariant variant() const { return variant_; }
    std::int64_t radius() const { return k_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }

    std::uint32_t index_of(Vertex v) const;                 // throws if outside
    std::optional<std::uint32_t> try_index_of(Vertex v) const;
    std::int64_t distance(std::uint32_t index) const;       // BFS layer

    // Vertices at graph distance exactly k occupy [boundary_begin, size).
    std::uint32_t boundary_begin() const { return boundary_begin_; }
    const std::vector<std::uint32_t>& positive_arc() const { return positive_arc_; }
    const std::vector<std::uint32_t>& negative_arc() const { return negative_arc_; }

    // 3 forward step targets per vertex (kNoVertex where the step leaves the
    // ball; the third slot is always kNoVertex for Z2).
    const std::uint32_t* forward(std::uint32_t index) const { return &forward_[3 * index]; }

private:
    LatticeVariant variant_;
    std::int64_t k_;
    std::vector<Vertex> vertices_;
    std::vector<std::size_t> layer_offsets_;  // k+2 entries
    std::vector<std::uint32_t> forward_;
    std::uint32_t boundary_begin_ = 0;
    std::vector<std::uint32_t> positive_arc_;
    std::vector<std::uint32_t> negative_arc_;
    std::unordered_map<Vertex, std::uint32_t, VertexHash> index_;
};

struct OpenConfiguration {
    const Ball* ball = nullptr;
    std::vector<std::uint8_t> open;  // one flag per ball vertex
};

// Independent Bernoulli(p) flags from the keyed stream (seed, trial, vertex
// index); identical inputs give identical configurations regardless of
// execution order. Under OriginRule::ConditionedOpen the origin is forced
// open.
OpenConfiguration sample_configuration(const Ball& ball, const SimConfig& config,
                                       std::int64_t trial_index);

// True iff the origin joins the distance-k boundary through open vertices.
bool one_arm(const OpenConfiguration& cfg);

// True iff the origin joins both opposite arcs through open vertices.
bool two_arm(const OpenConfiguration& cfg);

// Union-find verdict for one vertex pair.
bool uf_connected(const OpenConfiguration& cfg, Vertex a, Vertex b);

// Breadth-first reference: are a and b joined through open vertices?
// Must agree with uf_connected on every pair. Throws when a or b lies
// outside the ball.
bool connectivity_oracle(const OpenConfiguration& cfg, Vertex a, Vertex b);

struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
};

// 95% Wilson score interval for hits/trials.
WilsonInterval wilson_interval(std::int64_t hits, std::int64_t trials);

struct CrossingEstimate {
    SimConfig config;
    CrossingEvent event = CrossingEvent::OneArm;
    std::int64_t hits = 0;
    double phat = 0.0;
    double ci_low = 0.0;
    double ci_high = 1.0;
};

// Runs config.trials independent configurations and counts event hits.
// Bit-identical for any worker count: per-trial indicators are pure
// functions of (config, trial) and the hit count is their integer sum.
CrossingEstimate estimate(const SimConfig& config, CrossingEvent event, int workers = 1);
CrossingEstimate estimate(const Ball& ball, const SimConfig& config, CrossingEvent event,
                          int workers = 1);

// Cross-product of estimates over k_list x p_grid in that order. All cells
// share the seed, so per-trial indicators are monotone along p_grid.
// p_grid must be non-empty and strictly ascending.
std::vector<CrossingEstimate> sweep(LatticeVariant variant,
                                    const std::vector<std::int64_t>& k_list,
                                    const std::vector<double>& p_grid, std::int64_t trials,
                                    std::uint64_t seed,
                                    CrossingEvent event = CrossingEvent::OneArm,
                                    OriginRule origin_rule = OriginRule::ConditionedOpen,
                                    int workers = 1);

struct BisectionResult {
    std::vector<CrossingEstimate> trace;  // every estimate evaluated, in order
    double p_c = 0.0;                     // midpoint of the final interval
};

// Bisects p on the two-arm estimate until the interval is narrower than tol.
// Because all evaluations share the seed, phat is exactly nondecreasing in p
// and the bisection is deterministic. The result is a finite-size proxy for
// the critical probability, not the infinite-lattice value.
BisectionResult pc_bisect(LatticeVariant variant, std::int64_t k, std::int64_t trials,
                          std::uint64_t seed, double target = 0.5, double tol = 1.0 / 256,
                          double p_low = 0.0, double p_high = 1.0,
                          OriginRule origin_rule = OriginRule::ConditionedOpen,
                          int workers = 1);

struct PathCountEstimate {
    std::int64_t k = 0;
    double p = 0.0;
    std::int64_t trials = 0;
    std::uint64_t seed = 0;
    double mean = 0.0;       // Monte Carlo mean of open up-path counts
    double std_error = 0.0;  // sample standard error of the mean
};

// Monte Carlo mean, over TriUp configurations with the origin conditioned
// open, of the number of fully-open length-k up-paths. Unbiased for
// sum_i C(k,i) 2^(k-i) p^k. Rejects k outside [1, kPathEnumMaxK].
PathCountEstimate mc_open_path_count(std::int64_t k, double p, std::int64_t trials,
                                     std::uint64_t seed, int workers = 1);

}  // namespace perclab
