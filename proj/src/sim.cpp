#include "perclab/sim.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>
#include <thread>

#include "perclab/rng.hpp"
#include "perclab/union_find.hpp"

namespace perclab {

std::string origin_rule_name(OriginRule rule) {
    return rule == OriginRule::ConditionedOpen ? "conditioned-open" : "sampled";
}

OriginRule origin_rule_from_name(const std::string& name) {
    if (name == "conditioned-open") return OriginRule::ConditionedOpen;
    if (name == "sampled") return OriginRule::Sampled;
    throw std::invalid_argument("unknown origin rule '" + name +
                                "' (expected conditioned-open or sampled)");
}

std::string event_name(CrossingEvent event) {
    return event == CrossingEvent::OneArm ? "one-arm" : "two-arm";
}

CrossingEvent event_from_name(const std::string& name) {
    if (name == "one-arm") return CrossingEvent::OneArm;
    if (name == "two-arm") return CrossingEvent::TwoArm;
    throw std::invalid_argument("unknown event '" + name + "' (expected one-arm or two-arm)");
}

void validate_config(const SimConfig& config) {
    if (config.k < 1) throw std::invalid_argument("simulation radius k must be >= 1");
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!(config.p >= 0.0) || config.p > 1.0)
        throw std::invalid_argument("open probability p must lie in [0, 1]");
}

Ball::Ball(LatticeVariant variant, std::int64_t k) : variant_(variant), k_(k) {
    auto layers = ball_layers(k, variant);
    layer_offsets_.reserve(layers.size() + 1);
    layer_offsets_.push_back(0);
    for (auto& layer : layers) {
        vertices_.insert(vertices_.end(), layer.begin(), layer.end());
        layer_offsets_.push_back(vertices_.size());
    }
    index_.reserve(vertices_.size());
    for (std::uint32_t i = 0; i < vertices_.size(); ++i) index_.emplace(vertices_[i], i);

    const auto& ss = steps(variant);
    const std::size_t n_fwd = ss.size() / 2;
    forward_.assign(3 * vertices_.size(), kNoVertex);
    for (std::uint32_t i = 0; i < vertices_.size(); ++i)
        for (std::size_t s = 0; s < n_fwd; ++s)
            if (auto j = try_index_of(vertices_[i] + ss[s])) forward_[3 * i + s] = *j;

    boundary_begin_ = static_cast<std::uint32_t>(layer_offsets_[layer_offsets_.size() - 2]);

    if (k >= 1) {
        for (Vertex v : arc_z2(k, ArcSign::Positive)) positive_arc_.push_back(index_of(v));
        for (Vertex v : arc_z2(k, ArcSign::Negative)) negative_arc_.push_back(index_of(v));
    }
}

std::uint32_t Ball::index_of(Vertex v) const {
    auto it = index_.find(v);
    if (it == index_.end())
        throw std::out_of_range("vertex " + to_string(v) + " outside ball of radius " +
                                std::to_string(k_));
    return it->second;
}

std::optional<std::uint32_t> Ball::try_index_of(Vertex v) const {
    auto it = index_.find(v);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::int64_t Ball::distance(std::uint32_t index) const {
    if (index >= vertices_.size()) throw std::out_of_range("vertex index outside ball");
    auto it = std::upper_bound(layer_offsets_.begin(), layer_offsets_.end(),
                               static_cast<std::size_t>(index));
    return static_cast<std::int64_t>(it - layer_offsets_.begin()) - 1;
}

namespace {

void fill_flags(const Ball& ball, const SimConfig& config, std::int64_t trial_index,
                std::vector<std::uint8_t>& open) {
    open.resize(ball.size());
    const auto trial = static_cast<std::uint64_t>(trial_index);
    for (std::uint32_t i = 0; i < open.size(); ++i)
        open[i] = keyed_uniform(config.seed, trial, i) < config.p ? 1 : 0;
    if (config.origin_rule == OriginRule::ConditionedOpen) open[0] = 1;
}

// Union-find connectivity over one configuration. One union pass over the
// open vertices, then each event query compares boundary or arc roots with
// the origin root. The boundary and arc sets must stay out of the union
// pass: a shared terminal node would bridge distinct open clusters and turn
// the crossing events into one-arm lookalikes. Buffers are reused trial to
// trial.
class ConnectivityEngine {
public:
    explicit ConnectivityEngine(const Ball& ball) : ball_(ball) {}

    void build(const std::vector<std::uint8_t>& open) {
        const auto n = static_cast<std::uint32_t>(ball_.size());
        uf_.reset(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!open[i]) continue;
            const std::uint32_t* fwd = ball_.forward(i);
            for (int s = 0; s < 3; ++s) {
                std::uint32_t j = fwd[s];
                if (j != kNoVertex && open[j]) uf_.merge(i, j);
            }
        }
    }

    bool one_arm(const std::vector<std::uint8_t>& open) {
        if (!open[0]) return false;
        const std::uint32_t root = uf_.find(0);
        for (std::uint32_t i = ball_.boundary_begin(); i < ball_.size(); ++i)
            if (open[i] && uf_.find(i) == root) return true;
        return false;
    }

    bool two_arm(const std::vector<std::uint8_t>& open) {
        if (!open[0]) return false;
        const std::uint32_t root = uf_.find(0);
        bool pos = false;
        for (std::uint32_t i : ball_.positive_arc())
            if (open[i] && uf_.find(i) == root) {
                pos = true;
                break;
            }
        if (!pos) return false;
        for (std::uint32_t i : ball_.negative_arc())
            if (open[i] && uf_.find(i) == root) return true;
        return false;
    }

    bool evaluate(const std::vector<std::uint8_t>& open, CrossingEvent event) {
        build(open);
        return event == CrossingEvent::OneArm ? one_arm(open) : two_arm(open);
    }

    bool connected(std::uint32_t a, std::uint32_t b) { return uf_.connected(a, b); }

private:
    const Ball& ball_;
    UnionFind uf_;
};

void require_same_ball(const OpenConfiguration& cfg) {
    if (cfg.ball == nullptr || cfg.open.size() != cfg.ball->size())
        throw std::invalid_argument("configuration flags do not match the ball");
}

}  // namespace

OpenConfiguration sample_configuration(const Ball& ball, const SimConfig& config,
                                       std::int64_t trial_index) {
    OpenConfiguration cfg;
    cfg.ball = &ball;
    fill_flags(ball, config, trial_index, cfg.open);
    return cfg;
}

bool one_arm(const OpenConfiguration& cfg) {
    require_same_ball(cfg);
    ConnectivityEngine engine(*cfg.ball);
    return engine.evaluate(cfg.open, CrossingEvent::OneArm);
}

bool two_arm(const OpenConfiguration& cfg) {
    require_same_ball(cfg);
    ConnectivityEngine engine(*cfg.ball);
    return engine.evaluate(cfg.open, CrossingEvent::TwoArm);
}

bool uf_connected(const OpenConfiguration& cfg, Vertex a, Vertex b) {
    require_same_ball(cfg);
    const Ball& ball = *cfg.ball;
    const std::uint32_t ia = ball.index_of(a);
    const std::uint32_t ib = ball.index_of(b);
    if (!cfg.open[ia] || !cfg.open[ib]) return false;
    ConnectivityEngine engine(ball);
    engine.build(cfg.open);
    return engine.connected(ia, ib);
}

bool connectivity_oracle(const OpenConfiguration& cfg, Vertex a, Vertex b) {
    require_same_ball(cfg);
    const Ball& ball = *cfg.ball;
    const std::uint32_t ia = ball.index_of(a);
    const std::uint32_t ib = ball.index_of(b);
    if (!cfg.open[ia] || !cfg.open[ib]) return false;
    if (ia == ib) return true;

    std::vector<std::uint8_t> visited(ball.size(), 0);
    std::deque<std::uint32_t> queue = {ia};
    visited[ia] = 1;
    while (!queue.empty()) {
        std::uint32_t i = queue.front();
        queue.pop_front();
        for (Vertex u : neighbors(ball.vertices()[i], ball.variant())) {
            auto j = ball.try_index_of(u);
            if (!j || visited[*j] || !cfg.open[*j]) continue;
            if (*j == ib) return true;
            visited[*j] = 1;
            queue.push_back(*j);
        }
    }
    return false;
}

WilsonInterval wilson_interval(std::int64_t hits, std::int64_t trials) {
    if (trials < 1) throw std::invalid_argument("wilson_interval: trials must be >= 1");
    if (hits < 0 || hits > trials)
        throw std::invalid_argument("wilson_interval: hits outside [0, trials]");
    constexpr double z = 1.9599639845400545;  // 97.5% normal quantile
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(hits) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

namespace {

// Splits [0, trials) into contiguous chunks, runs fn(first, last) on each
// worker and returns the per-chunk results in chunk order, so the final
// reduction is independent of the worker count.
template <typename R, typename Fn>
std::vector<R> run_chunked(std::int64_t trials, int workers, const Fn& fn) {
    const int n_workers =
        static_cast<int>(std::min<std::int64_t>(std::max(workers, 1), trials));
    std::vector<R> partial(static_cast<std::size_t>(n_workers));
    if (n_workers == 1) {
        partial[0] = fn(std::int64_t{0}, trials);
        return partial;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) {
        const std::int64_t first = trials * w / n_workers;
        const std::int64_t last = trials * (w + 1) / n_workers;
        pool.emplace_back(
            [&, w, first, last] { partial[static_cast<std::size_t>(w)] = fn(first, last); });
    }
    for (auto& t : pool) t.join();
    return partial;
}

}  // namespace

CrossingEstimate estimate(const Ball& ball, const SimConfig& config, CrossingEvent event,
                          int workers) {
    validate_config(config);
    if (ball.variant() != config.variant || ball.radius() != config.k)
        throw std::invalid_argument("ball does not match the simulation config");

    auto partial = run_chunked<std::int64_t>(
        config.trials, workers, [&](std::int64_t first, std::int64_t last) {
            ConnectivityEngine engine(ball);
            std::vector<std::uint8_t> open;
            std::int64_t hits = 0;
            for (std::int64_t t = first; t < last; ++t) {
                fill_flags(ball, config, t, open);
                if (engine.evaluate(open, event)) ++hits;
            }
            return hits;
        });

    CrossingEstimate est;
    est.config = config;
    est.event = event;
    for (std::int64_t h : partial) est.hits += h;
    est.phat = static_cast<double>(est.hits) / static_cast<double>(config.trials);
    WilsonInterval ci = wilson_interval(est.hits, config.trials);
    est.ci_low = ci.low;
    est.ci_high = ci.high;
    return est;
}

CrossingEstimate estimate(const SimConfig& config, CrossingEvent event, int workers) {
    validate_config(config);
    Ball ball(config.variant, config.k);
    return estimate(ball, config, event, workers);
}

std::vector<CrossingEstimate> sweep(LatticeVariant variant,
                                    const std::vector<std::int64_t>& k_list,
                                    const std::vector<double>& p_grid, std::int64_t trials,
                                    std::uint64_t seed, CrossingEvent event,
                                    OriginRule origin_rule, int workers) {
    if (k_list.empty()) throw std::invalid_argument("sweep: empty k list");
    if (p_grid.empty()) throw std::invalid_argument("sweep: empty p grid");
    for (std::size_t i = 1; i < p_grid.size(); ++i)
        if (!(p_grid[i - 1] < p_grid[i]))
            throw std::invalid_argument("sweep: p grid must be strictly ascending");

    std::vector<CrossingEstimate> table;
    table.reserve(k_list.size() * p_grid.size());
    for (std::int64_t k : k_list) {
        Ball ball(variant, k);
        for (double p : p_grid) {
            SimConfig config{variant, k, p, trials, seed, origin_rule};
            table.push_back(estimate(ball, config, event, workers));
        }
    }
    return table;
}

BisectionResult pc_bisect(LatticeVariant variant, std::int64_t k, std::int64_t trials,
                          std::uint64_t seed, double target, double tol, double p_low,
                          double p_high, OriginRule origin_rule, int workers) {
    if (!(tol > 0.0)) throw std::invalid_argument("pc_bisect: tol must be > 0");
    if (!(target > 0.0) || !(target < 1.0))
        throw std::invalid_argument("pc_bisect: target must lie in (0, 1)");
    if (!(p_low >= 0.0) || !(p_high <= 1.0) || !(p_low < p_high))
        throw std::invalid_argument("pc_bisect: need 0 <= p_low < p_high <= 1");

    Ball ball(variant, k);
    BisectionResult result;
    auto eval = [&](double p) {
        SimConfig config{variant, k, p, trials, seed, origin_rule};
        CrossingEstimate est = estimate(ball, config, CrossingEvent::TwoArm, workers);
        result.trace.push_back(est);
        return est.phat;
    };

    const double phat_low = eval(p_low);
    const double phat_high = eval(p_high);
    if (phat_low > target || phat_high < target)
        throw std::runtime_error("pc_bisect: interval [" + std::to_string(p_low) + ", " +
                                 std::to_string(p_high) + "] does not bracket target " +
                                 std::to_string(target) + " (phat " + std::to_string(phat_low) +
                                 " .. " + std::to_string(phat_high) + ")");

    double low = p_low, high = p_high;
    while (high - low > tol) {
        const double mid = 0.5 * (low + high);
        if (eval(mid) < target)
            low = mid;
        else
            high = mid;
    }
    result.p_c = 0.5 * (low + high);
    return result;
}

PathCountEstimate mc_open_path_count(std::int64_t k, double p, std::int64_t trials,
                                     std::uint64_t seed, int workers) {
    if (k < 1 || k > kPathEnumMaxK)
        throw std::invalid_argument("mc_open_path_count: k=" + std::to_string(k) +
                                    " outside enumeration budget [1, " +
                                    std::to_string(kPathEnumMaxK) + "]");
    if (!(p >= 0.0) || p > 1.0)
        throw std::invalid_argument("mc_open_path_count: p must lie in [0, 1]");
    if (trials < 1) throw std::invalid_argument("mc_open_path_count: trials must be >= 1");

    Ball ball(LatticeVariant::TriUp, k);

    // All 3^k up-paths as flat index sequences; step order (1,0),(0,1),(1,1).
    const auto& up = steps(LatticeVariant::TriUp);
    std::vector<std::uint32_t> paths;
    std::vector<std::uint32_t> prefix(static_cast<std::size_t>(k));
    std::vector<int> digits(static_cast<std::size_t>(k), 0);
    for (;;) {
        Vertex v{0, 0};
        for (std::size_t d = 0; d < digits.size(); ++d) {
            v = v + up[static_cast<std::size_t>(digits[d])];
            prefix[d] = ball.index_of(v);
        }
        paths.insert(paths.end(), prefix.begin(), prefix.end());
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == 3) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
    const std::size_t n_paths = paths.size() / static_cast<std::size_t>(k);

    SimConfig config{LatticeVariant::TriUp, k, p, trials, seed, OriginRule::ConditionedOpen};
    struct Moments {
        std::uint64_t sum = 0;
        std::uint64_t sum_sq = 0;
    };
    auto partial = run_chunked<Moments>(trials, workers, [&](std::int64_t first, std::int64_t last) {
        std::vector<std::uint8_t> open;
        Moments m;
        for (std::int64_t t = first; t < last; ++t) {
            fill_flags(ball, config, t, open);
            std::uint64_t count = 0;
            const std::uint32_t* path = paths.data();
            for (std::size_t q = 0; q < n_paths; ++q, path += k) {
                bool all_open = true;
                for (std::int64_t d = 0; d < k; ++d)
                    if (!open[path[d]]) {
                        all_open = false;
                        break;
                    }
                count += all_open ? 1 : 0;
            }
            m.sum += count;
            m.sum_sq += count * count;
        }
        return m;
    });
    std::uint64_t sum = 0, sum_sq = 0;
    for (const Moments& m : partial) {
        sum += m.sum;
        sum_sq += m.sum_sq;
    }

    PathCountEstimate est;
    est.k = k;
    est.p = p;
    est.trials = trials;
    est.seed = seed;
    const double n = static_cast<double>(trials);
    est.mean = static_cast<double>(sum) / n;
    if (trials > 1) {
        const double var =
            (static_cast<double>(sum_sq) - n * est.mean * est.mean) / (n - 1.0);
        est.std_error = std::sqrt(std::max(0.0, var) / n);
    }
    return est;
}

}  // namespace perclab
