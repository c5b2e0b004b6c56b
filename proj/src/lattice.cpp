#include "perclab/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>

namespace perclab {

std::string variant_name(LatticeVariant variant) {
    switch (variant) {
        case LatticeVariant::Z2: return "z2";
        case LatticeVariant::TriUp: return "tri-up";
        case LatticeVariant::TriRight: return "tri-right";
    }
    throw std::logic_error("unknown lattice variant tag");
}

LatticeVariant variant_from_name(const std::string& name) {
    if (name == "z2") return LatticeVariant::Z2;
    if (name == "tri-up") return LatticeVariant::TriUp;
    if (name == "tri-right") return LatticeVariant::TriRight;
    throw std::invalid_argument("unknown lattice variant '" + name +
                                "' (expected z2, tri-up or tri-right)");
}

std::size_t VertexHash::operator()(const Vertex& v) const noexcept {
    auto mix = [](std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };
    std::uint64_t h = mix(static_cast<std::uint64_t>(v.a1) + 0x9E3779B97F4A7C15ULL);
    return static_cast<std::size_t>(mix(h ^ static_cast<std::uint64_t>(v.a2)));
}

std::string to_string(Vertex v) {
    return std::to_string(v.a1) + "," + std::to_string(v.a2);
}

std::int64_t norm(Vertex v) {
    return std::llabs(v.a1) + std::llabs(v.a2);
}

const std::vector<Step>& steps(LatticeVariant variant) {
    static const std::vector<Step> z2 = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    static const std::vector<Step> tri_up = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
    static const std::vector<Step> tri_right = {{1, 0}, {0, 1}, {1, -1}, {-1, 0}, {0, -1}, {-1, 1}};
    switch (variant) {
        case LatticeVariant::Z2: return z2;
        case LatticeVariant::TriUp: return tri_up;
        case LatticeVariant::TriRight: return tri_right;
    }
    throw std::logic_error("unknown lattice variant tag");
}

std::vector<Vertex> neighbors(Vertex v, LatticeVariant variant) {
    const auto& ss = steps(variant);
    std::vector<Vertex> out;
    out.reserve(ss.size());
    for (Step s : ss) out.push_back(v + s);
    return out;
}

std::vector<Vertex> up_neighbors(Vertex v, LatticeVariant variant) {
    switch (variant) {
        case LatticeVariant::Z2:
            return {v + Step{1, 0}, v + Step{0, 1}};
        case LatticeVariant::TriUp:
            return {v + Step{1, 0}, v + Step{0, 1}, v + Step{1, 1}};
        case LatticeVariant::TriRight:
            throw std::invalid_argument(
                "unsupported variant: tri-right has no up-step neighborhood");
    }
    throw std::logic_error("unknown lattice variant tag");
}

namespace {

void require_generation(std::int64_t k) {
    if (k < 1) throw std::invalid_argument("arc generation k must be >= 1");
}

}  // namespace

std::vector<Vertex> arc_z2(std::int64_t k, ArcSign sign) {
    require_generation(k);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (std::int64_t a1 = k; a1 >= 0; --a1) {
        Vertex v{a1, k - a1};
        out.push_back(sign == ArcSign::Positive ? v : negated(v));
    }
    return out;
}

std::vector<Vertex> arc_z2_recursive(std::int64_t k, ArcSign sign) {
    require_generation(k);
    std::vector<Vertex> arc = {{1, 0}, {0, 1}};
    for (std::int64_t gen = 2; gen <= k; ++gen) {
        std::unordered_set<Vertex, VertexHash> next;
        for (Vertex v : arc)
            for (Vertex u : up_neighbors(v, LatticeVariant::Z2)) next.insert(u);
        arc.assign(next.begin(), next.end());
    }
    std::sort(arc.begin(), arc.end(),
              [](Vertex a, Vertex b) { return a.a1 > b.a1; });
    if (sign == ArcSign::Negative)
        for (Vertex& v : arc) v = negated(v);
    return arc;
}

std::vector<Vertex> arc_t(std::int64_t k) {
    require_generation(k);
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>((k + 1) * (k + 2) / 2));
    for (std::int64_t n = k; n <= 2 * k; ++n)
        for (std::int64_t a1 = std::min(n, k); a1 >= n - k; --a1)
            out.push_back(Vertex{a1, n - a1});
    return out;
}

std::vector<Vertex> arc_t_recursive(std::int64_t k) {
    require_generation(k);
    std::vector<Vertex> arc = {{1, 0}, {0, 1}, {1, 1}};
    for (std::int64_t gen = 2; gen <= k; ++gen) {
        std::unordered_set<Vertex, VertexHash> next;
        for (Vertex v : arc)
            for (Vertex u : up_neighbors(v, LatticeVariant::TriUp)) next.insert(u);
        arc.assign(next.begin(), next.end());
    }
    std::sort(arc.begin(), arc.end(), [](Vertex a, Vertex b) {
        if (norm(a) != norm(b)) return norm(a) < norm(b);
        return a.a1 > b.a1;
    });
    return arc;
}

std::vector<std::vector<Vertex>> ball_layers(std::int64_t k, LatticeVariant variant) {
    if (k < 0) throw std::invalid_argument("ball radius k must be >= 0");
    std::vector<std::vector<Vertex>> layers;
    std::unordered_set<Vertex, VertexHash> seen;
    layers.push_back({Vertex{0, 0}});
    seen.insert(Vertex{0, 0});
    for (std::int64_t d = 1; d <= k; ++d) {
        std::vector<Vertex> layer;
        for (Vertex v : layers.back())
            for (Vertex u : neighbors(v, variant))
                if (seen.insert(u).second) layer.push_back(u);
        std::sort(layer.begin(), layer.end());
        layers.push_back(std::move(layer));
    }
    return layers;
}

std::vector<Vertex> ball(std::int64_t k, LatticeVariant variant) {
    std::vector<Vertex> out;
    for (auto& layer : ball_layers(k, variant))
        out.insert(out.end(), layer.begin(), layer.end());
    return out;
}

}  // namespace perclab
