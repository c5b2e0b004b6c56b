#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "perclab/lattice.hpp"

using namespace perclab;

namespace {

std::set<Vertex> as_set(const std::vector<Vertex>& vs) { return {vs.begin(), vs.end()}; }

// Independent distance predicates for ball membership checks.
bool in_ball_oracle(Vertex v, LatticeVariant variant, std::int64_t k) {
    const std::int64_t abs1 = std::abs(v.a1), abs2 = std::abs(v.a2);
    switch (variant) {
        case LatticeVariant::Z2: return abs1 + abs2 <= k;
        case LatticeVariant::TriUp:
            return (v.a1 * v.a2 >= 0 ? std::max(abs1, abs2) : abs1 + abs2) <= k;
        case LatticeVariant::TriRight:
            return (v.a1 * v.a2 <= 0 ? std::max(abs1, abs2) : abs1 + abs2) <= k;
    }
    return false;
}

}  // namespace

TEST_CASE("norm is the L1 coordinate sum") {
    CHECK(norm({0, 0}) == 0);
    CHECK(norm({2, 2}) == 4);
    CHECK(norm({-3, 1}) == 4);
    CHECK(norm({1'000'000, -1'000'000}) == 2'000'000);
}

TEST_CASE("up neighborhoods") {
    CHECK(up_neighbors({0, 0}, LatticeVariant::Z2) == std::vector<Vertex>{{1, 0}, {0, 1}});
    CHECK(up_neighbors({0, 0}, LatticeVariant::TriUp) ==
          std::vector<Vertex>{{1, 0}, {0, 1}, {1, 1}});
    CHECK(up_neighbors({2, 1}, LatticeVariant::TriUp) ==
          std::vector<Vertex>{{3, 1}, {2, 2}, {3, 2}});
    CHECK_THROWS_WITH_AS(up_neighbors({0, 0}, LatticeVariant::TriRight),
                         doctest::Contains("unsupported variant"), std::invalid_argument);
}

TEST_CASE("full neighborhoods per variant") {
    auto z2 = neighbors({0, 0}, LatticeVariant::Z2);
    CHECK(z2.size() == 4);
    CHECK(as_set(z2) == std::set<Vertex>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}});

    auto tri_up = as_set(neighbors({0, 0}, LatticeVariant::TriUp));
    CHECK(tri_up.size() == 6);
    CHECK(tri_up.count({1, 1}) == 1);
    CHECK(tri_up.count({-1, -1}) == 1);

    auto tri_right = as_set(neighbors({0, 0}, LatticeVariant::TriRight));
    CHECK(tri_right.size() == 6);
    CHECK(tri_right.count({1, -1}) == 1);
    CHECK(tri_right.count({-1, 1}) == 1);
}

TEST_CASE("neighbor symmetry is undirected") {
    std::mt19937_64 gen(7);
    std::uniform_int_distribution<std::int64_t> coord(-50, 50);
    for (LatticeVariant variant :
         {LatticeVariant::Z2, LatticeVariant::TriUp, LatticeVariant::TriRight}) {
        for (int rep = 0; rep < 200; ++rep) {
            Vertex v{coord(gen), coord(gen)};
            for (Vertex u : neighbors(v, variant)) {
                auto back = neighbors(u, variant);
                CHECK(std::find(back.begin(), back.end(), v) != back.end());
            }
        }
    }
}

TEST_CASE("up steps increment the norm in the positive cone") {
    std::mt19937_64 gen(11);
    std::uniform_int_distribution<std::int64_t> coord(0, 100);
    for (int rep = 0; rep < 300; ++rep) {
        Vertex v{coord(gen), coord(gen)};
        for (Vertex u : up_neighbors(v, LatticeVariant::Z2)) CHECK(norm(u) == norm(v) + 1);
    }
}

TEST_CASE("arc_z2 closed form") {
    CHECK(arc_z2(1, ArcSign::Positive) == std::vector<Vertex>{{1, 0}, {0, 1}});
    CHECK(arc_z2(4, ArcSign::Positive) ==
          std::vector<Vertex>{{4, 0}, {3, 1}, {2, 2}, {1, 3}, {0, 4}});
    CHECK(arc_z2(2, ArcSign::Negative) == std::vector<Vertex>{{-2, 0}, {-1, -1}, {0, -2}});
    CHECK_THROWS_AS(arc_z2(0, ArcSign::Positive), std::invalid_argument);
}

TEST_CASE("arc_z2 size, disjointness and recursion agreement") {
    for (std::int64_t k = 1; k <= 100; ++k) {
        auto pos = arc_z2(k, ArcSign::Positive);
        CHECK(pos.size() == static_cast<std::size_t>(k) + 1);
        CHECK(pos == arc_z2_recursive(k, ArcSign::Positive));
        auto neg = as_set(arc_z2(k, ArcSign::Negative));
        for (Vertex v : pos) CHECK(neg.count(v) == 0);
    }
}

TEST_CASE("arc_z2 coordinates stay exact at k = 1e6") {
    const std::int64_t k = 1'000'000;
    auto arc = arc_z2(k, ArcSign::Positive);
    CHECK(arc.size() == static_cast<std::size_t>(k) + 1);
    CHECK(arc.front() == Vertex{k, 0});
    CHECK(arc.back() == Vertex{0, k});
    CHECK(norm(arc[static_cast<std::size_t>(k) / 2]) == k);
}

TEST_CASE("arc_t matches the one-step closure of the previous arc") {
    CHECK(as_set(arc_t(1)) == std::set<Vertex>{{1, 0}, {0, 1}, {1, 1}});
    // derived oracle: expand arc_t(k-1) one up-step and deduplicate
    for (std::int64_t k = 2; k <= 12; ++k) {
        std::set<Vertex> expanded;
        for (Vertex v : arc_t(k - 1))
            for (Vertex u : up_neighbors(v, LatticeVariant::TriUp)) expanded.insert(u);
        CHECK(as_set(arc_t(k)) == expanded);
    }
}

TEST_CASE("arc_t closed form equals the recursive construction") {
    for (std::int64_t k = 1; k <= 20; ++k) {
        auto closed = arc_t(k);
        CHECK(closed == arc_t_recursive(k));
        CHECK(closed.size() == static_cast<std::size_t>((k + 1) * (k + 2) / 2));
        for (Vertex v : closed) {
            CHECK(v.a1 >= 0);
            CHECK(v.a2 >= 0);
            CHECK(std::max(v.a1, v.a2) <= k);
            CHECK(v.a1 + v.a2 >= k);
        }
    }
    // first generation lists the unit steps before the diagonal
    CHECK(arc_t(1) == std::vector<Vertex>{{1, 0}, {0, 1}, {1, 1}});
}

TEST_CASE("ball sizes and membership") {
    CHECK(ball(0, LatticeVariant::Z2) == std::vector<Vertex>{{0, 0}});
    CHECK(ball(1, LatticeVariant::TriUp).size() == 7);
    CHECK(ball(2, LatticeVariant::Z2).size() == 13);

    for (LatticeVariant variant :
         {LatticeVariant::Z2, LatticeVariant::TriUp, LatticeVariant::TriRight}) {
        for (std::int64_t k = 0; k <= 10; ++k) {
            auto b = ball(k, variant);
            std::set<Vertex> expected;
            for (std::int64_t a1 = -k; a1 <= k; ++a1)
                for (std::int64_t a2 = -k; a2 <= k; ++a2)
                    if (in_ball_oracle({a1, a2}, variant, k)) expected.insert({a1, a2});
            CHECK(as_set(b) == expected);
            CHECK(b.size() == expected.size());
        }
    }
}

TEST_CASE("ball layer ordering is deterministic and distance-sorted") {
    auto layers = ball_layers(5, LatticeVariant::TriUp);
    CHECK(layers.size() == 6);
    CHECK(layers[0] == std::vector<Vertex>{{0, 0}});
    for (auto& layer : layers) CHECK(std::is_sorted(layer.begin(), layer.end()));
    CHECK(ball(5, LatticeVariant::TriUp) == ball(5, LatticeVariant::TriUp));
}

TEST_CASE("variant names round-trip") {
    for (LatticeVariant variant :
         {LatticeVariant::Z2, LatticeVariant::TriUp, LatticeVariant::TriRight})
        CHECK(variant_from_name(variant_name(variant)) == variant);
    CHECK_THROWS_AS(variant_from_name("hex"), std::invalid_argument);
}
