#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace perclab {

// Z2 is the square lattice. TriUp and TriRight are the two triangular
// overlays obtained by adding one diagonal step pair, (1,1)/(-1,-1) or
// (1,-1)/(-1,1), to every vertex of Z2.
enum class LatticeVariant { Z2, TriUp, TriRight };

std::string variant_name(LatticeVariant variant);
LatticeVariant variant_from_name(const std::string& name);  // "z2" | "tri-up" | "tri-right"

// Vertex in the shared Z2 coordinate frame: a1 and a2 count the two basis
// steps. Triangular variants reuse this frame and differ only in adjacency.
// Coordinates are 64-bit so generations up to 1e6 and beyond cannot overflow.
struct Vertex {
    std::int64_t a1 = 0;
    std::int64_t a2 = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct Step {
    std::int64_t d1 = 0;
    std::int64_t d2 = 0;
};

inline Vertex operator+(Vertex v, Step s) { return Vertex{v.a1 + s.d1, v.a2 + s.d2}; }
inline Vertex negated(Vertex v) { return Vertex{-v.a1, -v.a2}; }

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept;
};

std::string to_string(Vertex v);  // "a1,a2"

// L1 norm |a1| + |a2|; zero exactly at the origin.
std::int64_t norm(Vertex v);

// Full step set of a variant in fixed order: the up half first, then the
// negations. Z2 has 4 steps, the triangular variants 6.
const std::vector<Step>& steps(LatticeVariant variant);

// All adjacent vertices, in the order of steps(variant).
std::vector<Vertex> neighbors(Vertex v, LatticeVariant variant);

// Up-step neighborhood: Z2 -> {v+(1,0), v+(0,1)}, TriUp additionally
// v+(1,1). TriRight has no usable up-step set for path counting and is
// rejected with an invalid_argument error.
std::vector<Vertex> up_neighbors(Vertex v, LatticeVariant variant);

enum class ArcSign { Positive, Negative };

// Positive arc of generation k in Z2: the positive-quadrant slice of the
// L1 sphere of radius k, ordered by descending a1. The negative arc is the
// pointwise negation in the same order. Requires k >= 1.
std::vector<Vertex> arc_z2(std::int64_t k, ArcSign sign);

// Same arc built by iterating the union-of-up-neighbors recurrence from
// A_1 = {(1,0),(0,1)}; used to cross-check the closed form.
std::vector<Vertex> arc_z2_recursive(std::int64_t k, ArcSign sign);

// Vertices reachable from the origin in exactly k TriUp up-steps. Closed
// form: a1,a2 >= 0, max(a1,a2) <= k, a1+a2 >= k. Ordered by norm ascending
// then a1 descending, so arc_t(1) lists (1,0),(0,1),(1,1).
std::vector<Vertex> arc_t(std::int64_t k);

// TriUp arc built by the up-neighbor recurrence, for cross-checking.
std::vector<Vertex> arc_t_recursive(std::int64_t k);

// BFS layers 0..k under the variant's adjacency; layer d holds the vertices
// at graph distance exactly d, sorted by (a1,a2).
std::vector<std::vector<Vertex>> ball_layers(std::int64_t k, LatticeVariant variant);

// All vertices at graph distance <= k, concatenated layer by layer.
std::vector<Vertex> ball(std::int64_t k, LatticeVariant variant);

}  // namespace perclab
