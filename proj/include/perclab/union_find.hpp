#pragma once

#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace perclab {

// Disjoint-set forest with union by size and path compression. reset()
// reuses the buffers so a per-trial engine pays no allocation in the loop.
class UnionFind {
public:
    explicit UnionFind(std::size_t n = 0) { reset(n); }

    void reset(std::size_t n) {
        parent_.resize(n);
        std::iota(parent_.begin(), parent_.end(), 0u);
        size_.assign(n, 1u);
    }

    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            std::uint32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }

    void merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    bool connected(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }

    std::size_t size() const { return parent_.size(); }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
};

}  // namespace perclab
