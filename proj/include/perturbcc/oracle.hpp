#pragma once

#include <vector>

#include "perturbcc/graph.hpp"

namespace perturbcc {

// Disjoint-set forest with union by size and path halving.
class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n), size_(n, 1) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

// Partition of 1..n into connected components. Members ascending within each
// component; components ordered by smallest member.
struct ComponentPartition {
    std::vector<std::vector<int>> components;

    int count() const { return static_cast<int>(components.size()); }
    bool operator==(const ComponentPartition&) const = default;
};

ComponentPartition uf_components(const Graph& g);

struct BfsLevels {
    // levels[k] = vertices at distance k from the start, ascending.
    std::vector<std::vector<int>> levels;

    int eccentricity() const { return static_cast<int>(levels.size()) - 1; }
};

BfsLevels bfs_levels(const Graph& g, int start);

// Longest shortest-path distance from start within its component.
int eccentricity(const Graph& g, int start);

// Longest shortest path within any single component; 0 for edgeless graphs.
int diameter(const Graph& g);

}  // namespace perturbcc
