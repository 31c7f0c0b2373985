#pragma once

// Shared seeded graph corpora for the unit and acceptance suites. Everything
// here is deterministic per seed so failures reproduce.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "perturbcc/graph.hpp"
#include "perturbcc/oracle.hpp"

namespace corpus {

using perturbcc::Edge;
using perturbcc::Graph;

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    if (n >= 3) edges.emplace_back(1, n);
    return Graph(n, std::move(edges));
}

inline Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, std::move(edges));
}

inline Graph star_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return Graph(n, std::move(edges));
}

// The 8-vertex worked example used throughout: edges
// (1,2),(2,3),(2,6),(3,4),(3,7),(5,6),(6,7),(7,8); connected, diameter 4.
inline Graph figure_graph() {
    return Graph(8, {{1, 2}, {2, 3}, {2, 6}, {3, 4}, {3, 7}, {5, 6}, {6, 7}, {7, 8}});
}

// Path on five vertices labeled against the chain order: 1-5-4-3-2.
inline Graph descending_path5() {
    return Graph(5, {{1, 5}, {4, 5}, {3, 4}, {2, 3}});
}

inline Graph relabel(const Graph& g, std::mt19937_64& rng) {
    int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> edges;
    edges.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u - 1], perm[v - 1]);
    return Graph(n, std::move(edges));
}

// Uniform attachment tree: vertex k joins one of 1..k-1.
inline std::vector<Edge> random_tree_edges(int n, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        edges.emplace_back(pick(rng), v);
    }
    return edges;
}

inline Graph random_connected(int n, int extra_edges, std::mt19937_64& rng) {
    auto edges = random_tree_edges(n, rng);
    long long max_extra = static_cast<long long>(n) * (n - 1) / 2 - (n - 1);
    extra_edges = static_cast<int>(std::min<long long>(extra_edges, max_extra));
    std::uniform_int_distribution<int> pick(1, n);
    int added = 0;
    int attempts = 0;
    std::vector<Edge> all = edges;
    while (added < extra_edges && attempts < 50 * extra_edges + 100) {
        ++attempts;
        int u = pick(rng), v = pick(rng);
        if (u == v) continue;
        Edge e{std::min(u, v), std::max(u, v)};
        if (std::find(all.begin(), all.end(), e) != all.end()) continue;
        all.push_back(e);
        ++added;
    }
    Graph g(n, std::move(all));
    return relabel(g, rng);
}

// Seeded connected graphs with n in [min_n, max_n], from trees to dense.
inline std::vector<Graph> connected_corpus(int count, int min_n, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));
    std::uniform_int_distribution<int> size(min_n, max_n);
    while (static_cast<int>(out.size()) < count) {
        int n = size(rng);
        switch (rng() % 5) {
            case 0: out.push_back(path_graph(n)); break;
            case 1: out.push_back(n >= 3 ? cycle_graph(n) : path_graph(n)); break;
            case 2: out.push_back(star_graph(n)); break;
            case 3: out.push_back(complete_graph(n)); break;
            default: {
                int extra = static_cast<int>(rng() % (2 * static_cast<unsigned>(n) + 1));
                out.push_back(random_connected(n, extra, rng));
                break;
            }
        }
        if (rng() % 2 == 0) out.back() = relabel(out.back(), rng);
    }
    return out;
}

// Mixed corpus: density spread from edgeless to complete, mostly unions of
// 1..10 connected parts so the component counts stay in a known band.
inline std::vector<Graph> mixed_corpus(int count, int max_n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    out.reserve(static_cast<std::size_t>(count));

    out.push_back(Graph(1, {}));
    out.push_back(Graph(2, {}));
    out.push_back(Graph(2, {{1, 2}}));
    out.push_back(complete_graph(4));
    out.push_back(path_graph(5));
    out.push_back(figure_graph());
    out.push_back(path_graph(std::min(max_n, 256)));
    out.push_back(complete_graph(std::min(max_n, 16)));

    std::uniform_int_distribution<int> size(1, max_n);
    while (static_cast<int>(out.size()) < count) {
        int n = size(rng);
        switch (rng() % 6) {
            case 0:
                out.push_back(Graph(n, {}));
                break;
            case 1: {
                long long cap = std::min<long long>(static_cast<long long>(n) * (n - 1) / 2, 4LL * n);
                long long m = cap == 0 ? 0 : static_cast<long long>(rng() % (cap + 1));
                out.push_back(perturbcc::gen_random_graph(n, m, rng()));
                break;
            }
            case 2: {
                long long cap = static_cast<long long>(n) * (n - 1) / 2;
                long long m = cap == 0 ? 0 : static_cast<long long>(rng() % (cap + 1));
                out.push_back(perturbcc::gen_random_graph(n, m, rng()));
                break;
            }
            default: {
                int parts = 1 + static_cast<int>(rng() % std::min(10, n));
                std::vector<int> sizes(parts, 1);
                for (int rest = n - parts; rest > 0; --rest) ++sizes[rng() % parts];
                std::vector<Edge> edges;
                int offset = 0;
                for (int p = 0; p < parts; ++p) {
                    int pn = sizes[p];
                    if (pn > 1) {
                        int extra = static_cast<int>(rng() % (2 * static_cast<unsigned>(pn)));
                        Graph part = random_connected(pn, extra, rng);
                        for (const auto& [u, v] : part.edges()) {
                            edges.emplace_back(u + offset, v + offset);
                        }
                    }
                    offset += pn;
                }
                Graph g(n, std::move(edges));
                out.push_back(relabel(g, rng));
                break;
            }
        }
    }
    if (static_cast<int>(out.size()) > count) out.resize(static_cast<std::size_t>(count));
    return out;
}

// Every graph on n vertices (n <= 5): one per subset of the edge universe.
inline std::vector<Graph> all_graphs(int n) {
    std::vector<Edge> universe;
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) universe.emplace_back(u, v);
    }
    std::vector<Graph> out;
    out.reserve(1u << universe.size());
    for (unsigned bits = 0; bits < (1u << universe.size()); ++bits) {
        std::vector<Edge> edges;
        for (std::size_t e = 0; e < universe.size(); ++e) {
            if (bits & (1u << e)) edges.push_back(universe[e]);
        }
        out.push_back(Graph(n, std::move(edges)));
    }
    return out;
}

inline bool is_connected(const Graph& g) {
    return perturbcc::uf_components(g).count() == 1;
}

}  // namespace corpus
