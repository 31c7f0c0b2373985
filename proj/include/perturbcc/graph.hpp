#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "perturbcc/rational.hpp"

namespace perturbcc {

// Malformed input text: bad tokens, stray fields, broken headers.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Structurally invalid request: vertex ids out of range, impossible sizes.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// An invariant that should be unreachable failed; indicates a bug.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Edge = std::pair<int, int>;

// Undirected simple graph on vertices 1..n. Immutable once built and safe to
// share across threads. The constructor normalizes input edges: self-loops
// are dropped, duplicates merged, endpoints stored with u < v.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Normalized edge list: u < v, lexicographically sorted, unique.
    const std::vector<Edge>& edges() const { return edges_; }

    // Neighbors of v, ascending. v is 1-based.
    std::span<const int> neighbors(int v) const {
        check_vertex(v);
        return {adj_.data() + offsets_[v - 1], adj_.data() + offsets_[v]};
    }

    int degree(int v) const {
        check_vertex(v);
        return offsets_[v] - offsets_[v - 1];
    }

    int max_degree() const { return max_degree_; }

    bool has_edge(int u, int v) const;

private:
    void check_vertex(int v) const {
        if (v < 1 || v > n_) throw ValidationError("vertex id out of range: " + std::to_string(v));
    }

    int n_ = 0;
    int max_degree_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> offsets_;  // size n_+1, CSR row starts
    std::vector<int> adj_;      // neighbor ids, 1-based
};

struct DegreeInfo {
    std::vector<int> degree;  // degree[v-1] for v in 1..n
    int max_degree = 0;
};

DegreeInfo degrees(const Graph& g);

// Matrix portrait: flat array with one record per undirected edge, order
// unspecified. A solver sweep is one pass over it.
struct Portrait {
    int n = 0;
    std::vector<Edge> entries;
};

Portrait build_portrait(const Graph& g);

// Diagonal weight d and perturbation step for the weighted adjacency matrix
// A = A0 + d*I. Defaults come from for_graph: mu = max(max_degree, 2) and
// d = mu * max_degree, bumped to d = 2 for edgeless graphs so that d exceeds
// every degree and the row-dominance ratio is at least mu.
struct MatrixParams {
    Rational d = 2;
    double mu = 2.0;
    Rational epsilon = 1;

    static MatrixParams for_graph(const Graph& g);
};

struct LoadResult {
    Graph graph;
    int duplicate_edges = 0;  // dropped by normalization
    int self_loops = 0;       // dropped by normalization
};

// Text format: one "u v" pair per line, 1-based ids, optional first line
// "n <count>" fixing the vertex count (otherwise the max id seen is used).
// '#' starts a comment that runs to end of line; blank lines are skipped.
LoadResult load_edge_list(std::string_view text);
LoadResult load_edge_list_file(const std::string& path);

void write_edge_list(const Graph& g, std::ostream& out);

// Disjoint union of `count` simple paths of `len` vertices each. seed == 0
// keeps the identity labeling (chain c occupies ids c*len+1 .. (c+1)*len in
// order); any other seed shuffles vertex labels uniformly.
Graph gen_chain_union(int count, int len, std::uint64_t seed);

// Uniform random graph with exactly m distinct edges out of the n*(n-1)/2
// possible ones; every m-subset is equally likely.
Graph gen_random_graph(int n, long long m, std::uint64_t seed);

}  // namespace perturbcc
