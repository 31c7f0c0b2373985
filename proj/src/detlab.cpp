#include "perturbcc/detlab.hpp"

#include <algorithm>
#include <numeric>

#include "perturbcc/exact.hpp"

namespace perturbcc {

BigInt DetPolynomial::eval(const BigInt& d) const {
    BigInt acc = 0;
    for (int l = 0; l <= n; ++l) {
        BigInt term = coeffs[l];
        for (int e = 0; e < n - l; ++e) term *= d;
        acc += term;
    }
    return acc;
}

namespace {

void check_perm_cap(const Graph& g) {
    if (g.vertex_count() > kPermutationCap) {
        throw ValidationError("permutation enumeration supports at most " +
                              std::to_string(kPermutationCap) + " vertices");
    }
}

// Adjacency as bitmasks; fits because n <= 9.
std::vector<unsigned> adjacency_masks(const Graph& g) {
    std::vector<unsigned> adj(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    return adj;
}

bool is_implemented(const std::vector<int>& perm, const std::vector<unsigned>& adj) {
    for (std::size_t v = 0; v < perm.size(); ++v) {
        int img = perm[v];
        if (img == static_cast<int>(v)) continue;  // fixed point rides the diagonal
        if (!(adj[v] & (1u << img))) return false;
    }
    return true;
}

int permutation_sign(const std::vector<int>& perm) {
    std::vector<char> seen(perm.size(), 0);
    int cycles = 0;
    for (std::size_t v = 0; v < perm.size(); ++v) {
        if (seen[v]) continue;
        ++cycles;
        for (std::size_t w = v; !seen[w]; w = static_cast<std::size_t>(perm[w])) seen[w] = 1;
    }
    return ((static_cast<int>(perm.size()) - cycles) % 2 == 0) ? 1 : -1;
}

}  // namespace

std::vector<std::vector<int>> implemented_permutations(const Graph& g,
                                                       const MatrixParams& params) {
    check_perm_cap(g);
    if (params.d <= 0) throw ValidationError("diagonal weight must be positive");
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (!is_implemented(perm, adj)) continue;
        std::vector<int> one_based(n);
        for (int v = 0; v < n; ++v) one_based[v] = perm[v] + 1;
        out.push_back(std::move(one_based));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

DetPolynomial det_polynomial(const Graph& g) {
    check_perm_cap(g);
    int n = g.vertex_count();
    auto adj = adjacency_masks(g);
    DetPolynomial poly;
    poly.n = n;
    poly.coeffs.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (!is_implemented(perm, adj)) continue;
        int moved = 0;
        for (int v = 0; v < n; ++v) {
            if (perm[v] != v) ++moved;
        }
        poly.coeffs[moved] += permutation_sign(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return poly;
}

DirectedMinorGraph minor_graph(const Graph& g, int i, int j) {
    if (i == j) throw ValidationError("minor graph needs distinct vertices");
    int n = g.vertex_count();
    if (i < 1 || i > n || j < 1 || j > n) throw ValidationError("vertex id out of range");
    DirectedMinorGraph mg;
    mg.n = n;
    mg.i = i;
    mg.j = j;
    for (const auto& [u, v] : g.edges()) {
        // Both orientations, minus arcs out of i and arcs into j.
        if (u != i && v != j) mg.arcs.emplace_back(u, v);
        if (v != i && u != j) mg.arcs.emplace_back(v, u);
    }
    mg.arcs.emplace_back(i, j);
    std::sort(mg.arcs.begin(), mg.arcs.end());
    return mg;
}

Rational dense_det(std::vector<std::vector<Rational>> m) {
    int n = static_cast<int>(m.size());
    Rational det = 1;
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int row = col; row < n; ++row) {
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        }
        if (pivot < 0) return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < n; ++row) {
            if (m[row][col] == 0) continue;
            Rational f = m[row][col] / m[col][col];
            for (int k = col; k < n; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

namespace {

void check_exact_cap(int n) {
    if (n > kDefaultExactCap) {
        throw ValidationError("exact determinant supports at most " +
                              std::to_string(kDefaultExactCap) + " vertices");
    }
}

std::vector<std::vector<Rational>> weighted_matrix(const Graph& g, const Rational& d) {
    int n = g.vertex_count();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int v = 0; v < n; ++v) m[v][v] = d;
    for (const auto& [u, v] : g.edges()) {
        m[u - 1][v - 1] = 1;
        m[v - 1][u - 1] = 1;
    }
    return m;
}

}  // namespace

Rational graph_det(const Graph& g, const MatrixParams& params) {
    check_exact_cap(g.vertex_count());
    return dense_det(weighted_matrix(g, params.d));
}

Rational minor_det(const Graph& g, const MatrixParams& params, int i, int j) {
    int n = g.vertex_count();
    check_exact_cap(n);
    if (i < 1 || i > n || j < 1 || j > n) throw ValidationError("vertex id out of range");
    auto full = weighted_matrix(g, params.d);
    std::vector<std::vector<Rational>> m;
    m.reserve(static_cast<std::size_t>(n) - 1);
    for (int r = 0; r < n; ++r) {
        if (r == i - 1) continue;
        std::vector<Rational> row;
        row.reserve(static_cast<std::size_t>(n) - 1);
        for (int c = 0; c < n; ++c) {
            if (c == j - 1) continue;
            row.push_back(full[r][c]);
        }
        m.push_back(std::move(row));
    }
    return dense_det(std::move(m));
}

Rational directed_minor_det(const DirectedMinorGraph& mg, const MatrixParams& params) {
    check_exact_cap(mg.n);
    int n = mg.n;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int v = 0; v < n; ++v) {
        if (v != mg.i - 1 && v != mg.j - 1) m[v][v] = params.d;
    }
    for (const auto& [u, v] : mg.arcs) m[u - 1][v - 1] = 1;
    return dense_det(std::move(m));
}

}  // namespace perturbcc
