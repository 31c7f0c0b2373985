#pragma once

#include <vector>

#include "perturbcc/graph.hpp"

namespace perturbcc {

// det A(d) expanded as a polynomial in the diagonal weight d:
//   det A(d) = c_0 d^n + c_1 d^{n-1} + ... + c_n,
// where c_l is the signed count of implemented permutations whose non-fixed
// points total l. For any simple graph c_0 = 1, c_1 = 0, c_2 = -m.
struct DetPolynomial {
    int n = 0;
    std::vector<long long> coeffs;  // coeffs[l] = c_l, l in 0..n

    BigInt eval(const BigInt& d) const;
};

// The directed graph behind the cofactor matrix A(G_ij): every undirected
// edge oriented both ways, arcs leaving i and arcs entering j removed, and
// the single arc (i,j) added. Diagonal loops (weight d) remain on every
// vertex except i and j; matrix assembly supplies them.
struct DirectedMinorGraph {
    int n = 0;
    int i = 0;
    int j = 0;
    std::vector<Edge> arcs;  // ordered pairs, no loops, sorted
};

// Brute-force cap: the module enumerates S_n.
inline constexpr int kPermutationCap = 9;

// All permutations pi with a nonzero product of matrix entries along pi:
// every non-fixed point must map along an edge; fixed points ride on the
// diagonal. Each permutation is its 1-based image table (pi(1), ..., pi(n)).
std::vector<std::vector<int>> implemented_permutations(const Graph& g, const MatrixParams& params);

DetPolynomial det_polynomial(const Graph& g);

DirectedMinorGraph minor_graph(const Graph& g, int i, int j);

// Exact determinant of A = A0 + dI.
Rational graph_det(const Graph& g, const MatrixParams& params);

// Exact determinant of A with row i and column j deleted. i == j gives the
// principal minor det A_ii.
Rational minor_det(const Graph& g, const MatrixParams& params, int i, int j);

// Exact determinant of the cofactor matrix A(G_ij) assembled from the
// directed construction; equals (-1)^{i+j} * minor_det(g, params, i, j).
Rational directed_minor_det(const DirectedMinorGraph& mg, const MatrixParams& params);

// Exact determinant of a dense rational matrix (row swaps allowed).
Rational dense_det(std::vector<std::vector<Rational>> m);

}  // namespace perturbcc
