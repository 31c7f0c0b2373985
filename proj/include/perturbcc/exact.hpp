#pragma once

#include <vector>

#include "perturbcc/graph.hpp"

namespace perturbcc {

// Default size cap for exact-arithmetic solves; rational elimination is
// O(n^3) with coefficient growth, so larger requests are redirected to the
// traversal strategies.
inline constexpr int kDefaultExactCap = 64;

struct ExactVector {
    std::vector<Rational> entries;  // entries[v-1] for v in 1..n

    const Rational& at(int v) const { return entries.at(static_cast<std::size_t>(v) - 1); }
};

// Solves (A0 + dI) x = e_rhs exactly. The matrix is strictly diagonally
// dominant (d exceeds every degree), so elimination never needs pivoting.
ExactVector solve_exact(const Graph& g, const MatrixParams& params, int rhs_index,
                        int exact_cap = kDefaultExactCap);

// Same system with the diagonal entry at `perturbed` increased by epsilon.
ExactVector solve_exact_perturbed(const Graph& g, const MatrixParams& params, int rhs_index,
                                  int perturbed, int exact_cap = kDefaultExactCap);

// The membership test: solve Ax = e_i and A'x' = e_i with A' = A + eps*E_i,
// then return { j : x'_j != x_j } plus i itself, ascending. Equals the
// connected component of i.
std::vector<int> perturb_component(const Graph& g, const MatrixParams& params, int i,
                                   int exact_cap = kDefaultExactCap);

// Guaranteed minimum gap |x'_j - x_j| over same-component j at eps = 1:
// exactly 1/(2 d^{2n}).
Rational delta_bound(int n, const Rational& d);

// Iteration budget with the mu = d_max convention (d = mu * d_max): 4n + 1.
long long required_iterations(int n);

// General form: ceil(2n log_mu d + 1), computed without floating point when
// mu is integral (smallest N with mu^{N-1} >= d^{2n}).
long long required_iterations(int n, double mu, const Rational& d);

// Decimal mantissa length needed to resolve the gap: ceil(2n lg d + 1),
// computed exactly as 1 + min{ j : 10^j >= d^{2n} }.
long long required_mantissa(int n, const Rational& d);

struct BoundReport {
    Rational delta;
    long long iterations = 0;
    long long mantissa_digits = 0;
};

BoundReport bound_report(const Graph& g, const MatrixParams& params);

// One float-mode solve: k_max sweeps from x^(0) = e_rhs. Error logs hold
// ||x_exact - x^(k)|| for k = 0..k_max in both the max norm and the sum
// norm; they are filled when n is within exact_cap (the exact solution is
// needed to measure the error) and left empty otherwise.
struct SolveLog {
    std::vector<double> solution;
    std::vector<double> error_max_norm;
    std::vector<double> error_sum_norm;
};

SolveLog gauss_seidel_solve(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                            int exact_cap = kDefaultExactCap);
SolveLog jacobi_solve(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                      int exact_cap = kDefaultExactCap);

// Same iterations carried out in 100-digit floats, for decay measurements
// that fall below double's resolution; logged errors are reported at full
// precision.
struct SolveLogHp {
    std::vector<BigFloat> solution;
    std::vector<BigFloat> error_max_norm;
    std::vector<BigFloat> error_sum_norm;
};

SolveLogHp gauss_seidel_solve_hp(const Graph& g, const MatrixParams& params, int rhs_index,
                                 int k_max, int exact_cap = kDefaultExactCap);
SolveLogHp jacobi_solve_hp(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                           int exact_cap = kDefaultExactCap);

}  // namespace perturbcc
