#include "perturbcc/exact.hpp"

#include <algorithm>
#include <cmath>

namespace perturbcc {

namespace {

void check_solve_inputs(const Graph& g, const MatrixParams& params, int rhs_index,
                        int exact_cap) {
    int n = g.vertex_count();
    if (n < 1) throw ValidationError("graph has no vertices");
    if (n > exact_cap) {
        throw ValidationError("exact mode supports at most " + std::to_string(exact_cap) +
                              " vertices (got " + std::to_string(n) + ")");
    }
    if (rhs_index < 1 || rhs_index > n) {
        throw ValidationError("vertex id out of range: " + std::to_string(rhs_index));
    }
    if (params.d <= g.max_degree()) {
        throw ValidationError("diagonal weight must exceed the maximum degree");
    }
}

// Solves (A0 + dI [+ eps at `perturbed`]) x = e_rhs with fraction-free
// Bareiss elimination on a scaled integer matrix. The matrix is strictly
// diagonally dominant, so no pivoting is ever needed; a zero pivot would
// mean a bug, not bad input.
ExactVector bareiss_solve(const Graph& g, const MatrixParams& params, int rhs_index,
                          int perturbed) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::lcm;
    using boost::multiprecision::numerator;

    int n = g.vertex_count();
    Rational diag = params.d;
    Rational pdiag = params.d + params.epsilon;
    BigInt q = denominator(diag);
    if (perturbed != 0) q = lcm(q, denominator(pdiag));

    auto scaled = [&](const Rational& r) -> BigInt {
        return numerator(r) * (q / denominator(r));
    };

    std::vector<std::vector<BigInt>> m(n, std::vector<BigInt>(static_cast<std::size_t>(n) + 1));
    for (int v = 1; v <= n; ++v) {
        m[v - 1][v - 1] = scaled(v == perturbed ? pdiag : diag);
        for (int w : g.neighbors(v)) m[v - 1][w - 1] = q;
    }
    m[rhs_index - 1][n] = 1;

    BigInt prev = 1;
    for (int k = 0; k < n; ++k) {
        const BigInt& pivot = m[k][k];
        if (pivot == 0) throw InternalError("zero pivot in dominant system");
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c <= n; ++c) {
                m[r][c] = (m[r][c] * pivot - m[r][k] * m[k][c]) / prev;
            }
            m[r][k] = 0;
        }
        prev = pivot;
    }

    ExactVector x;
    x.entries.assign(n, Rational(0));
    for (int r = n - 1; r >= 0; --r) {
        Rational acc = m[r][n];
        for (int c = r + 1; c < n; ++c) acc -= m[r][c] * x.entries[c];
        x.entries[r] = acc / m[r][r];
    }
    // The scaled system (qA) y = e gives x = q y.
    for (auto& e : x.entries) e *= q;
    return x;
}

}  // namespace

ExactVector solve_exact(const Graph& g, const MatrixParams& params, int rhs_index,
                        int exact_cap) {
    check_solve_inputs(g, params, rhs_index, exact_cap);
    return bareiss_solve(g, params, rhs_index, 0);
}

ExactVector solve_exact_perturbed(const Graph& g, const MatrixParams& params, int rhs_index,
                                  int perturbed, int exact_cap) {
    check_solve_inputs(g, params, rhs_index, exact_cap);
    if (perturbed < 1 || perturbed > g.vertex_count()) {
        throw ValidationError("vertex id out of range: " + std::to_string(perturbed));
    }
    if (params.epsilon <= 0) throw ValidationError("perturbation must be positive");
    return bareiss_solve(g, params, rhs_index, perturbed);
}

std::vector<int> perturb_component(const Graph& g, const MatrixParams& params, int i,
                                   int exact_cap) {
    ExactVector x = solve_exact(g, params, i, exact_cap);
    ExactVector xp = solve_exact_perturbed(g, params, i, i, exact_cap);
    std::vector<int> members;
    for (int j = 1; j <= g.vertex_count(); ++j) {
        if (j == i || xp.at(j) != x.at(j)) members.push_back(j);
    }
    return members;
}

Rational delta_bound(int n, const Rational& d) {
    if (n < 1) throw ValidationError("vertex count must be positive");
    if (d <= 1) throw ValidationError("diagonal weight must exceed 1");
    return Rational(1) / (2 * rational_pow(d, 2 * static_cast<unsigned>(n)));
}

long long required_iterations(int n) {
    if (n < 1) throw ValidationError("vertex count must be positive");
    return 4LL * n + 1;
}

long long required_iterations(int n, double mu, const Rational& d) {
    if (n < 1) throw ValidationError("vertex count must be positive");
    if (!(mu > 1.0)) throw ValidationError("contraction factor must exceed 1");
    if (d <= 1) throw ValidationError("diagonal weight must exceed 1");

    if (mu == std::floor(mu) && mu <= 1e18) {
        // Smallest N with mu^(N-1) >= d^(2n), found by exact integer powers.
        BigInt mu_int(static_cast<long long>(mu));
        Rational target = rational_pow(d, 2 * static_cast<unsigned>(n));
        BigInt num = boost::multiprecision::numerator(target);
        BigInt den = boost::multiprecision::denominator(target);
        BigInt power = 1;
        long long j = 0;
        while (power * den < num) {
            power *= mu_int;
            ++j;
        }
        return j + 1;
    }
    long double t = 2.0L * n * (std::log(to_real<long double>(d)) / std::log(static_cast<long double>(mu)));
    return static_cast<long long>(std::ceil(t)) + 1;
}

long long required_mantissa(int n, const Rational& d) {
    if (n < 1) throw ValidationError("vertex count must be positive");
    if (d <= 1) throw ValidationError("diagonal weight must exceed 1");
    Rational target = rational_pow(d, 2 * static_cast<unsigned>(n));
    BigInt num = boost::multiprecision::numerator(target);
    BigInt den = boost::multiprecision::denominator(target);
    BigInt power = 1;
    long long j = 0;
    while (power * den < num) {
        power *= 10;
        ++j;
    }
    return j + 1;
}

BoundReport bound_report(const Graph& g, const MatrixParams& params) {
    BoundReport r;
    r.delta = delta_bound(g.vertex_count(), params.d);
    r.iterations = required_iterations(g.vertex_count(), params.mu, params.d);
    r.mantissa_digits = required_mantissa(g.vertex_count(), params.d);
    return r;
}

namespace {

template <class Real>
struct IterLog {
    std::vector<Real> solution;
    std::vector<Real> error_max_norm;
    std::vector<Real> error_sum_norm;
};

template <class Real>
IterLog<Real> iterate(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                      int exact_cap, bool gauss_seidel) {
    int n = g.vertex_count();
    if (n < 1) throw ValidationError("graph has no vertices");
    if (rhs_index < 1 || rhs_index > n) {
        throw ValidationError("vertex id out of range: " + std::to_string(rhs_index));
    }
    if (k_max < 1) throw ValidationError("iteration budget must be at least 1");
    if (params.d <= g.max_degree()) {
        throw ValidationError("diagonal weight must exceed the maximum degree");
    }

    std::vector<Real> exact;
    if (n <= exact_cap) {
        ExactVector ex = solve_exact(g, params, rhs_index, exact_cap);
        exact.reserve(ex.entries.size());
        for (const auto& e : ex.entries) exact.push_back(to_real<Real>(e));
    }

    IterLog<Real> log;
    std::vector<Real> x(n, Real(0));
    x[rhs_index - 1] = Real(1);

    auto record_error = [&]() {
        if (exact.empty()) return;
        Real mx(0), sm(0);
        for (int v = 0; v < n; ++v) {
            Real diff = x[v] - exact[v];
            if (diff < 0) diff = -diff;
            if (diff > mx) mx = diff;
            sm += diff;
        }
        log.error_max_norm.push_back(mx);
        log.error_sum_norm.push_back(sm);
    };

    Real d = to_real<Real>(params.d);
    record_error();
    std::vector<Real> next(n);
    for (int k = 0; k < k_max; ++k) {
        if (gauss_seidel) {
            for (int j = 1; j <= n; ++j) {
                Real s(0);
                for (int l : g.neighbors(j)) s += x[l - 1];
                Real b = (j == rhs_index) ? Real(1) : Real(0);
                x[j - 1] = (b - s) / d;
            }
        } else {
            for (int j = 1; j <= n; ++j) {
                Real s(0);
                for (int l : g.neighbors(j)) s += x[l - 1];
                Real b = (j == rhs_index) ? Real(1) : Real(0);
                next[j - 1] = (b - s) / d;
            }
            std::swap(x, next);
        }
        record_error();
    }
    log.solution = std::move(x);
    return log;
}

SolveLog to_double_log(IterLog<double>&& l) {
    return SolveLog{std::move(l.solution), std::move(l.error_max_norm),
                    std::move(l.error_sum_norm)};
}

SolveLogHp to_hp_log(IterLog<BigFloat>&& l) {
    return SolveLogHp{std::move(l.solution), std::move(l.error_max_norm),
                      std::move(l.error_sum_norm)};
}

}  // namespace

SolveLog gauss_seidel_solve(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                            int exact_cap) {
    return to_double_log(iterate<double>(g, params, rhs_index, k_max, exact_cap, true));
}

SolveLog jacobi_solve(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                      int exact_cap) {
    return to_double_log(iterate<double>(g, params, rhs_index, k_max, exact_cap, false));
}

SolveLogHp gauss_seidel_solve_hp(const Graph& g, const MatrixParams& params, int rhs_index,
                                 int k_max, int exact_cap) {
    return to_hp_log(iterate<BigFloat>(g, params, rhs_index, k_max, exact_cap, true));
}

SolveLogHp jacobi_solve_hp(const Graph& g, const MatrixParams& params, int rhs_index, int k_max,
                           int exact_cap) {
    return to_hp_log(iterate<BigFloat>(g, params, rhs_index, k_max, exact_cap, false));
}

}  // namespace perturbcc
