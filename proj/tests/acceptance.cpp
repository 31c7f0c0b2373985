// Acceptance gate: one line per criterion, nonzero exit if any fails.
//
// Budgets and tolerances are pinned here on purpose: 30 s for the big
// equivalence sweep, 60 s for the chain suite, 1e-12 slack on the contraction
// ratio, everything else exact.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "perturbcc/bench.hpp"
#include "perturbcc/detlab.hpp"
#include "perturbcc/exact.hpp"
#include "perturbcc/graph.hpp"
#include "perturbcc/oracle.hpp"
#include "perturbcc/traversal.hpp"
#include "support/corpus.hpp"

using namespace perturbcc;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        ok = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f s", s);
    return buf;
}

std::vector<int> component_index_of(const ComponentPartition& p, int n) {
    std::vector<int> idx(static_cast<std::size_t>(n) + 1, -1);
    for (int c = 0; c < p.count(); ++c) {
        for (int v : p.components[c]) idx[static_cast<std::size_t>(v)] = c;
    }
    return idx;
}

// Criterion 1: the three sweep strategies agree with union-find on a wide
// mixed corpus, inside a 30 s budget.
Outcome criterion_oracle_equivalence() {
    Outcome out;
    auto t0 = Clock::now();
    auto graphs = corpus::mixed_corpus(200, 256, 20260822);

    int checked = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        ComponentPartition oracle = uf_components(g);
        ComponentsOptions opts;
        opts.keep_traces = false;
        for (Strategy s : {Strategy::algebraic_bfs, Strategy::sis, Strategy::gss}) {
            if (!(components_via(g, s, opts).partition == oracle)) {
                out.fail("graph " + std::to_string(gi) + " (n=" +
                         std::to_string(g.vertex_count()) + ") disagrees under " +
                         strategy_name(s));
            }
            ++checked;
        }
    }
    double secs = seconds_since(t0);
    if (secs >= 30.0) out.fail("took " + fmt_seconds(secs) + ", budget 30 s");
    if (out.ok) {
        out.detail = std::to_string(graphs.size()) + " graphs x 3 strategies match union-find (" +
                     std::to_string(checked) + " partitions, " + fmt_seconds(secs) + ")";
    }
    return out;
}

// Criterion 2: the exact perturbation membership test equals the oracle
// component for every start vertex, across three diagonal weights.
Outcome criterion_exact_membership() {
    Outcome out;
    auto t0 = Clock::now();
    auto graphs = corpus::mixed_corpus(100, 16, 4407);

    long long solves = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        ComponentPartition oracle = uf_components(g);
        auto idx = component_index_of(oracle, g.vertex_count());
        MatrixParams base = MatrixParams::for_graph(g);
        for (int bump = 0; bump < 3; ++bump) {
            MatrixParams params = base;
            params.d = base.d + bump;
            for (int i = 1; i <= g.vertex_count(); ++i) {
                ++solves;
                if (perturb_component(g, params, i) !=
                    oracle.components[static_cast<std::size_t>(idx[i])]) {
                    out.fail("graph " + std::to_string(gi) + ", d=" +
                             std::to_string(static_cast<long long>(to_double(params.d))) +
                             ", start " + std::to_string(i));
                }
            }
        }
    }
    if (out.ok) {
        out.detail = std::to_string(graphs.size()) + " graphs x 3 diagonal weights, " +
                     std::to_string(solves) + " membership tests, zero violations (" +
                     fmt_seconds(seconds_since(t0)) + ")";
    }
    return out;
}

std::vector<Graph> connected_small_corpus() {
    auto graphs = corpus::connected_corpus(40, 2, 10, 9103);
    graphs.push_back(corpus::figure_graph());
    for (int n = 2; n <= 10; ++n) graphs.push_back(corpus::path_graph(n));
    graphs.push_back(corpus::star_graph(10));
    graphs.push_back(corpus::complete_graph(10));
    graphs.push_back(corpus::cycle_graph(10));
    return graphs;
}

// Criterion 3: exact minimum gap >= 1/(2 d^{2n}) on connected graphs, plus
// the single-edge worked value 3/88 at d=3.
Outcome criterion_min_gap() {
    Outcome out;
    auto graphs = connected_small_corpus();

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        int n = g.vertex_count();
        MatrixParams params = MatrixParams::for_graph(g);
        Rational bound = delta_bound(n, params.d);
        for (int i = 1; i <= n; ++i) {
            ExactVector x = solve_exact(g, params, i);
            ExactVector xp = solve_exact_perturbed(g, params, i, i);
            Rational min_gap = -1;
            for (int j = 1; j <= n; ++j) {
                Rational gap = boost::multiprecision::abs(xp.at(j) - x.at(j));
                if (min_gap < 0 || gap < min_gap) min_gap = gap;
            }
            if (min_gap < bound) {
                out.fail("graph " + std::to_string(gi) + " start " + std::to_string(i) +
                         ": gap below 1/(2 d^(2n))");
            }
        }
    }

    Graph edge(2, {{1, 2}});
    MatrixParams worked;
    worked.d = 3;
    worked.epsilon = 1;
    ExactVector x = solve_exact(edge, worked, 1);
    ExactVector xp = solve_exact_perturbed(edge, worked, 1, 1);
    Rational gap2 = boost::multiprecision::abs(xp.at(2) - x.at(2));
    if (gap2 != Rational(3, 88)) out.fail("single-edge gap is not exactly 3/88");
    if (boost::multiprecision::abs(xp.at(1) - x.at(1)) != Rational(9, 88)) {
        out.fail("single-edge start-entry shift is not exactly 9/88");
    }
    if (gap2 < delta_bound(2, Rational(3))) out.fail("3/88 falls below 1/162");

    if (out.ok) {
        out.detail = std::to_string(graphs.size()) +
                     " connected graphs (n <= 10), every start: min gap >= 1/(2 d^(2n)); "
                     "single-edge value 3/88 exact";
    }
    return out;
}

// Criterion 4: frozen traces on the labeled examples. Exact integer
// equality, no tolerance.
Outcome criterion_traces() {
    Outcome out;

    Graph fig = corpus::figure_graph();
    ComponentRun fig_sis = sis_component(fig, 1);
    ComponentRun fig_gss = gss_component(fig, 1);
    if (fig_sis.trace.iterations_used != 4) out.fail("eight-vertex example: SIS != 4");
    if (fig_gss.trace.iterations_used != 2) out.fail("eight-vertex example: GSS != 2");

    Graph ascending = corpus::path_graph(5);
    ComponentRun asc_gss = gss_component(ascending, 1);
    ComponentRun asc_sis = sis_component(ascending, 1);
    if (asc_gss.trace.iterations_used != 1) out.fail("ascending path: GSS != 1");
    if (asc_sis.trace.iterations_used != 4) out.fail("ascending path: SIS != 4");

    Graph descending = corpus::descending_path5();
    ComponentRun desc_gss = gss_component(descending, 1);
    ComponentRun desc_sis = sis_component(descending, 1);
    if (desc_gss.trace.iterations_used != 4) out.fail("descending path: GSS != 4");
    if (desc_sis.trace.iterations_used != 4) out.fail("descending path: SIS != 4");
    std::vector<std::vector<int>> want = {{5}, {4}, {3}, {2}};
    if (desc_gss.trace.newly_reached != want) {
        out.fail("descending path: GSS trace is not {5},{4},{3},{2}");
    }

    if (out.ok) {
        out.detail = "eight-vertex example SIS=4/GSS=2; ascending path GSS=1/SIS=4; "
                     "descending path GSS=4 with trace {5},{4},{3},{2}";
    }
    return out;
}

// Criterion 5: determinant-polynomial coefficient identities c0=1, c1=0,
// c2=-m, and polynomial evaluation matches exact elimination at two integer
// diagonal weights.
Outcome criterion_coefficients() {
    Outcome out;
    auto t0 = Clock::now();

    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n) {
        for (Graph& g : corpus::all_graphs(n)) graphs.push_back(std::move(g));
    }
    std::mt19937_64 rng(6071);
    for (int n = 6; n <= 8; ++n) {
        graphs.push_back(corpus::path_graph(n));
        graphs.push_back(corpus::cycle_graph(n));
        graphs.push_back(corpus::star_graph(n));
        graphs.push_back(corpus::complete_graph(n));
        long long full = static_cast<long long>(n) * (n - 1) / 2;
        for (int k = 0; k < 12; ++k) {
            graphs.push_back(gen_random_graph(n, static_cast<long long>(rng() % (full + 1)), rng()));
        }
    }

    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        int n = g.vertex_count();
        DetPolynomial poly = det_polynomial(g);
        bool coeffs_ok = poly.coeffs[0] == 1;
        if (n >= 1) coeffs_ok = coeffs_ok && poly.coeffs[1] == 0;
        if (n >= 2) coeffs_ok = coeffs_ok && poly.coeffs[2] == -g.edge_count();
        if (!coeffs_ok) out.fail("graph " + std::to_string(gi) + ": coefficient identity");

        for (int d : {g.max_degree() + 1, 2 * g.max_degree() + 2}) {
            MatrixParams params;
            params.d = d;
            if (Rational(poly.eval(BigInt(d))) != graph_det(g, params)) {
                out.fail("graph " + std::to_string(gi) + ": eval(d=" + std::to_string(d) +
                         ") != elimination");
            }
        }
    }
    if (out.ok) {
        out.detail = std::to_string(graphs.size()) +
                     " graphs (exhaustive n <= 5, sampled 6..8): c0=1, c1=0, c2=-m, "
                     "eval matches elimination at two weights (" +
                     fmt_seconds(seconds_since(t0)) + ")";
    }
    return out;
}

// Criterion 6: |minor determinant| >= 1 for vertex pairs of connected
// graphs; path endpoints sit exactly at 1.
Outcome criterion_minor_lower_bound() {
    Outcome out;
    auto t0 = Clock::now();

    std::vector<Graph> graphs;
    for (int n = 2; n <= 4; ++n) {
        for (Graph& g : corpus::all_graphs(n)) {
            if (corpus::is_connected(g)) graphs.push_back(std::move(g));
        }
    }
    for (Graph& g : corpus::connected_corpus(24, 5, 8, 5113)) graphs.push_back(std::move(g));

    long long pairs = 0;
    for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
        const Graph& g = graphs[gi];
        MatrixParams params = MatrixParams::for_graph(g);
        int n = g.vertex_count();
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j) continue;
                ++pairs;
                if (boost::multiprecision::abs(minor_det(g, params, i, j)) < 1) {
                    out.fail("graph " + std::to_string(gi) + " pair (" + std::to_string(i) +
                             "," + std::to_string(j) + "): |minor| < 1");
                }
            }
        }
    }

    for (int n = 2; n <= 8; ++n) {
        Graph path = corpus::path_graph(n);
        MatrixParams params = MatrixParams::for_graph(path);
        if (boost::multiprecision::abs(minor_det(path, params, 1, n)) != 1) {
            out.fail("path endpoints n=" + std::to_string(n) + ": |minor| != 1");
        }
    }

    if (out.ok) {
        out.detail = std::to_string(graphs.size()) + " connected graphs, " +
                     std::to_string(pairs) + " ordered pairs: |minor| >= 1; path endpoints exactly 1 (" +
                     fmt_seconds(seconds_since(t0)) + ")";
    }
    return out;
}

// Criterion 7: per-sweep contraction of the ordered sweep stays within
// 1/mu + 1e-12 in the max norm, and the iteration budget lands the error
// under a quarter of the guaranteed gap.
Outcome criterion_contraction() {
    Outcome out;
    auto t0 = Clock::now();

    std::vector<Graph> instances = corpus::connected_corpus(25, 1, 32, 7207);
    instances.push_back(corpus::figure_graph());
    instances.push_back(corpus::path_graph(32));
    instances.push_back(corpus::star_graph(32));
    instances.push_back(corpus::complete_graph(32));
    instances.push_back(Graph(32, {}));
    instances.push_back(gen_chain_union(4, 8, 5));

    const BigFloat slack("1e-12");
    const BigFloat rel_floor("1e-80");
    const int k_max = 12;
    long long ratios = 0;
    for (std::size_t gi = 0; gi < instances.size(); ++gi) {
        const Graph& g = instances[gi];
        MatrixParams params = MatrixParams::for_graph(g);
        BigFloat bound = BigFloat(1) / BigFloat(params.mu) + slack;
        SolveLogHp log = gauss_seidel_solve_hp(g, params, 1, k_max, 64);
        BigFloat floor = log.error_max_norm[0] * rel_floor;
        for (int k = 1; k <= k_max; ++k) {
            const BigFloat& prev = log.error_max_norm[static_cast<std::size_t>(k) - 1];
            if (prev <= floor) break;
            BigFloat ratio = log.error_max_norm[static_cast<std::size_t>(k)] / prev;
            ++ratios;
            if (ratio > bound) {
                out.fail("instance " + std::to_string(gi) + " sweep " + std::to_string(k) +
                         ": ratio exceeds 1/mu + 1e-12");
            }
        }
    }

    int budget_checked = 0;
    for (const Graph& g : connected_small_corpus()) {
        int n = g.vertex_count();
        MatrixParams params = MatrixParams::for_graph(g);
        long long budget = required_iterations(n, params.mu, params.d);
        SolveLogHp log = gauss_seidel_solve_hp(g, params, 1, static_cast<int>(budget), 64);
        BigFloat quarter = to_real<BigFloat>(delta_bound(n, params.d)) / 4;
        ++budget_checked;
        if (!(log.error_max_norm.back() < quarter)) {
            out.fail("n=" + std::to_string(n) + ", m=" + std::to_string(g.edge_count()) +
                     ": budgeted error not below delta/4");
        }
    }

    if (out.ok) {
        out.detail = std::to_string(instances.size()) + " instances (n <= 32), " +
                     std::to_string(ratios) + " sweep ratios <= 1/mu + 1e-12; budgeted error < delta/4 on " +
                     std::to_string(budget_checked) + " connected graphs (" +
                     fmt_seconds(seconds_since(t0)) + ")";
    }
    return out;
}

// Criterion 8: on the 90x100 chain suite, GSS sweeps per component never
// exceed the start's eccentricity and GSS needs strictly fewer sweeps than
// SIS in total; the whole suite fits in 60 s.
Outcome criterion_chain_suite() {
    Outcome out;
    auto t0 = Clock::now();

    Graph g = gen_chain_union(90, 100, 811);
    ComponentPartition oracle = uf_components(g);
    PartitionRun sis = components_via(g, Strategy::sis);
    PartitionRun gss = components_via(g, Strategy::gss);
    if (!(sis.partition == oracle)) out.fail("SIS partition mismatch");
    if (!(gss.partition == oracle)) out.fail("GSS partition mismatch");

    for (std::size_t c = 0; c < gss.runs.size(); ++c) {
        int start = gss.runs[c].members.front();
        if (gss.runs[c].trace.iterations_used > eccentricity(g, start)) {
            out.fail("component " + std::to_string(c) + ": GSS sweeps exceed eccentricity");
        }
    }

    long long sis_total = sis.total_iterations();
    long long gss_total = gss.total_iterations();
    if (!(gss_total < sis_total)) {
        out.fail("GSS total " + std::to_string(gss_total) + " not below SIS total " +
                 std::to_string(sis_total));
    }

    // Same property on a mixed corpus, so the shape is not chain-specific.
    for (const Graph& mg : corpus::mixed_corpus(60, 128, 6113)) {
        PartitionRun run = components_via(mg, Strategy::gss);
        for (const auto& comp_run : run.runs) {
            int start = comp_run.members.front();
            if (comp_run.trace.iterations_used > eccentricity(mg, start)) {
                out.fail("mixed corpus: GSS sweeps exceed eccentricity");
            }
        }
    }

    BenchOptions bopts;
    bopts.base_seed = 811;
    auto records = run_chain_suite({{90, 100}}, bopts);
    if (records.size() != 3) out.fail("bench harness did not produce 3 records");

    double secs = seconds_since(t0);
    if (secs >= 60.0) out.fail("took " + fmt_seconds(secs) + ", budget 60 s");
    if (out.ok) {
        out.detail = "n=9000: GSS <= eccentricity on all 90 components, GSS total " +
                     std::to_string(gss_total) + " < SIS total " + std::to_string(sis_total) +
                     " (" + fmt_seconds(secs) + ")";
    }
    return out;
}

// Criterion 9: closed-form budgets. Sweep count 4n+1 in the mu = d_max
// convention, and mantissa digits against a frozen table evaluated
// independently with big-decimal arithmetic.
Outcome criterion_bound_calculators() {
    Outcome out;

    if (required_iterations(8) != 33) out.fail("required_iterations(8) != 33");
    if (required_iterations(8) != 4 * 8 + 1) out.fail("required_iterations(8) != 4n+1");
    if (required_iterations(8, 3.0, Rational(9)) != 33) {
        out.fail("general form at mu=3, d=9 disagrees with 4n+1");
    }

    struct Row {
        int n;
        int d;
        long long digits;
    };
    static constexpr Row kTable[] = {
        {1, 10, 3},   {2, 3, 3},    {50, 100, 201}, {1, 2, 2},    {2, 2, 3},
        {3, 4, 5},    {4, 9, 9},    {5, 5, 8},      {6, 12, 14},  {7, 36, 23},
        {8, 9, 17},   {9, 16, 23},  {10, 81, 40},   {12, 25, 35}, {16, 49, 56},
        {20, 100, 81}, {25, 10, 51}, {32, 121, 135}, {40, 7, 69},  {64, 255, 310},
    };
    for (const Row& row : kTable) {
        if (required_mantissa(row.n, Rational(row.d)) != row.digits) {
            out.fail("mantissa(n=" + std::to_string(row.n) + ", d=" + std::to_string(row.d) +
                     ") != " + std::to_string(row.digits));
        }
    }

    if (out.ok) {
        out.detail = "required_iterations(8) = 33 = 4n+1; mantissa digits match all 20 frozen rows";
    }
    return out;
}

}  // namespace

int main() {
    struct Entry {
        const char* name;
        Outcome (*run)();
    };
    const Entry entries[] = {
        {"strategy/oracle equivalence", criterion_oracle_equivalence},
        {"exact membership across diagonal weights", criterion_exact_membership},
        {"minimum-gap lower bound", criterion_min_gap},
        {"frozen example traces", criterion_traces},
        {"coefficient identities", criterion_coefficients},
        {"minor lower bound", criterion_minor_lower_bound},
        {"sweep contraction and budgeted error", criterion_contraction},
        {"chain-suite iteration shape", criterion_chain_suite},
        {"bound calculators", criterion_bound_calculators},
    };

    int failures = 0;
    int id = 0;
    for (const Entry& entry : entries) {
        ++id;
        Outcome outcome;
        try {
            outcome = entry.run();
        } catch (const std::exception& e) {
            outcome.ok = false;
            outcome.detail = std::string("exception: ") + e.what();
        }
        if (!outcome.ok) ++failures;
        std::cout << "criterion " << id << ": " << (outcome.ok ? "PASS" : "FAIL") << " — "
                  << entry.name << ": " << outcome.detail << '\n';
        std::cout.flush();
    }
    if (failures != 0) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 9 criteria passed\n";
    return 0;
}
