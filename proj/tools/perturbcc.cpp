// perturbcc: connected components of undirected graphs via solver-style
// traversals (bfs / sis / gss) or an exact-arithmetic perturbation test,
// plus generators, verification, benchmarks, and determinant checks.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "perturbcc/bench.hpp"
#include "perturbcc/detlab.hpp"
#include "perturbcc/exact.hpp"
#include "perturbcc/graph.hpp"
#include "perturbcc/oracle.hpp"
#include "perturbcc/traversal.hpp"

using json = nlohmann::ordered_json;
using namespace perturbcc;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

LoadResult load_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return load_edge_list(buf.str());
    }
    return load_edge_list_file(path);
}

// Writes through a callback so "-" can mean stdout.
void with_output(const std::string& path, const std::function<void(std::ostream&)>& fn) {
    if (path == "-") {
        fn(std::cout);
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open output file: " + path);
    fn(out);
    if (!out) throw ValidationError("error writing output file: " + path);
}

std::vector<std::pair<int, int>> parse_sizes(const std::string& text) {
    std::vector<std::pair<int, int>> sizes;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        auto x = item.find('x');
        if (x == std::string::npos) {
            throw ValidationError("bad size '" + item + "', expected CxL like 90x100");
        }
        int chains = 0, len = 0;
        try {
            chains = std::stoi(item.substr(0, x));
            len = std::stoi(item.substr(x + 1));
        } catch (const std::exception&) {
            throw ValidationError("bad size '" + item + "', expected CxL like 90x100");
        }
        sizes.emplace_back(chains, len);
    }
    return sizes;
}

int run_gen(int chains, int len, std::vector<long long> random_nm, std::uint64_t seed,
            const std::string& out_path) {
    Graph g;
    if (!random_nm.empty()) {
        if (chains > 0 || len > 0) {
            throw ValidationError("--random cannot be combined with --chains/--len");
        }
        if (random_nm[0] < 0 || random_nm[0] > 1'000'000) {
            throw ValidationError("--random vertex count out of range");
        }
        g = gen_random_graph(static_cast<int>(random_nm[0]), random_nm[1], seed);
    } else {
        if (chains <= 0 || len <= 0) {
            throw ValidationError("gen needs --chains and --len, or --random N M");
        }
        g = gen_chain_union(chains, len, seed);
    }
    with_output(out_path, [&](std::ostream& out) { write_edge_list(g, out); });
    return 0;
}

int run_cc(const std::string& algo, const std::string& in_path, int start, bool trace,
           int exact_cap) {
    Strategy strategy = parse_strategy(algo);
    LoadResult loaded = load_input(in_path);

    ComponentsOptions opts;
    opts.first_start = start;
    opts.keep_traces = true;
    opts.exact_cap = exact_cap;
    PartitionRun run = components_via(loaded.graph, strategy, opts);

    if (trace) {
        for (const auto& comp_run : run.runs) {
            int k = 0;
            for (const auto& newly : comp_run.trace.newly_reached) {
                json line;
                line["k"] = ++k;
                line["new"] = newly;
                std::cout << line.dump() << '\n';
            }
        }
    }
    json out;
    out["components"] = run.partition.components;
    out["K"] = run.partition.count();
    out["iterations"] = run.total_iterations();
    std::cout << out.dump() << '\n';
    return 0;
}

int run_verify(const std::string& in_path, bool exact, int exact_cap) {
    LoadResult loaded = load_input(in_path);
    const Graph& g = loaded.graph;
    ComponentPartition oracle = uf_components(g);

    json report;
    report["n"] = g.vertex_count();
    report["m"] = g.edge_count();
    report["K"] = oracle.count();
    bool ok = true;

    json strat;
    for (Strategy s : {Strategy::algebraic_bfs, Strategy::sis, Strategy::gss}) {
        bool agrees = components_via(g, s).partition == oracle;
        strat[strategy_name(s)] = agrees;
        ok = ok && agrees;
    }
    report["strategies"] = strat;

    if (exact) {
        int n = g.vertex_count();
        if (n < 1 || n > exact_cap) {
            throw ValidationError("exact mode supports at most " + std::to_string(exact_cap) +
                                  " vertices (got " + std::to_string(n) + ")");
        }
        json ex;
        ComponentsOptions opts;
        opts.exact_cap = exact_cap;
        bool partition_agrees = components_via(g, Strategy::exact_perturb, opts).partition == oracle;
        ok = ok && partition_agrees;
        ex["partition_agrees"] = partition_agrees;

        // Membership must be stable across nearby diagonal weights.
        MatrixParams base = MatrixParams::for_graph(g);
        std::vector<int> d_values;
        bool membership = true;
        bool norm_bound = true;
        for (int bump = 0; bump < 3; ++bump) {
            MatrixParams params = base;
            params.d = base.d + bump;
            d_values.push_back(static_cast<int>(to_double(params.d)));
            for (const auto& comp : oracle.components) {
                int i = comp.front();
                ExactVector x = solve_exact(g, params, i, exact_cap);
                Rational norm = 0;
                for (const auto& e : x.entries) norm += boost::multiprecision::abs(e);
                norm_bound = norm_bound && norm <= 1;
                membership = membership && perturb_component(g, params, i, exact_cap) == comp;
            }
        }
        ex["membership_d_values"] = d_values;
        ex["membership_agrees"] = membership;
        ex["norm_bound_holds"] = norm_bound;
        ok = ok && membership && norm_bound;

        if (oracle.count() == 1 && g.vertex_count() >= 2) {
            Rational bound = delta_bound(g.vertex_count(), base.d);
            ExactVector x = solve_exact(g, base, 1, exact_cap);
            ExactVector xp = solve_exact_perturbed(g, base, 1, 1, exact_cap);
            Rational min_gap = -1;
            for (int j = 1; j <= g.vertex_count(); ++j) {
                Rational gap = boost::multiprecision::abs(xp.at(j) - x.at(j));
                if (min_gap < 0 || gap < min_gap) min_gap = gap;
            }
            bool gap_ok = min_gap >= bound;
            ex["min_gap_lower_bound_holds"] = gap_ok;
            ok = ok && gap_ok;
        } else {
            ex["min_gap_lower_bound_holds"] = nullptr;
        }
        report["exact"] = ex;
    }

    report["ok"] = ok;
    std::cout << report.dump() << '\n';
    std::cerr << (ok ? "verify: all checks passed\n" : "verify: MISMATCH detected\n");
    return ok ? 0 : 1;
}

int run_bench(const std::string& suite, const std::string& sizes_text, std::uint64_t seed,
              int runs, const std::string& out_path) {
    if (suite != "chains") throw ValidationError("unknown suite: " + suite);
    auto sizes = parse_sizes(sizes_text);
    BenchOptions opts;
    opts.runs = runs;
    opts.base_seed = seed;
    auto records = run_chain_suite(sizes, opts);
    with_output(out_path, [&](std::ostream& out) { write_csv(records, out); });
    std::cerr << "bench: " << records.size() << " records from " << sizes.size()
              << " instances\n";
    return 0;
}

int run_detlab(const std::string& in_path) {
    LoadResult loaded = load_input(in_path);
    const Graph& g = loaded.graph;
    if (g.vertex_count() < 1 || g.vertex_count() > kPermutationCap) {
        throw ValidationError("detlab supports 1 to " + std::to_string(kPermutationCap) +
                              " vertices (got " + std::to_string(g.vertex_count()) + ")");
    }
    int n = g.vertex_count();
    long long m = g.edge_count();
    MatrixParams params = MatrixParams::for_graph(g);

    json report;
    report["n"] = n;
    report["m"] = m;

    DetPolynomial poly = det_polynomial(g);
    report["coeffs"] = poly.coeffs;
    report["permutations"] = implemented_permutations(g, params).size();

    json checks;
    checks["c0_is_1"] = poly.coeffs[0] == 1;
    checks["c1_is_0"] = n < 1 || poly.coeffs[1] == 0;
    checks["c2_is_minus_m"] = n < 2 || poly.coeffs[2] == -m;

    bool eval_ok = true;
    for (int d : {g.max_degree() + 1, 2 * g.max_degree() + 2}) {
        MatrixParams p;
        p.d = d;
        eval_ok = eval_ok && Rational(poly.eval(BigInt(d))) == graph_det(g, p);
    }
    checks["eval_matches_elimination"] = eval_ok;

    ComponentPartition oracle = uf_components(g);
    std::vector<int> comp_of(static_cast<std::size_t>(n) + 1, 0);
    for (int c = 0; c < oracle.count(); ++c) {
        for (int v : oracle.components[c]) comp_of[v] = c;
    }
    bool minor_ok = true;
    bool cross_zero_ok = true;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            Rational direct = minor_det(g, params, i, j);
            Rational via_arcs = directed_minor_det(minor_graph(g, i, j), params);
            Rational sign = ((i + j) % 2 == 0) ? 1 : -1;
            minor_ok = minor_ok && via_arcs == sign * direct;
            if (comp_of[i] != comp_of[j]) {
                cross_zero_ok = cross_zero_ok && direct == 0;
            }
        }
    }
    checks["minor_identity"] = minor_ok;
    checks["cross_component_zero"] = cross_zero_ok;

    report["checks"] = checks;
    bool ok = true;
    for (const auto& [key, value] : checks.items()) ok = ok && value.get<bool>();
    report["ok"] = ok;
    std::cout << report.dump() << '\n';
    if (!ok) throw InternalError("determinant identity check failed");
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"connected components via perturbed adjacency matrices"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph as an edge list");
    int gen_chains = 0, gen_len = 0;
    std::vector<long long> gen_random_nm;
    std::uint64_t gen_seed = 1;
    std::string gen_out = "-";
    gen->add_option("--chains", gen_chains, "number of chains");
    gen->add_option("--len", gen_len, "vertices per chain");
    gen->add_option("--random", gen_random_nm, "uniform random graph: N M")->expected(2);
    gen->add_option("--seed", gen_seed, "RNG seed (0 keeps identity labels for chains)");
    gen->add_option("-o,--output", gen_out, "output file, '-' for stdout");

    // cc
    auto* cc = app.add_subcommand("cc", "compute connected components");
    std::string cc_algo, cc_in;
    int cc_start = 0;
    bool cc_trace = false;
    int cc_cap = kDefaultExactCap;
    cc->add_option("--algo", cc_algo, "bfs | sis | gss | exact")->required();
    cc->add_option("-i,--input", cc_in, "edge-list file, '-' for stdin")->required();
    cc->add_option("--start", cc_start, "start vertex for the first component");
    cc->add_flag("--trace", cc_trace, "emit per-iteration trace lines before the summary");
    cc->add_option("--exact-cap", cc_cap, "size cap for --algo exact");

    // verify
    auto* verify = app.add_subcommand("verify", "cross-check strategies against union-find");
    std::string verify_in;
    bool verify_exact = false;
    int verify_cap = kDefaultExactCap;
    verify->add_option("-i,--input", verify_in, "edge-list file, '-' for stdin")->required();
    verify->add_flag("--exact", verify_exact, "also run the exact perturbation checks");
    verify->add_option("--exact-cap", verify_cap, "size cap for exact checks");

    // bench
    auto* bench = app.add_subcommand("bench", "benchmark strategies, CSV output");
    std::string bench_suite = "chains";
    std::string bench_sizes = "90x100";
    std::uint64_t bench_seed = 1;
    int bench_runs = 3;
    std::string bench_out = "-";
    bench->add_option("--suite", bench_suite, "suite name (chains)");
    bench->add_option("--sizes", bench_sizes, "comma list of CxL instances, e.g. 90x100,10x50");
    bench->add_option("--seed", bench_seed, "base seed; instance i uses seed+i");
    bench->add_option("--runs", bench_runs, "timed runs per instance (>= 3)");
    bench->add_option("-o,--output", bench_out, "output file, '-' for stdout");

    // detlab
    auto* detlab = app.add_subcommand("detlab", "determinant identity checks (n <= 9)");
    std::string detlab_in;
    detlab->add_option("-i,--input", detlab_in, "edge-list file, '-' for stdin")->required();

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(gen_chains, gen_len, gen_random_nm, gen_seed, gen_out);
        if (cc->parsed()) return run_cc(cc_algo, cc_in, cc_start, cc_trace, cc_cap);
        if (verify->parsed()) return run_verify(verify_in, verify_exact, verify_cap);
        if (bench->parsed()) return run_bench(bench_suite, bench_sizes, bench_seed, bench_runs, bench_out);
        if (detlab->parsed()) return run_detlab(detlab_in);
        throw InternalError("no subcommand dispatched");
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
