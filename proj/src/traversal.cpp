#include "perturbcc/traversal.hpp"

#include <algorithm>
#include <cmath>

namespace perturbcc {

namespace {

void check_start(const Graph& g, int start, const Mask* mask) {
    if (start < 1 || start > g.vertex_count()) {
        throw ValidationError("start vertex out of range: " + std::to_string(start));
    }
    if (mask && mask->is_masked(start)) {
        throw ValidationError("start vertex is masked: " + std::to_string(start));
    }
}

ComponentRun finish_run(std::vector<char>& reached, int n, TraversalTrace trace,
                        long long sweeps) {
    ComponentRun run;
    for (int v = 1; v <= n; ++v) {
        if (reached[v - 1]) run.members.push_back(v);
    }
    trace.iterations_used = static_cast<int>(trace.newly_reached.size());
    run.trace = std::move(trace);
    run.sweeps_executed = sweeps;
    run.portrait_passes = sweeps;  // one pass per sweep by construction
    return run;
}

}  // namespace

ComponentRun algebraic_bfs_component(const Graph& g, int start, const Mask* mask) {
    check_start(g, start, mask);
    int n = g.vertex_count();
    std::vector<char> prev(n, 0), next(n, 0);
    prev[start - 1] = 1;
    TraversalTrace trace;
    long long sweeps = 0;
    while (true) {
        ++sweeps;
        std::vector<int> newly;
        for (int j = 1; j <= n; ++j) {
            if (mask && mask->is_masked(j)) continue;
            // Pattern of (A0 + dI) x: the diagonal keeps prev[j], the rest
            // comes from neighbors.
            char val = prev[j - 1];
            if (!val) {
                for (int l : g.neighbors(j)) {
                    if (mask && mask->is_masked(l)) continue;
                    if (prev[l - 1]) {
                        val = 1;
                        break;
                    }
                }
            }
            next[j - 1] = val;
            if (val && !prev[j - 1]) newly.push_back(j);
        }
        std::swap(prev, next);
        if (newly.empty() || sweeps >= n) {
            if (!newly.empty()) trace.newly_reached.push_back(std::move(newly));
            break;
        }
        trace.newly_reached.push_back(std::move(newly));
    }
    return finish_run(prev, n, std::move(trace), sweeps);
}

ComponentRun sis_component(const Graph& g, int start, const Mask* mask) {
    check_start(g, start, mask);
    int n = g.vertex_count();
    std::vector<char> prev(n, 0), next(n, 0);
    prev[start - 1] = 1;
    TraversalTrace trace;
    long long sweeps = 0;
    while (true) {
        ++sweeps;
        std::vector<int> newly;
        for (int j = 1; j <= n; ++j) {
            if (mask && mask->is_masked(j)) continue;
            // Pattern of (b - A0 x^(k)) / d: b contributes at the start
            // vertex, neighbors contribute from the previous vector.
            char val = (j == start) ? 1 : 0;
            if (!val) {
                for (int l : g.neighbors(j)) {
                    if (mask && mask->is_masked(l)) continue;
                    if (prev[l - 1]) {
                        val = 1;
                        break;
                    }
                }
            }
            next[j - 1] = val;
            if (val && !prev[j - 1]) newly.push_back(j);
        }
        std::swap(prev, next);
        if (newly.empty() || sweeps >= n) {
            if (!newly.empty()) trace.newly_reached.push_back(std::move(newly));
            break;
        }
        trace.newly_reached.push_back(std::move(newly));
    }
    return finish_run(prev, n, std::move(trace), sweeps);
}

ComponentRun gss_component(const Graph& g, int start, const Mask* mask) {
    check_start(g, start, mask);
    int n = g.vertex_count();
    // One array: entries below j already hold the current sweep, entries
    // above j still hold the previous one — exactly the Gauss-Seidel split.
    std::vector<char> cur(n, 0);
    cur[start - 1] = 1;
    TraversalTrace trace;
    long long sweeps = 0;
    while (true) {
        ++sweeps;
        std::vector<int> newly;
        for (int j = 1; j <= n; ++j) {
            if (mask && mask->is_masked(j)) continue;
            char val = (j == start) ? 1 : 0;
            if (!val) {
                for (int l : g.neighbors(j)) {
                    if (mask && mask->is_masked(l)) continue;
                    if (cur[l - 1]) {
                        val = 1;
                        break;
                    }
                }
            }
            if (val && !cur[j - 1]) newly.push_back(j);
            cur[j - 1] = val;
        }
        if (newly.empty() || sweeps >= n) {
            if (!newly.empty()) trace.newly_reached.push_back(std::move(newly));
            break;
        }
        trace.newly_reached.push_back(std::move(newly));
    }
    return finish_run(cur, n, std::move(trace), sweeps);
}

std::vector<double> simple_iteration_portrait(const std::vector<double>& x, const Portrait& p,
                                              const MatrixParams& params, int start) {
    if (static_cast<int>(x.size()) != p.n) {
        throw ValidationError("vector length does not match portrait");
    }
    std::vector<double> sums(x.size(), 0.0);
    for (const auto& [u, v] : p.entries) {
        sums[u - 1] += x[v - 1];
        sums[v - 1] += x[u - 1];
    }
    double inv_d = 1.0 / to_double(params.d);
    std::vector<double> out(x.size());
    for (int j = 1; j <= p.n; ++j) {
        double b = (j == start) ? 1.0 : 0.0;
        out[j - 1] = (b - sums[j - 1]) * inv_d;
    }
    return out;
}

namespace {

ComponentRun float_run(const Graph& g, const MatrixParams& params, int start, bool gauss_seidel) {
    check_start(g, start, nullptr);
    int n = g.vertex_count();
    double inv_d = 1.0 / to_double(params.d);
    std::vector<double> x(n, 0.0);
    x[start - 1] = 1.0;
    std::vector<char> ever(n, 0);
    ever[start - 1] = 1;
    TraversalTrace trace;
    long long sweeps = 0;
    Portrait p = build_portrait(g);
    while (true) {
        ++sweeps;
        std::vector<int> newly;
        if (gauss_seidel) {
            for (int j = 1; j <= n; ++j) {
                double s = 0.0;
                for (int l : g.neighbors(j)) s += x[l - 1];
                double b = (j == start) ? 1.0 : 0.0;
                x[j - 1] = (b - s) * inv_d;
                if (x[j - 1] != 0.0 && !ever[j - 1]) {
                    ever[j - 1] = 1;
                    newly.push_back(j);
                }
            }
        } else {
            x = simple_iteration_portrait(x, p, params, start);
            for (int j = 1; j <= n; ++j) {
                if (x[j - 1] != 0.0 && !ever[j - 1]) {
                    ever[j - 1] = 1;
                    newly.push_back(j);
                }
            }
        }
        if (newly.empty() || sweeps >= n) {
            if (!newly.empty()) trace.newly_reached.push_back(std::move(newly));
            break;
        }
        trace.newly_reached.push_back(std::move(newly));
    }
    return finish_run(ever, n, std::move(trace), sweeps);
}

}  // namespace

ComponentRun sis_component_float(const Graph& g, const MatrixParams& params, int start) {
    return float_run(g, params, start, false);
}

ComponentRun gss_component_float(const Graph& g, const MatrixParams& params, int start) {
    return float_run(g, params, start, true);
}

Strategy parse_strategy(const std::string& name) {
    if (name == "bfs") return Strategy::algebraic_bfs;
    if (name == "sis") return Strategy::sis;
    if (name == "gss") return Strategy::gss;
    if (name == "exact") return Strategy::exact_perturb;
    throw ValidationError("unknown strategy: " + name);
}

std::string strategy_name(Strategy s) {
    switch (s) {
        case Strategy::algebraic_bfs: return "bfs";
        case Strategy::sis: return "sis";
        case Strategy::gss: return "gss";
        case Strategy::exact_perturb: return "exact";
    }
    throw InternalError("bad strategy value");
}

long long PartitionRun::total_iterations() const {
    long long total = 0;
    for (const auto& r : runs) total += r.trace.iterations_used;
    return total;
}

namespace {

// Exact-perturbation route for one component, honoring the mask by solving
// on the induced subgraph of still-active vertices.
ComponentRun exact_component(const Graph& g, int start, const std::vector<char>& assigned,
                             bool masking, int exact_cap) {
    ComponentRun run;
    if (!masking) {
        if (g.vertex_count() > exact_cap) {
            throw ValidationError("exact mode supports at most " + std::to_string(exact_cap) +
                                  " vertices (got " + std::to_string(g.vertex_count()) + ")");
        }
        run.members = perturb_component(g, MatrixParams::for_graph(g), start, exact_cap);
        return run;
    }

    int n = g.vertex_count();
    std::vector<int> to_sub(n, 0), to_full;
    to_full.reserve(n);
    for (int v = 1; v <= n; ++v) {
        if (!assigned[v - 1]) {
            to_full.push_back(v);
            to_sub[v - 1] = static_cast<int>(to_full.size());
        }
    }
    if (static_cast<int>(to_full.size()) > exact_cap) {
        throw ValidationError("exact mode supports at most " + std::to_string(exact_cap) +
                              " vertices (got " + std::to_string(to_full.size()) + ")");
    }
    std::vector<Edge> sub_edges;
    for (const auto& [u, v] : g.edges()) {
        if (!assigned[u - 1] && !assigned[v - 1]) {
            sub_edges.emplace_back(to_sub[u - 1], to_sub[v - 1]);
        }
    }
    Graph sub(static_cast<int>(to_full.size()), std::move(sub_edges));
    auto members =
        perturb_component(sub, MatrixParams::for_graph(sub), to_sub[start - 1], exact_cap);
    run.members.reserve(members.size());
    for (int v : members) run.members.push_back(to_full[v - 1]);
    std::sort(run.members.begin(), run.members.end());
    return run;
}

}  // namespace

PartitionRun components_via(const Graph& g, Strategy strategy, const ComponentsOptions& opts) {
    int n = g.vertex_count();
    if (opts.first_start != 0 && (opts.first_start < 1 || opts.first_start > n)) {
        throw ValidationError("start vertex out of range: " + std::to_string(opts.first_start));
    }
    PartitionRun out;
    std::vector<char> assigned(n, 0);
    Mask mask{std::vector<char>(n, 0)};
    int cursor = 1;
    bool first = true;
    while (true) {
        int start = 0;
        if (first && opts.first_start != 0) {
            start = opts.first_start;
        } else {
            while (cursor <= n && assigned[cursor - 1]) ++cursor;
            if (cursor > n) break;
            start = cursor;
        }
        first = false;
        if (assigned[start - 1]) continue;

        ComponentRun run;
        const Mask* mp = opts.masking ? &mask : nullptr;
        switch (strategy) {
            case Strategy::algebraic_bfs: run = algebraic_bfs_component(g, start, mp); break;
            case Strategy::sis: run = sis_component(g, start, mp); break;
            case Strategy::gss: run = gss_component(g, start, mp); break;
            case Strategy::exact_perturb:
                run = exact_component(g, start, assigned, opts.masking, opts.exact_cap);
                break;
        }
        for (int v : run.members) {
            if (assigned[v - 1]) throw InternalError("component overlap at vertex " + std::to_string(v));
            assigned[v - 1] = 1;
            if (opts.masking) mask.masked[v - 1] = 1;
        }
        if (!opts.keep_traces) {
            run.trace.newly_reached.clear();
            run.trace.newly_reached.shrink_to_fit();
        }
        out.partition.components.push_back(run.members);
        out.runs.push_back(std::move(run));
    }

    // Components discovered out of smallest-member order can only happen
    // with an explicit first_start; normalize ordering in that case.
    if (opts.first_start != 0 && out.partition.count() > 1) {
        std::vector<std::size_t> order(out.runs.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return out.partition.components[a].front() < out.partition.components[b].front();
        });
        PartitionRun sorted;
        for (std::size_t idx : order) {
            sorted.partition.components.push_back(std::move(out.partition.components[idx]));
            sorted.runs.push_back(std::move(out.runs[idx]));
        }
        out = std::move(sorted);
    }
    return out;
}

}  // namespace perturbcc
