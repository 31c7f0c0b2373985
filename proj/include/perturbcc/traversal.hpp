#pragma once

#include <string>
#include <vector>

#include "perturbcc/exact.hpp"
#include "perturbcc/graph.hpp"
#include "perturbcc/oracle.hpp"

namespace perturbcc {

// Vertices excluded from a run: never read, never written.
struct Mask {
    std::vector<char> masked;  // masked[v-1], 1-based vertices

    bool is_masked(int v) const { return masked[static_cast<std::size_t>(v) - 1] != 0; }
};

// Per-iteration record of a single-component run. A vertex is "reached" when
// its solution entry first turns nonzero; iteration k's set holds the
// vertices that first happened to at k. iterations_used counts productive
// sweeps, so an isolated start gives 0.
struct TraversalTrace {
    std::vector<std::vector<int>> newly_reached;
    int iterations_used = 0;
};

struct ComponentRun {
    std::vector<int> members;  // ascending, includes start
    TraversalTrace trace;
    // Each sweep costs exactly one pass over the portrait; the final,
    // unproductive sweep that confirms the fixpoint is included.
    long long sweeps_executed = 0;
    long long portrait_passes = 0;
};

// Nonzero-pattern propagation of x^(k+1) = A x^(k) from x^(0) = e_start;
// the diagonal keeps reached vertices reached.
ComponentRun algebraic_bfs_component(const Graph& g, int start, const Mask* mask = nullptr);

// Jacobi-ordered sweep: j turns reached iff b_j != 0 or some neighbor was
// reached in the previous vector. Level-by-level identical to BFS.
ComponentRun sis_component(const Graph& g, int start, const Mask* mask = nullptr);

// Gauss-Seidel-ordered sweep, ascending vertex index: j turns reached iff
// b_j != 0, or a neighbor l < j is reached in the current sweep, or a
// neighbor l > j was reached in the previous vector. Consumes an
// ascending-index chain in a single sweep.
ComponentRun gss_component(const Graph& g, int start, const Mask* mask = nullptr);

// Literal floating-point forms of the two sweeps (x_j <- (b_j - sum of
// neighbor entries) / d), for fidelity experiments. Reached means the entry
// has been nonzero at some iteration, under an exact zero test.
ComponentRun sis_component_float(const Graph& g, const MatrixParams& params, int start);
ComponentRun gss_component_float(const Graph& g, const MatrixParams& params, int start);

// One Jacobi sweep done as a single pass over the portrait plus a per-vertex
// combine: returns (b - A0 x) / d with b = e_start.
std::vector<double> simple_iteration_portrait(const std::vector<double>& x, const Portrait& p,
                                              const MatrixParams& params, int start);

enum class Strategy { algebraic_bfs, sis, gss, exact_perturb };

// CLI spellings: bfs, sis, gss, exact.
Strategy parse_strategy(const std::string& name);
std::string strategy_name(Strategy s);

struct ComponentsOptions {
    bool masking = true;
    bool keep_traces = true;
    // 0 = pick the lowest-numbered vertex; otherwise the first component is
    // grown from this start, the rest from the lowest unassigned vertex.
    int first_start = 0;
    int exact_cap = kDefaultExactCap;
};

struct PartitionRun {
    ComponentPartition partition;
    std::vector<ComponentRun> runs;  // aligned with partition.components

    long long total_iterations() const;
};

// Full-partition driver: repeatedly grows the component of the lowest
// unassigned vertex with the chosen strategy until every vertex is assigned.
PartitionRun components_via(const Graph& g, Strategy strategy,
                            const ComponentsOptions& opts = {});

}  // namespace perturbcc
