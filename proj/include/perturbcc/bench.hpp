#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "perturbcc/traversal.hpp"

namespace perturbcc {

struct BenchRecord {
    int n = 0;
    long long m = 0;
    int k = 0;
    std::uint64_t seed = 0;
    std::string strategy;
    std::vector<int> iterations_per_component;
    long long total_iterations = 0;
    long long portrait_passes = 0;
    long long wall_ns = 0;
    long long peak_memory_bytes = 0;  // analytic estimate, informative only
};

struct BenchOptions {
    int runs = 3;                     // timed runs per (instance, strategy); median reported
    std::uint64_t base_seed = 1;      // instance i uses base_seed + i
    int threads = 0;                  // 0 = PERTURBCC_THREADS, default 1
    std::vector<Strategy> strategies = {Strategy::algebraic_bfs, Strategy::sis, Strategy::gss};
};

// Worker-pool size: explicit option wins, then PERTURBCC_THREADS, then 1.
int thread_budget(int requested);

// Analytic peak-footprint of one driver run: CSR adjacency, edge list,
// portrait, and the driver's per-vertex state.
long long estimate_peak_memory(int n, long long m);

// One record per (instance, strategy), instances in input order. Each
// instance is a chain union (chains x len) with its own seed; iteration
// counts are deterministic per seed, wall times are medians over `runs`
// after one discarded warm-up. Partitions are checked against the
// union-find oracle; a mismatch is an internal error.
std::vector<BenchRecord> run_chain_suite(const std::vector<std::pair<int, int>>& sizes,
                                         const BenchOptions& opts = {});

// Columns: n,m,K,strategy,total_iterations,wall_ns. LF line endings.
void write_csv(const std::vector<BenchRecord>& records, std::ostream& out);

}  // namespace perturbcc
