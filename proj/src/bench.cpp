#include "perturbcc/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <ostream>
#include <thread>

#include "perturbcc/oracle.hpp"

namespace perturbcc {

int thread_budget(int requested) {
    int t = requested;
    if (t <= 0) {
        if (const char* env = std::getenv("PERTURBCC_THREADS")) {
            t = std::atoi(env);
        }
    }
    if (t <= 0) t = 1;
    return std::min(t, 256);
}

long long estimate_peak_memory(int n, long long m) {
    long long bytes = 0;
    bytes += 8 * m;                     // normalized edge list
    bytes += 4 * (n + 1) + 8 * m;      // CSR offsets + adjacency
    bytes += 8 * m;                     // portrait
    bytes += 3LL * n;                   // reached/next/mask bytes
    bytes += 8LL * n;                   // assigned flags + frontier ints
    return bytes;
}

namespace {

BenchRecord measure(const Graph& g, std::uint64_t seed, Strategy strategy, int runs,
                    const ComponentPartition& oracle) {
    ComponentsOptions opts;
    opts.keep_traces = true;  // traces give per-component iteration counts

    PartitionRun first = components_via(g, strategy, opts);
    if (first.partition != oracle) {
        throw InternalError("strategy " + strategy_name(strategy) +
                            " disagrees with the union-find oracle");
    }

    BenchRecord rec;
    rec.n = g.vertex_count();
    rec.m = g.edge_count();
    rec.k = oracle.count();
    rec.seed = seed;
    rec.strategy = strategy_name(strategy);
    for (const auto& run : first.runs) {
        rec.iterations_per_component.push_back(run.trace.iterations_used);
        rec.portrait_passes += run.portrait_passes;
    }
    rec.total_iterations = first.total_iterations();
    rec.peak_memory_bytes = estimate_peak_memory(rec.n, rec.m);

    // Timed runs skip trace retention; the warm-up above is discarded.
    ComponentsOptions timed_opts;
    timed_opts.keep_traces = false;
    std::vector<long long> samples;
    samples.reserve(static_cast<std::size_t>(runs));
    for (int r = 0; r < runs; ++r) {
        auto t0 = std::chrono::steady_clock::now();
        PartitionRun timed = components_via(g, strategy, timed_opts);
        auto t1 = std::chrono::steady_clock::now();
        if (timed.partition.count() != oracle.count()) {
            throw InternalError("nondeterministic partition in timed run");
        }
        samples.push_back(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    }
    std::sort(samples.begin(), samples.end());
    rec.wall_ns = samples[samples.size() / 2];
    return rec;
}

}  // namespace

std::vector<BenchRecord> run_chain_suite(const std::vector<std::pair<int, int>>& sizes,
                                         const BenchOptions& opts) {
    if (opts.runs < 3) throw ValidationError("bench needs at least 3 timed runs");
    int workers = thread_budget(opts.threads);

    std::vector<std::vector<BenchRecord>> per_instance(sizes.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string error_text;
    std::mutex error_lock;

    auto work = [&]() {
        while (!failed.load()) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= sizes.size()) break;
            try {
                auto [chains, len] = sizes[idx];
                std::uint64_t seed = opts.base_seed + idx;
                Graph g = gen_chain_union(chains, len, seed);
                ComponentPartition oracle = uf_components(g);
                for (Strategy s : opts.strategies) {
                    per_instance[idx].push_back(measure(g, seed, s, opts.runs, oracle));
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(error_lock);
                error_text = e.what();
                failed.store(true);
            }
        }
    };

    if (workers <= 1 || sizes.size() <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        int count = std::min<int>(workers, static_cast<int>(sizes.size()));
        pool.reserve(static_cast<std::size_t>(count));
        for (int t = 0; t < count; ++t) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }
    if (failed.load()) throw InternalError(error_text);

    std::vector<BenchRecord> out;
    for (auto& group : per_instance) {
        for (auto& rec : group) out.push_back(std::move(rec));
    }
    return out;
}

void write_csv(const std::vector<BenchRecord>& records, std::ostream& out) {
    out << "n,m,K,strategy,total_iterations,wall_ns\n";
    for (const auto& r : records) {
        out << r.n << ',' << r.m << ',' << r.k << ',' << r.strategy << ','
            << r.total_iterations << ',' << r.wall_ns << '\n';
    }
}

}  // namespace perturbcc
