#include "perturbcc/oracle.hpp"

#include <algorithm>

namespace perturbcc {

ComponentPartition uf_components(const Graph& g) {
    int n = g.vertex_count();
    UnionFind uf(n);
    for (const auto& [u, v] : g.edges()) uf.unite(u - 1, v - 1);

    std::vector<int> comp_index(n, -1);
    ComponentPartition part;
    for (int v = 1; v <= n; ++v) {
        int root = uf.find(v - 1);
        if (comp_index[root] < 0) {
            comp_index[root] = part.count();
            part.components.emplace_back();
        }
        part.components[comp_index[root]].push_back(v);
    }
    // Scanning v ascending already yields ascending members and components
    // ordered by smallest member.
    return part;
}

BfsLevels bfs_levels(const Graph& g, int start) {
    if (start < 1 || start > g.vertex_count()) {
        throw ValidationError("start vertex out of range: " + std::to_string(start));
    }
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()) + 1, false);
    BfsLevels out;
    out.levels.push_back({start});
    seen[start] = true;
    while (true) {
        std::vector<int> next;
        for (int v : out.levels.back()) {
            for (int w : g.neighbors(v)) {
                if (!seen[w]) {
                    seen[w] = true;
                    next.push_back(w);
                }
            }
        }
        if (next.empty()) break;
        std::sort(next.begin(), next.end());
        out.levels.push_back(std::move(next));
    }
    return out;
}

int eccentricity(const Graph& g, int start) { return bfs_levels(g, start).eccentricity(); }

int diameter(const Graph& g) {
    int best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
        best = std::max(best, bfs_levels(g, v).eccentricity());
    }
    return best;
}

}  // namespace perturbcc
