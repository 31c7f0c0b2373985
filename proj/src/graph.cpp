#include "perturbcc/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace perturbcc {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 1 || u > n) throw ValidationError("vertex id out of range: " + std::to_string(u));
        if (v < 1 || v > n) throw ValidationError("vertex id out of range: " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    offsets_.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (const auto& [u, v] : edges_) {
        ++offsets_[u];
        ++offsets_[v];
    }
    for (int v = 1; v <= n_; ++v) {
        max_degree_ = std::max(max_degree_, offsets_[v]);
        offsets_[v] += offsets_[v - 1];
    }
    adj_.resize(2 * edges_.size());
    std::vector<int> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adj_[cursor[u - 1]++] = v;
        adj_[cursor[v - 1]++] = u;
    }
    for (int v = 1; v <= n_; ++v) {
        std::sort(adj_.begin() + offsets_[v - 1], adj_.begin() + offsets_[v]);
    }
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    check_vertex(v);
    return std::binary_search(nb.begin(), nb.end(), v);
}

DegreeInfo degrees(const Graph& g) {
    DegreeInfo info;
    info.degree.resize(g.vertex_count());
    for (int v = 1; v <= g.vertex_count(); ++v) info.degree[v - 1] = g.degree(v);
    info.max_degree = g.max_degree();
    return info;
}

Portrait build_portrait(const Graph& g) {
    return Portrait{g.vertex_count(), g.edges()};
}

MatrixParams MatrixParams::for_graph(const Graph& g) {
    MatrixParams p;
    int dmax = g.max_degree();
    p.mu = std::max(dmax, 2);
    p.d = dmax == 0 ? Rational(2) : Rational(dmax) * static_cast<int>(p.mu);
    p.epsilon = 1;
    return p;
}

namespace {

int parse_id(std::string_view tok, int line_no) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected integer, got '" +
                         std::string(tok) + "'");
    }
    return value;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

}  // namespace

LoadResult load_edge_list(std::string_view text) {
    std::vector<Edge> raw;
    int declared_n = -1;
    int max_id = 0;
    int line_no = 0;
    bool saw_data = false;
    int duplicates = 0;
    int loops = 0;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto toks = split_ws(line);
        if (toks.empty()) continue;

        if (toks[0] == "n") {
            if (saw_data || declared_n >= 0) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": header must appear once, before any edge");
            }
            if (toks.size() != 2) {
                throw ParseError("line " + std::to_string(line_no) + ": header is 'n <count>'");
            }
            declared_n = parse_id(toks[1], line_no);
            if (declared_n < 0) throw ValidationError("vertex count must be non-negative");
            continue;
        }

        if (toks.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        }
        int u = parse_id(toks[0], line_no);
        int v = parse_id(toks[1], line_no);
        if (u < 1 || v < 1) {
            throw ValidationError("line " + std::to_string(line_no) +
                                  ": vertex ids must be positive");
        }
        if (declared_n >= 0 && (u > declared_n || v > declared_n)) {
            throw ValidationError("line " + std::to_string(line_no) + ": vertex id exceeds n=" +
                                  std::to_string(declared_n));
        }
        saw_data = true;
        max_id = std::max({max_id, u, v});
        if (u == v) {
            ++loops;
            continue;
        }
        raw.emplace_back(std::min(u, v), std::max(u, v));
    }

    std::vector<Edge> sorted = raw;
    std::sort(sorted.begin(), sorted.end());
    duplicates = static_cast<int>(sorted.size() -
                                  (std::unique(sorted.begin(), sorted.end()) - sorted.begin()));

    int n = declared_n >= 0 ? declared_n : max_id;
    LoadResult result{Graph(n, std::move(raw)), duplicates, loops};
    return result;
}

LoadResult load_edge_list_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_edge_list(buf.str());
}

void write_edge_list(const Graph& g, std::ostream& out) {
    out << "n " << g.vertex_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph gen_chain_union(int count, int len, std::uint64_t seed) {
    if (count < 1 || len < 1) throw ValidationError("chain union needs count >= 1 and len >= 1");
    long long total = static_cast<long long>(count) * len;
    if (total > 50'000'000) throw ValidationError("chain union too large");
    int n = static_cast<int>(total);

    std::vector<int> label(n);
    for (int i = 0; i < n; ++i) label[i] = i + 1;
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        std::shuffle(label.begin(), label.end(), rng);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(count) * (len - 1));
    for (int c = 0; c < count; ++c) {
        for (int k = 0; k + 1 < len; ++k) {
            int a = label[c * len + k];
            int b = label[c * len + k + 1];
            edges.emplace_back(a, b);
        }
    }
    return Graph(n, std::move(edges));
}

namespace {

// Index of edge (i,j), i < j (0-based), in lexicographic order.
long long edge_rank(int i, int j, int n) {
    return static_cast<long long>(i) * n - static_cast<long long>(i) * (i + 1) / 2 + (j - i - 1);
}

Edge edge_unrank(long long k, int n) {
    // Invert rank -> (i,j) with a guess from the quadratic formula, then fix up.
    double nf = static_cast<double>(n);
    double disc = (2 * nf - 1) * (2 * nf - 1) - 8.0 * static_cast<double>(k);
    int i = static_cast<int>((2 * nf - 1 - std::sqrt(std::max(0.0, disc))) / 2.0);
    i = std::clamp(i, 0, n - 2);
    while (i > 0 && edge_rank(i, i + 1, n) > k) --i;
    while (edge_rank(i + 1, i + 2, n) <= k && i + 2 < n) ++i;
    int j = static_cast<int>(k - edge_rank(i, i + 1, n)) + i + 1;
    return {i + 1, j + 1};
}

}  // namespace

Graph gen_random_graph(int n, long long m, std::uint64_t seed) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
    long long max_m = static_cast<long long>(n) * (n - 1) / 2;
    if (m < 0 || m > max_m) {
        throw ValidationError("edge count " + std::to_string(m) + " out of range [0, " +
                              std::to_string(max_m) + "]");
    }

    // Floyd's sampling: uniform over m-subsets of the edge universe.
    std::mt19937_64 rng(seed);
    std::unordered_set<long long> picked;
    picked.reserve(static_cast<std::size_t>(m) * 2);
    for (long long t = max_m - m; t < max_m; ++t) {
        std::uniform_int_distribution<long long> dist(0, t);
        long long r = dist(rng);
        if (!picked.insert(r).second) picked.insert(t);
    }

    std::vector<Edge> edges;
    edges.reserve(picked.size());
    for (long long k : picked) edges.push_back(edge_unrank(k, n));
    return Graph(n, std::move(edges));
}

}  // namespace perturbcc
