#include "kuranet/graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <string>

#include "kuranet/errors.hpp"

namespace kuranet {

Graph Graph::from_edges(int n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
    if (n < 1) {
        throw InvalidParameterError("Graph: n must be >= 1");
    }
    for (auto& [u, v] : edges) {
        if (u >= static_cast<std::uint32_t>(n) || v >= static_cast<std::uint32_t>(n)) {
            throw InvalidParameterError("Graph: edge endpoint out of range");
        }
        if (u == v) {
            throw InvalidParameterError("Graph: self-loop");
        }
        if (u > v) {
            std::swap(u, v);
        }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw InvalidParameterError("Graph: duplicate edge");
    }
    Graph g;
    g.n_ = n;
    g.edges_ = std::move(edges);
    g.build_adjacency();
    return g;
}

void Graph::build_adjacency() {
    degrees_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
    offsets_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) {
        offsets_[i + 1] = offsets_[i] + degrees_[i];
    }
    adjacency_.resize(2 * edges_.size());
    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const auto& [u, v] : edges_) {
        adjacency_[cursor[u]++] = v;
        adjacency_[cursor[v]++] = u;
    }
    // Filling from the (u,v)-sorted edge list leaves every CSR row sorted:
    // row i receives all j < i first (edges (j, i), ascending j), then all
    // j > i (edges (i, j), ascending j).
}

double connectivity_threshold(int n) {
    if (n < 2) {
        throw InvalidParameterError("connectivity_threshold: n must be >= 2");
    }
    return std::log(static_cast<double>(n)) / static_cast<double>(n);
}

Graph gen_er(int n, double p, RngStream& stream) {
    if (n < 1) {
        throw InvalidParameterError("gen_er: n must be >= 1");
    }
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidParameterError("gen_er: p must lie in [0, 1]");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    const std::uint64_t total_pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;

    if (p == 0.0 || total_pairs == 0) {
        // fall through with no edges
    } else if (p >= 0.1) {
        // Dense path: one coin flip per pair, lexicographic order.
        edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total_pairs) * 1.05) + 16);
        for (std::uint32_t u = 0; u + 1 < static_cast<std::uint32_t>(n); ++u) {
            for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(n); ++v) {
                if (stream.uniform01() < p) {
                    edges.emplace_back(u, v);
                }
            }
        }
    } else {
        // Sparse path: geometric skips over the linearized pair sequence.
        // Gap G satisfies P(G = g) = (1-p)^g p; g = floor(log(1-u)/log(1-p)).
        edges.reserve(static_cast<std::size_t>(p * static_cast<double>(total_pairs) * 1.2) + 16);
        const double log1mp = std::log1p(-p);
        std::uint64_t idx = 0;        // next candidate pair, linear index
        std::uint32_t row = 0;        // row u of the pair at index row_start
        std::uint64_t row_start = 0;  // linear index of pair (row, row+1)
        while (true) {
            const double u = stream.uniform01();
            const double skip = std::floor(std::log1p(-u) / log1mp);
            if (skip >= static_cast<double>(total_pairs - idx)) {
                break;
            }
            idx += static_cast<std::uint64_t>(skip);
            // Row u covers n-1-u pairs; idx advances monotonically.
            while (idx - row_start >= static_cast<std::uint64_t>(n) - 1 - row) {
                row_start += static_cast<std::uint64_t>(n) - 1 - row;
                ++row;
            }
            edges.emplace_back(row, row + 1 + static_cast<std::uint32_t>(idx - row_start));
            ++idx;
            if (idx >= total_pairs) {
                break;
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

bool is_connected(const Graph& g) {
    const int n = g.n();
    if (n <= 1) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    queue.push_back(0);
    seen[0] = true;
    int reached = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (std::uint32_t j : g.neighbors(static_cast<int>(queue[head]))) {
            if (!seen[j]) {
                seen[j] = true;
                queue.push_back(j);
                ++reached;
            }
        }
    }
    return reached == n;
}

Graph gen_connected_at_threshold(int n, const RngStream& stream, int max_attempts) {
    if (n < 2) {
        throw InvalidParameterError("gen_connected_at_threshold: n must be >= 2");
    }
    if (max_attempts < 1) {
        throw InvalidParameterError("gen_connected_at_threshold: max_attempts must be >= 1");
    }
    const double pc = connectivity_threshold(n);
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        RngStream attempt_stream = stream.derive(static_cast<std::uint64_t>(attempt));
        Graph g = gen_er(n, pc, attempt_stream);
        if (is_connected(g)) {
            return g;
        }
    }
    throw RejectionExhaustedError(
        "gen_connected_at_threshold: no connected sample in " + std::to_string(max_attempts) +
            " attempts (n=" + std::to_string(n) + ")",
        max_attempts);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.n() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << u << ' ' << v << '\n';
    }
}

Graph load_edge_list(std::istream& in) {
    int n = 0;
    long m = 0;
    if (!(in >> n >> m) || n < 1 || m < 0) {
        throw InvalidParameterError("load_edge_list: bad header");
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long e = 0; e < m; ++e) {
        std::uint32_t u = 0, v = 0;
        if (!(in >> u >> v)) {
            throw InvalidParameterError("load_edge_list: truncated edge list");
        }
        if (!(u < v)) {
            throw InvalidParameterError("load_edge_list: edges must satisfy i < j");
        }
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace kuranet
