#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "kuranet/rng.hpp"

namespace kuranet {

/// Undirected simple graph stored as a sorted edge list plus CSR adjacency.
///
/// Invariants (enforced at construction): symmetric adjacency, no self-loops,
/// no duplicate edges, degree(i) == neighbors(i).size(), and
/// sum of degrees == 2 * edge_count().
class Graph {
  public:
    /// Empty graph (n = 0); useful as a placeholder before assignment.
    Graph() = default;

    /// Build from an explicit edge list; pairs may be in any order.
    /// Throws InvalidParameterError on self-loops, duplicates, or
    /// out-of-range endpoints.
    static Graph from_edges(int n, std::vector<std::pair<std::uint32_t, std::uint32_t>> edges);

    int n() const { return n_; }
    long edge_count() const { return static_cast<long>(edges_.size()); }

    int degree(int i) const { return static_cast<int>(offsets_[i + 1] - offsets_[i]); }
    const std::vector<std::uint32_t>& degrees() const { return degrees_; }

    /// Sorted adjacent node indices of i.
    std::span<const std::uint32_t> neighbors(int i) const {
        return {adjacency_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
    }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }

    /// True iff every unordered pair of distinct nodes is an edge.
    bool is_complete() const {
        return edge_count() == static_cast<long>(n_) * (n_ - 1) / 2;
    }

  private:
    void build_adjacency();

    int n_ = 0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;
    std::vector<std::size_t> offsets_;
    std::vector<std::uint32_t> adjacency_;
    std::vector<std::uint32_t> degrees_;
};

/// ln(n)/n, the probability above which G(n,p) is almost surely connected.
/// Throws InvalidParameterError for n < 2.
double connectivity_threshold(int n);

/// Erdos-Renyi G(n, p): each unordered pair is an edge independently with
/// probability p. Deterministic in (n, p, stream lineage). Pairs are scanned
/// in lexicographic order; for p < 0.1 a geometric skip replaces the
/// per-pair coin flip (the 0.1 cutoff is part of the sampling contract).
/// Throws InvalidParameterError for p outside [0, 1] or n < 1.
Graph gen_er(int n, double p, RngStream& stream);

/// True iff one traversal from node 0 reaches all n nodes.
bool is_connected(const Graph& g);

/// First connected G(n, p_c(n)) sample. Attempt k draws from
/// stream.derive(k), so the result depends only on (lineage, attempt index).
/// Throws RejectionExhaustedError after max_attempts rejections.
Graph gen_connected_at_threshold(int n, const RngStream& stream, int max_attempts = 10000);

/// Edge-list text format: "N M" then M lines "i j" with i < j, 0-indexed.
void save_edge_list(const Graph& g, std::ostream& out);
Graph load_edge_list(std::istream& in);

}  // namespace kuranet
