#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperarr/exactmath.hpp"
#include "hyperarr/options.hpp"

namespace hyperarr {

/// Finite simple graph with word-packed adjacency rows.
class Graph {
 public:
  explicit Graph(std::size_t vcount = 0);

  std::size_t vcount() const { return vcount_; }
  std::size_t words() const { return words_; }

  /// Adds the undirected edge uv; self-loops and repeats are ignored.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const;
  const std::uint64_t* row(std::size_t v) const { return adjacency_.data() + v * words_; }
  std::size_t degree(std::size_t v) const;
  std::size_t edge_count() const;
  /// Sorted list of edges (u, v) with u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Residue or original name of each vertex; defaults to the index.
  const std::vector<std::int64_t>& labels() const { return labels_; }
  void set_label(std::size_t v, std::int64_t label) { labels_[v] = label; }

  /// Copy in which vertex v becomes perm[v].
  Graph relabeled(const std::vector<std::size_t>& perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vcount_ == b.vcount_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::size_t vcount_;
  std::size_t words_;
  std::vector<std::uint64_t> adjacency_;
  std::vector<std::int64_t> labels_;
};

/// Vertices 1..k (label = residue), edge ij when i = a_r j mod (k + 1).
Graph build_G(const std::vector<std::int64_t>& a, std::int64_t k);
/// Circulant graph on Z/kZ, edge ij when i - j = +-a_r mod k; needs 0 < a_r < k.
Graph build_F(const std::vector<std::int64_t>& a, std::int64_t k);
/// Vertices 1..k, edge ij when a_r i = b_r j mod (k + 1).
Graph build_G_ratio(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t k);
/// Vertices Z/kZ, edge ij when i - a_r j = b_r mod k.
Graph build_F_affine(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t k);

Graph empty_graph(std::size_t k);
Graph complete_graph(std::size_t k);
Graph path_graph(std::size_t k);
Graph cycle_graph(std::size_t k);

/// Every vertex v gains a new neighbour v + n of degree one.
Graph add_pendants(const Graph& g);
/// Every vertex v of g is joined by one edge to `root` of its own copy of h.
Graph attach_copies(const Graph& g, const Graph& h, std::size_t root = 0);
/// Disjoint union of g and h (same order) plus the edges v -- (v + n).
Graph attach_matching(const Graph& g, const Graph& h);
Graph disjoint_union(const std::vector<Graph>& gs);

/// s_0..s_N where s_n counts n-element independent sets.
struct IndependenceCounts {
  std::vector<BigInt> counts;
  /// True when every s_n beyond the stored range is known to vanish.
  bool complete = false;

  std::size_t cap() const { return counts.size() - 1; }
  BigInt at(std::size_t n) const;
  friend bool operator==(const IndependenceCounts&, const IndependenceCounts&) = default;
};

/// One enumeration pass counting independent sets of every size up to cap.
/// Without a cap the result runs up to the independence number. Work is
/// split by the smallest chosen vertex; counts are exact and identical for
/// every thread count. Throws BudgetExceeded when more than
/// opts.node_budget search nodes would be visited.
IndependenceCounts independence_counts(const Graph& g, std::optional<std::size_t> cap = std::nullopt,
                                       const RunOptions& opts = {});
BigInt count_independent_sets(const Graph& g, std::size_t n, const RunOptions& opts = {});

/// Product of independence polynomials, valid up to the smallest cap among
/// incomplete inputs.
IndependenceCounts union_counts_by_convolution(const std::vector<IndependenceCounts>& parts);

}  // namespace hyperarr
