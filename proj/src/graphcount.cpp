#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

#include "hyperarr/errors.hpp"
#include "hyperarr/graph.hpp"
#include "hyperarr/parallel.hpp"

namespace hyperarr {

Graph::Graph(std::size_t vcount)
    : vcount_(vcount), words_((vcount + 63) / 64), adjacency_(vcount * ((vcount + 63) / 64), 0), labels_(vcount) {
  std::iota(labels_.begin(), labels_.end(), 0);
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vcount_ || v >= vcount_) throw InvalidParams("edge endpoint out of range");
  if (u == v) return;
  adjacency_[u * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  adjacency_[v * words_ + u / 64] |= std::uint64_t{1} << (u % 64);
}

bool Graph::adjacent(std::size_t u, std::size_t v) const { return (row(u)[v / 64] >> (v % 64)) & 1; }

std::size_t Graph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (std::size_t w = 0; w < words_; ++w) d += static_cast<std::size_t>(std::popcount(row(v)[w]));
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < vcount_; ++v) total += degree(v);
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vcount_; ++u)
    for (std::size_t v = u + 1; v < vcount_; ++v)
      if (adjacent(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::relabeled(const std::vector<std::size_t>& perm) const {
  if (perm.size() != vcount_) throw InvalidParams("permutation size mismatch");
  Graph out(vcount_);
  for (auto [u, v] : edges()) out.add_edge(perm[u], perm[v]);
  for (std::size_t v = 0; v < vcount_; ++v) out.set_label(perm[v], labels_[v]);
  return out;
}

// ---------------------------------------------------------------------------
// Families

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) {
  const auto r = x % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

void require_pairs(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
  if (a.empty() || a.size() != b.size()) throw InvalidParams("a and b must be nonempty and of equal length");
}

Graph residue_graph(std::int64_t k, std::int64_t first_label) {
  if (k < 1) throw InvalidParams("graph parameter k must be at least 1");
  Graph g(static_cast<std::size_t>(k));
  for (std::int64_t v = 0; v < k; ++v) g.set_label(static_cast<std::size_t>(v), v + first_label);
  return g;
}

}  // namespace

Graph build_G(const std::vector<std::int64_t>& a, std::int64_t k) {
  if (a.empty()) throw InvalidParams("build_G needs a nonempty multiplier set");
  for (auto x : a)
    if (x < 2) throw InvalidParams("build_G multipliers must be at least 2");
  Graph g = residue_graph(k, 1);
  const std::int64_t q = k + 1;
  for (std::int64_t j = 1; j <= k; ++j)
    for (auto x : a) {
      const auto i = mulmod(x, j, q);
      if (i != 0 && i != j) g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
  return g;
}

Graph build_F(const std::vector<std::int64_t>& a, std::int64_t k) {
  if (a.empty()) throw InvalidParams("build_F needs a nonempty step set");
  Graph g = residue_graph(k, 0);
  for (auto x : a)
    if (x <= 0 || x >= k)
      throw InvalidStep("step " + std::to_string(x) + " must lie strictly between 0 and k = " + std::to_string(k));
  for (std::int64_t i = 0; i < k; ++i)
    for (auto x : a) g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>((i + x) % k));
  return g;
}

Graph build_G_ratio(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t k) {
  require_pairs(a, b);
  for (std::size_t r = 0; r < a.size(); ++r)
    if (a[r] == b[r]) throw InvalidParams("build_G_ratio needs a_r != b_r");
  Graph g = residue_graph(k, 1);
  const std::int64_t q = k + 1;
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::int64_t i = 1; i <= k; ++i) {
      const auto lhs = mulmod(a[r], i, q);
      for (std::int64_t j = 1; j <= k; ++j)
        if (i != j && lhs == mulmod(b[r], j, q))
          g.add_edge(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    }
  return g;
}

Graph build_F_affine(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b, std::int64_t k) {
  require_pairs(a, b);
  Graph g = residue_graph(k, 0);
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::int64_t j = 0; j < k; ++j) {
      const auto i = mod(mulmod(a[r], j, k) + b[r], k);
      g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
  return g;
}

Graph empty_graph(std::size_t k) { return Graph(k); }

Graph complete_graph(std::size_t k) {
  Graph g(k);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u + 1; v < k; ++v) g.add_edge(u, v);
  return g;
}

Graph path_graph(std::size_t k) {
  Graph g(k);
  for (std::size_t v = 0; v + 1 < k; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(std::size_t k) {
  if (k < 3) throw InvalidParams("a cycle needs at least 3 vertices");
  Graph g = path_graph(k);
  g.add_edge(k - 1, 0);
  return g;
}

Graph attach_copies(const Graph& g, const Graph& h, std::size_t root) {
  const std::size_t n = g.vcount(), m = h.vcount();
  if (m == 0 || root >= m) throw InvalidParams("attached graph needs the root vertex");
  Graph out(n + n * m);
  for (auto [u, v] : g.edges()) out.add_edge(u, v);
  for (std::size_t v = 0; v < n; ++v) out.set_label(v, g.labels()[v]);
  const auto hedges = h.edges();
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t base = n + v * m;
    for (auto [x, y] : hedges) out.add_edge(base + x, base + y);
    for (std::size_t x = 0; x < m; ++x) out.set_label(base + x, g.labels()[v]);
    out.add_edge(v, base + root);
  }
  return out;
}

Graph add_pendants(const Graph& g) { return attach_copies(g, Graph(1)); }

Graph attach_matching(const Graph& g, const Graph& h) {
  if (g.vcount() != h.vcount()) throw InvalidParams("matched graphs must have the same order");
  Graph out = disjoint_union({g, h});
  for (std::size_t v = 0; v < g.vcount(); ++v) out.add_edge(v, v + g.vcount());
  return out;
}

Graph disjoint_union(const std::vector<Graph>& gs) {
  std::size_t total = 0;
  for (const auto& g : gs) total += g.vcount();
  Graph out(total);
  std::size_t offset = 0;
  for (const auto& g : gs) {
    for (auto [u, v] : g.edges()) out.add_edge(u + offset, v + offset);
    for (std::size_t v = 0; v < g.vcount(); ++v) out.set_label(v + offset, g.labels()[v]);
    offset += g.vcount();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Counting

BigInt IndependenceCounts::at(std::size_t n) const {
  if (n < counts.size()) return counts[n];
  if (complete) return 0;
  throw InvalidParams("independence count s_" + std::to_string(n) + " lies beyond the computed cap");
}

namespace {

using Wide = unsigned __int128;

BigInt to_big(Wide v) {
  BigInt hi(static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64)));
  BigInt lo(static_cast<unsigned long>(static_cast<std::uint64_t>(v)));
  return (hi << 64) + lo;
}

// Ascending-vertex extension: `allowed` holds the vertices above the last
// chosen one that are not adjacent to any chosen vertex, so each set is
// reached exactly once.
class Enumerator {
 public:
  Enumerator(const Graph& g, std::size_t cap, std::uint64_t node_budget, std::atomic<std::uint64_t>& shared_nodes)
      : g_(g), cap_(cap), words_(g.words()), budget_(node_budget), shared_(shared_nodes),
        scratch_((cap + 1) * g.words(), 0), counts_(cap + 1, 0) {}

  // Counts every independent set whose smallest element is `first`.
  const std::vector<Wide>& run_from(std::size_t first) {
    std::uint64_t* allowed = scratch_.data() + words_;
    const std::uint64_t* adj = g_.row(first);
    for (std::size_t w = 0; w < words_; ++w) allowed[w] = ~adj[w];
    clear_upto(allowed, first);
    trim_tail(allowed);
    counts_[1] += 1;
    extend(allowed, first / 64, 1);
    flush();
    return counts_;
  }

 private:
  void clear_upto(std::uint64_t* bits, std::size_t v) const {
    const std::size_t w = v / 64;
    for (std::size_t i = 0; i < w; ++i) bits[i] = 0;
    const unsigned shift = static_cast<unsigned>(v % 64) + 1;
    bits[w] &= shift == 64 ? 0 : ~std::uint64_t{0} << shift;
  }

  void trim_tail(std::uint64_t* bits) const {
    const std::size_t rem = g_.vcount() % 64;
    if (rem) bits[words_ - 1] &= (std::uint64_t{1} << rem) - 1;
  }

  void tick() {
    if (budget_ == 0) return;
    if (++local_nodes_ == 4096) flush();
  }

  void flush() {
    if (budget_ == 0 || local_nodes_ == 0) return;
    const auto total = shared_.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (total > budget_) throw BudgetExceeded("independent-set enumeration exceeded " + std::to_string(budget_) + " nodes");
  }

  // `allowed` sits at depth `depth`; words before `start` are zero.
  void extend(const std::uint64_t* allowed, std::size_t start, std::size_t depth) {
    tick();
    if (depth == cap_) return;
    if (depth + 1 == cap_) {
      std::uint64_t c = 0;
      for (std::size_t w = start; w < words_; ++w) c += static_cast<std::uint64_t>(std::popcount(allowed[w]));
      counts_[cap_] += c;
      return;
    }
    std::uint64_t* next = scratch_.data() + (depth + 1) * words_;
    for (std::size_t w = start; w < words_; ++w) {
      std::uint64_t bits = allowed[w];
      while (bits) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        const std::size_t v = w * 64 + bit;
        const std::uint64_t* adj = g_.row(v);
        next[w] = bits & ~adj[w];
        for (std::size_t x = w + 1; x < words_; ++x) next[x] = allowed[x] & ~adj[x];
        counts_[depth + 1] += 1;
        extend(next, w, depth + 1);
      }
    }
  }

  const Graph& g_;
  std::size_t cap_;
  std::size_t words_;
  std::uint64_t budget_;
  std::atomic<std::uint64_t>& shared_;
  std::uint64_t local_nodes_ = 0;
  std::vector<std::uint64_t> scratch_;
  std::vector<Wide> counts_;
};

}  // namespace

IndependenceCounts independence_counts(const Graph& g, std::optional<std::size_t> cap, const RunOptions& opts) {
  const std::size_t limit = cap.value_or(g.vcount());
  std::vector<std::vector<Wide>> per_first(g.vcount());
  std::atomic<std::uint64_t> nodes{0};
  if (limit >= 1) {
    parallel_for_index(g.vcount(), opts.threads, [&](std::size_t v) {
      Enumerator e(g, limit, opts.node_budget, nodes);
      per_first[v] = e.run_from(v);
    });
  }
  std::vector<Wide> total(limit + 1, 0);
  total[0] = 1;
  for (const auto& p : per_first)
    for (std::size_t d = 1; d < p.size(); ++d) total[d] += p[d];

  IndependenceCounts out;
  out.counts.reserve(total.size());
  for (auto c : total) out.counts.push_back(to_big(c));
  // Subsets of independent sets are independent, so one zero ends the sequence.
  const auto zero = std::find(out.counts.begin(), out.counts.end(), BigInt(0));
  out.complete = zero != out.counts.end() || limit >= g.vcount();
  if (!cap && zero != out.counts.end()) out.counts.erase(zero, out.counts.end());
  return out;
}

BigInt count_independent_sets(const Graph& g, std::size_t n, const RunOptions& opts) {
  return independence_counts(g, n, opts).at(n);
}

IndependenceCounts union_counts_by_convolution(const std::vector<IndependenceCounts>& parts) {
  std::optional<std::size_t> limit;
  std::size_t full = 0;
  for (const auto& p : parts) {
    if (p.counts.empty()) throw InvalidParams("independence counts must contain s_0");
    full += p.cap();
    if (!p.complete) limit = std::min(limit.value_or(p.cap()), p.cap());
  }
  const std::size_t size = limit.value_or(full) + 1;
  std::vector<BigInt> acc(size, 0);
  acc[0] = 1;
  for (const auto& p : parts) {
    std::vector<BigInt> next(size, 0);
    for (std::size_t i = 0; i < size; ++i) {
      if (acc[i] == 0) continue;
      for (std::size_t j = 0; j < p.counts.size() && i + j < size; ++j) next[i + j] += acc[i] * p.counts[j];
    }
    acc = std::move(next);
  }
  IndependenceCounts out;
  out.counts = std::move(acc);
  out.complete = !limit.has_value();
  return out;
}

}  // namespace hyperarr
