// graph.hpp -- simple undirected graphs with switching algebra.
//
// Adjacency is stored as one bit row per vertex (symmetric, no loops).
// Orders up to 64 use a single word per row; larger orders spill into
// multiple words. Graphs are immutable once built and safe to share
// across threads.

#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "switchsep/core.hpp"

namespace switchsep {

class Graph {
 public:
  Graph() = default;

  explicit Graph(int order)
      : n_(check_order(order)),
        wpr_(order == 0 ? 0 : (order + 63) / 64),
        bits_(static_cast<std::size_t>(n_) * wpr_, 0) {}

  static Graph from_edges(int order, std::initializer_list<std::pair<int, int>> edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph from_edges(int order, const std::vector<std::pair<int, int>>& edges) {
    Graph g(order);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  static Graph complete(int order) {
    Graph g(order);
    for (int u = 0; u < order; ++u)
      for (int v = u + 1; v < order; ++v) g.add_edge(u, v);
    return g;
  }

  static Graph cycle(int order) {
    Graph g(order);
    for (int v = 0; v < order; ++v) g.add_edge(v, (v + 1) % order);
    return g;
  }

  static Graph path(int order) {
    Graph g(order);
    for (int v = 0; v + 1 < order; ++v) g.add_edge(v, v + 1);
    return g;
  }

  // Builds a graph of order n <= 64 from per-vertex adjacency masks.
  static Graph from_rows(int order, const std::uint64_t* rows) {
    if (order > 64) throw std::invalid_argument("from_rows: order > 64");
    Graph g(order);
    for (int v = 0; v < order; ++v) g.bits_[static_cast<std::size_t>(v)] = rows[v];
    return g;
  }

  int order() const { return n_; }

  bool adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (row(u)[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
  }

  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }

  void set_edge(int u, int v, bool present) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("set_edge: loop rejected");
    set_bit(u, v, present);
    set_bit(v, u, present);
  }

  int degree(int v) const {
    check_vertex(v);
    int c = 0;
    for (int i = 0; i < wpr_; ++i) c += std::popcount(row(v)[static_cast<std::size_t>(i)]);
    return c;
  }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (int v = 0; v < n_; ++v) twice += static_cast<std::size_t>(degree(v));
    return twice / 2;
  }

  VertexSet neighbors(int v) const {
    check_vertex(v);
    VertexSet s(n_);
    for (int u = 0; u < n_; ++u)
      if (adjacent(v, u)) s.add(u);
    return s;
  }

  // Single-word row; valid for order <= 64 only.
  std::uint64_t row_mask(int v) const {
    if (n_ > 64) throw std::invalid_argument("row_mask: order > 64");
    check_vertex(v);
    return bits_[static_cast<std::size_t>(v)];
  }

  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v)
        if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && bits_ == o.bits_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

 private:
  const std::uint64_t* row(int v) const { return bits_.data() + static_cast<std::size_t>(v) * wpr_; }
  std::uint64_t* row(int v) { return bits_.data() + static_cast<std::size_t>(v) * wpr_; }

  void set_bit(int u, int v, bool present) {
    std::uint64_t& w = row(u)[static_cast<std::size_t>(v) / 64];
    if (present)
      w |= detail::bit(v % 64);
    else
      w &= ~detail::bit(v % 64);
  }

  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("Graph: negative order");
    return order;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= n_)
      throw std::invalid_argument("Graph: vertex " + std::to_string(v) +
                                  " out of range for order " + std::to_string(n_));
  }

  friend Graph switched(const Graph&, const VertexSet&);
  friend Graph complement(const Graph&);

  int n_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Flips adjacency exactly on the pairs with one endpoint in u and one in
// its complement; order and labels are unchanged.
inline Graph switched(const Graph& g, const VertexSet& u) {
  if (u.universe() != g.order())
    throw std::invalid_argument("switched: set universe does not match graph order");
  Graph h = g;
  const VertexSet uc = u.complement();
  const int wpr = h.wpr_;
  std::vector<std::uint64_t> u_words(static_cast<std::size_t>(wpr), 0);
  std::vector<std::uint64_t> c_words(static_cast<std::size_t>(wpr), 0);
  for (int v = 0; v < g.order(); ++v) {
    if (u.contains(v)) u_words[static_cast<std::size_t>(v) / 64] |= detail::bit(v % 64);
    else c_words[static_cast<std::size_t>(v) / 64] |= detail::bit(v % 64);
  }
  for (int v = 0; v < g.order(); ++v) {
    const auto& flip = u.contains(v) ? c_words : u_words;  // never contains v itself
    for (int i = 0; i < wpr; ++i) h.row(v)[static_cast<std::size_t>(i)] ^= flip[static_cast<std::size_t>(i)];
  }
  return h;
}

inline Graph complement(const Graph& g) {
  Graph h(g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) h.add_edge(u, v);
  return h;
}

// Number of edges among the four cross pairs {a,c},{a,d},{b,c},{b,d}.
inline int cross_parity(const Graph& g, int a, int b, int c, int d) {
  const int vs[4] = {a, b, c, d};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (vs[i] == vs[j]) throw std::invalid_argument("cross_parity: repeated vertex");
  return static_cast<int>(g.adjacent(a, c)) + static_cast<int>(g.adjacent(a, d)) +
         static_cast<int>(g.adjacent(b, c)) + static_cast<int>(g.adjacent(b, d));
}

// Subgraph induced by s, relabeled 0..|s|-1 in increasing original-label order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order())
    throw std::invalid_argument("induced_subgraph: set universe does not match graph order");
  if (s.empty()) throw std::invalid_argument("induced_subgraph: empty vertex set");
  const std::vector<int> keep = s.members();
  Graph h(static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.adjacent(keep[i], keep[j])) h.add_edge(static_cast<int>(i), static_cast<int>(j));
  return h;
}

inline Graph delete_vertex(const Graph& g, int v) {
  VertexSet s = VertexSet::full(g.order());
  s.remove(v);
  return induced_subgraph(g, s);
}

struct TwoGraph {
  int order = 0;
  std::vector<std::array<int, 3>> odd_triples;  // sorted triples, sorted list

  bool operator==(const TwoGraph& o) const {
    return order == o.order && odd_triples == o.odd_triples;
  }
};

// The set of vertex triples inducing an odd number of edges; invariant
// under switching.
inline TwoGraph two_graph(const Graph& g) {
  if (g.order() < 3) throw std::invalid_argument("two_graph: order must be at least 3");
  TwoGraph t;
  t.order = g.order();
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      for (int k = j + 1; k < g.order(); ++k) {
        const int e = static_cast<int>(g.adjacent(i, j)) + static_cast<int>(g.adjacent(i, k)) +
                      static_cast<int>(g.adjacent(j, k));
        if (e % 2 == 1) t.odd_triples.push_back({i, j, k});
      }
  return t;
}

}  // namespace switchsep
