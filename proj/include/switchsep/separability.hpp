// separability.hpp -- isolable sets, separating switchings, and the
// switching-separability decision with constructive witnesses.
//
// A set W (2 <= |W| <= n-2) is isolable when some switching removes every
// edge between W and its complement; a graph of order >= 4 is separable
// when an isolable set exists. The decision procedure normalizes vertex 0
// to be isolated (switching by its neighborhood) and then looks for a
// complement-side set C not containing 0 that is closed under
// (c,d) -> N(c) xor N(d); the minimal such sets are exactly the closures
// of seed pairs, so scanning all pairs decides separability in O(n^3)
// word operations. A subset-scan oracle over the raw four-vertex parity
// definition is kept alongside for cross-checking.

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "switchsep/graph.hpp"

namespace switchsep {

struct SeparationWitness {
  VertexSet part;           // the isolated side W
  VertexSet switching_set;  // U with switched(g, U) having no W-cross edges
};

namespace detail {

// In-place switching on single-word adjacency rows (order <= 64).
inline void switch_rows(std::uint64_t* rows, int n, std::uint64_t u) {
  const std::uint64_t comp = low_mask(n) & ~u;
  for (int v = 0; v < n; ++v) rows[v] ^= ((u >> v) & 1u) ? comp : u;
}

inline void delete_vertex_rows(const std::uint64_t* rows, int n, int v, std::uint64_t* out) {
  const std::uint64_t lo = low_mask(v);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (i == v) continue;
    const std::uint64_t r = rows[i];
    const std::uint64_t hi = (v >= 63) ? 0 : ((r >> (v + 1)) << v);
    out[k++] = (r & lo) | hi;
  }
}

// Least superset of {c,d} closed under x -> N(c) xor N(x) (equivalently,
// under all pairwise neighborhood differences). Requires an isolated
// vertex somewhere outside the seed so rows never point at it. Returns the
// closure mask if its size stays within n-2, otherwise 0.
inline std::uint64_t pair_closure(const std::uint64_t* rows, int n, int c, int d) {
  std::uint64_t s = bit(c) | bit(d);
  std::uint64_t pending = bit(d);
  int size = 2;
  const std::uint64_t anchor = rows[c];
  while (pending) {
    const int x = std::countr_zero(pending);
    pending &= pending - 1;
    const std::uint64_t fresh = (anchor ^ rows[x]) & ~s;
    if (fresh) {
      size += std::popcount(fresh);
      if (size > n - 2) return 0;
      s |= fresh;
      pending |= fresh;
    }
  }
  return s;
}

// Decision on rows where vertex `iso` is already isolated.
inline bool separable_isolated_rows(const std::uint64_t* rows, int n, int iso) {
  for (int c = 0; c < n; ++c) {
    if (c == iso) continue;
    for (int d = c + 1; d < n; ++d) {
      if (d == iso) continue;
      if (pair_closure(rows, n, c, d)) return true;
    }
  }
  return false;
}

// Decision for arbitrary rows (order 4..64): isolates vertex 0 first.
inline bool separable_rows(const std::uint64_t* rows, int n) {
  const std::uint64_t u0 = rows[0];
  if (!u0) return separable_isolated_rows(rows, n, 0);
  std::uint64_t work[64];
  for (int i = 0; i < n; ++i) work[i] = rows[i];
  switch_rows(work, n, u0);
  return separable_isolated_rows(work, n, 0);
}

// All successful pair closures on an isolated-0 graph, reduced to the
// ascending-sequence-least one. 0 when none exists.
inline std::uint64_t least_closure_isolated_rows(const std::uint64_t* rows, int n) {
  std::uint64_t best = 0;
  for (int c = 1; c < n; ++c)
    for (int d = c + 1; d < n; ++d) {
      const std::uint64_t s = pair_closure(rows, n, c, d);
      if (s && (best == 0 || seq_lex_less_mask(s, best))) best = s;
    }
  return best;
}

// Generic counterpart for orders above 64.
inline std::optional<VertexSet> least_closure_isolated(const Graph& h) {
  const int n = h.order();
  std::vector<VertexSet> nbr;
  nbr.reserve(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) nbr.push_back(h.neighbors(v));
  std::optional<VertexSet> best;
  for (int c = 1; c < n; ++c)
    for (int d = c + 1; d < n; ++d) {
      VertexSet s = VertexSet::of(n, {c, d});
      std::vector<int> pending{d};
      bool ok = true;
      while (!pending.empty() && ok) {
        const int x = pending.back();
        pending.pop_back();
        const VertexSet fresh = (nbr[static_cast<std::size_t>(c)] ^ nbr[static_cast<std::size_t>(x)]).minus(s);
        if (fresh.empty()) continue;
        s = s | fresh;
        if (s.size() > n - 2) {
          ok = false;
          break;
        }
        for (int f : fresh.members()) pending.push_back(f);
      }
      if (ok && (!best || VertexSet::seq_lex_less(s, *best))) best = s;
    }
  return best;
}

// Raw four-vertex parity test, straight from the definition. Used by the
// brute-force oracle; the production path uses the single-sided
// neighborhood-difference test instead.
inline bool isolable_by_quadruples(const Graph& g, const std::vector<int>& w) {
  const int n = g.order();
  std::vector<int> others;
  others.reserve(static_cast<std::size_t>(n) - w.size());
  {
    std::size_t wi = 0;
    for (int v = 0; v < n; ++v) {
      if (wi < w.size() && w[wi] == v) {
        ++wi;
        continue;
      }
      others.push_back(v);
    }
  }
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      for (std::size_t k = 0; k < others.size(); ++k)
        for (std::size_t l = k + 1; l < others.size(); ++l)
          if (cross_parity(g, w[i], w[j], others[k], others[l]) % 2 != 0) return false;
  return true;
}

inline void check_separability_order(const Graph& g) {
  if (g.order() < 4)
    throw std::invalid_argument("separability is defined for order >= 4 only");
}

}  // namespace detail

// True iff no pair a,b in w distinguishes the outside: for every a,b in w
// the set (N(a) xor N(b)) restricted to the complement of w is empty or
// the whole complement. Equivalent to the four-vertex parity definition.
inline bool is_isolable(const Graph& g, const VertexSet& w) {
  detail::check_separability_order(g);
  if (w.universe() != g.order())
    throw std::invalid_argument("is_isolable: set universe does not match graph order");
  const int n = g.order();
  if (w.size() < 2 || w.size() > n - 2)
    throw std::invalid_argument("is_isolable: need 2 <= |W| <= order-2");
  const std::vector<int> members = w.members();
  if (n <= 64) {
    const std::uint64_t outside = detail::low_mask(n) & ~w.mask();
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const std::uint64_t d =
            (g.row_mask(members[i]) ^ g.row_mask(members[j])) & outside;
        if (d != 0 && d != outside) return false;
      }
    return true;
  }
  const VertexSet outside = w.complement();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const VertexSet d = (g.neighbors(members[i]) ^ g.neighbors(members[j])) & outside;
      if (!d.empty() && d != outside) return false;
    }
  return true;
}

// Builds a switching set U such that switched(g, U) has no edges between w
// and its complement. Follows the constructive argument: with a
// nonadjacent pair a in w, c outside, take W0 = {b in w adjacent to c}
// union V0 = {d outside adjacent to a}.
inline VertexSet isolating_switching(const Graph& g, const VertexSet& w) {
  if (!is_isolable(g, w))
    throw precondition_error("isolating_switching: set is not isolable");
  const int n = g.order();
  const std::vector<int> inside = w.members();
  const std::vector<int> outside = w.complement().members();

  bool any_cross = false;
  for (int a : inside) {
    for (int c : outside)
      if (g.adjacent(a, c)) {
        any_cross = true;
        break;
      }
    if (any_cross) break;
  }
  if (!any_cross) return VertexSet(n);

  int a = -1, c = -1;
  for (int ai : inside) {
    for (int ci : outside)
      if (!g.adjacent(ai, ci)) {
        a = ai;
        c = ci;
        break;
      }
    if (a >= 0) break;
  }
  if (a < 0) return w;  // every cross pair adjacent: the w-switching clears them all

  VertexSet u(n);
  for (int b : inside)
    if (g.adjacent(b, c)) u.add(b);
  for (int d : outside)
    if (g.adjacent(a, d)) u.add(d);
  return u;
}

inline bool witness_is_valid(const Graph& g, const SeparationWitness& wit) {
  const int n = g.order();
  if (wit.part.universe() != n || wit.switching_set.universe() != n) return false;
  const int k = wit.part.size();
  if (k < 2 || k > n - 2) return false;
  const Graph h = switched(g, wit.switching_set);
  for (int a : wit.part.members())
    for (int c : wit.part.complement().members())
      if (h.adjacent(a, c)) return false;
  return true;
}

namespace detail {

inline VertexSet canonical_side(const VertexSet& s) {
  const VertexSet comp = s.complement();
  if (s.size() != comp.size()) return s.size() < comp.size() ? s : comp;
  return VertexSet::seq_lex_less(s, comp) ? s : comp;
}

inline SeparationWitness assemble_witness(const Graph& g, const VertexSet& closure_side) {
  SeparationWitness wit;
  wit.part = canonical_side(closure_side);
  wit.switching_set = canonical_side(isolating_switching(g, wit.part));
  if (!witness_is_valid(g, wit))
    throw std::logic_error("is_separable: produced an invalid witness");
  return wit;
}

}  // namespace detail

// Polynomial-time separability decision with a canonical witness: the
// returned part is the complement (or itself, whichever side is smaller;
// ties by ascending-sequence order) of the sequence-least successful
// closure in the isolated-0 normal form.
inline std::optional<SeparationWitness> is_separable(const Graph& g) {
  detail::check_separability_order(g);
  const int n = g.order();
  if (n <= 64) {
    std::uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row_mask(v);
    if (rows[0]) detail::switch_rows(rows, n, rows[0]);
    const std::uint64_t best = detail::least_closure_isolated_rows(rows, n);
    if (!best) return std::nullopt;
    return detail::assemble_witness(g, VertexSet::from_mask(n, best));
  }
  const Graph h = switched(g, g.neighbors(0));
  const auto best = detail::least_closure_isolated(h);
  if (!best) return std::nullopt;
  return detail::assemble_witness(g, *best);
}

// Exhaustive oracle: scans subsets containing vertex 0 in ascending
// sequence order and tests each against the raw four-vertex parity
// definition; first hit wins.
inline std::optional<SeparationWitness> brute_force_separable(const Graph& g) {
  detail::check_separability_order(g);
  const int n = g.order();
  if (n > 16) throw resource_error("brute_force_separable: order above 16");
  std::optional<SeparationWitness> found;
  detail::for_each_lex_subset_containing(0, n, 2, n - 2, [&](const std::vector<int>& w) {
    if (!detail::isolable_by_quadruples(g, w)) return false;
    SeparationWitness wit;
    wit.part = VertexSet::of(n, w);
    wit.switching_set = isolating_switching(g, wit.part);
    found = std::move(wit);
    return true;
  });
  return found;
}

// All unordered pairs {v,w} whose neighborhoods agree outside the pair.
inline std::vector<std::pair<int, int>> find_twins(const Graph& g) {
  std::vector<std::pair<int, int>> out;
  const int n = g.order();
  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      const VertexSet pair = VertexSet::of(n, {v, w});
      if ((g.neighbors(v) ^ g.neighbors(w)).subset_of(pair)) out.emplace_back(v, w);
    }
  return out;
}

// With o isolated: does some 4-set of other vertices induce exactly a
// 3-edge path? (Together with o that is the 5-vertex obstruction.)
inline bool has_forbidden_pattern(const Graph& g, int o) {
  if (g.order() < 5) throw std::invalid_argument("has_forbidden_pattern: order must be >= 5");
  if (g.degree(o) != 0) throw std::invalid_argument("has_forbidden_pattern: o must be isolated");
  const int n = g.order();
  std::vector<int> vs;
  for (int v = 0; v < n; ++v)
    if (v != o) vs.push_back(v);
  const std::size_t m = vs.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c)
        for (std::size_t d = c + 1; d < m; ++d) {
          const int q[4] = {vs[a], vs[b], vs[c], vs[d]};
          int deg[4] = {0, 0, 0, 0};
          int edges = 0;
          for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
              if (g.adjacent(q[i], q[j])) {
                ++edges;
                ++deg[i];
                ++deg[j];
              }
          if (edges != 3) continue;
          int ones = 0, twos = 0;
          for (int i = 0; i < 4; ++i) {
            if (deg[i] == 1) ++ones;
            if (deg[i] == 2) ++twos;
          }
          if (ones == 2 && twos == 2) return true;  // 4 vertices, 3 edges, max degree 2: a path
        }
  return false;
}

}  // namespace switchsep
