// circulant.hpp -- the odd-order circulant family gn and its report.
//
// gn(n) is the graph on Z_n with i adjacent to i +- j (mod n) for
// j = 1..floor(n/4). The companion jump parameter m = floor((n+1)/4)
// satisfies n = 4m +- 1, so stepping by m visits every vertex.

#pragma once

#include <numeric>
#include <vector>

#include "switchsep/separability.hpp"

namespace switchsep {

struct CirculantSpec {
  int n = 0;      // odd order >= 5
  int m = 0;      // jump parameter, floor((n+1)/4)
  int width = 0;  // floor(n/4)

  static CirculantSpec for_order(int n) {
    if (n < 5 || n % 2 == 0)
      throw std::invalid_argument("circulant gn: order must be odd and >= 5");
    CirculantSpec s;
    s.n = n;
    s.m = (n + 1) / 4;
    s.width = n / 4;
    if (std::gcd(s.m, s.n) != 1)
      throw std::logic_error("circulant gn: jump parameter not coprime to order");
    return s;
  }
};

inline Graph circulant_gn(int n) {
  const CirculantSpec spec = CirculantSpec::for_order(n);
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= spec.width; ++j) g.add_edge(i, (i + j) % n);
  return g;
}

struct GnReport {
  int n = 0;
  int m = 0;
  int width = 0;

  bool gn_nonseparable = false;

  struct Deletion {
    int vertex = 0;
    bool separable = false;
    std::pair<int, int> expected_pair{0, 0};  // labels in the deleted graph
    bool pair_isolable = false;
  };
  std::vector<Deletion> deletions;

  // Order-(n-2) subgraphs after removing i and i+m; only meaningful once
  // n-2 >= 4, otherwise flagged as skipped.
  bool pair_deletions_checked = false;
  struct PairDeletion {
    int i = 0;
    int j = 0;
    bool nonseparable = false;
  };
  std::vector<PairDeletion> pair_deletions;

  bool all_ok() const {
    if (!gn_nonseparable) return false;
    for (const auto& d : deletions)
      if (!d.separable || !d.pair_isolable) return false;
    if (pair_deletions_checked)
      for (const auto& p : pair_deletions)
        if (!p.nonseparable) return false;
    return true;
  }
};

namespace detail {

inline int relabel_after_delete(int label, int deleted) {
  return label - (label > deleted ? 1 : 0);
}

}  // namespace detail

// Checks, for one odd order: gn itself is non-separable; every one-vertex
// deletion is separable and the pair {v+m, v-m} is isolable in it; and
// every {v_i, v_{i+m}} deletion is non-separable (when the result still
// has order >= 4).
inline GnReport verify_gn(int n) {
  const CirculantSpec spec = CirculantSpec::for_order(n);
  const Graph g = circulant_gn(n);

  GnReport report;
  report.n = spec.n;
  report.m = spec.m;
  report.width = spec.width;
  report.gn_nonseparable = !is_separable(g).has_value();

  for (int v = 0; v < n; ++v) {
    const Graph del = delete_vertex(g, v);
    GnReport::Deletion entry;
    entry.vertex = v;
    entry.separable = is_separable(del).has_value();
    const int a = detail::relabel_after_delete((v + spec.m) % n, v);
    const int b = detail::relabel_after_delete(((v - spec.m) % n + n) % n, v);
    entry.expected_pair = {std::min(a, b), std::max(a, b)};
    entry.pair_isolable =
        is_isolable(del, VertexSet::of(n - 1, {entry.expected_pair.first,
                                               entry.expected_pair.second}));
    report.deletions.push_back(entry);
  }

  report.pair_deletions_checked = (n - 2 >= 4);
  if (report.pair_deletions_checked) {
    for (int i = 0; i < n; ++i) {
      const int j = (i + spec.m) % n;
      VertexSet keep = VertexSet::full(n);
      keep.remove(i);
      keep.remove(j);
      const Graph del2 = induced_subgraph(g, keep);
      report.pair_deletions.push_back({i, j, !is_separable(del2).has_value()});
    }
  }
  return report;
}

}  // namespace switchsep
