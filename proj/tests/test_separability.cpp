#include <catch2/catch_amalgamated.hpp>

#include "switchsep/circulant.hpp"
#include "switchsep/enumeration.hpp"
#include "switchsep/separability.hpp"
#include "test_util.hpp"

using namespace switchsep;
using testutil::for_each_labeled_graph;
using testutil::oracle_isolable;
using testutil::oracle_separable;
using testutil::permuted_graph;
using testutil::random_graph;
using testutil::random_subset;

namespace {

Graph two_disjoint_edges() { return Graph::from_edges(4, {{0, 1}, {2, 3}}); }

Graph complete_bipartite_22() { return Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

}  // namespace

TEST_CASE("isolability matches hand-checked instances", "[separability]") {
  CHECK_FALSE(is_isolable(Graph::cycle(5), VertexSet::of(5, {0, 1})));
  CHECK(is_isolable(two_disjoint_edges(), VertexSet::of(4, {0, 1})));
  CHECK(is_isolable(Graph::path(4), VertexSet::of(4, {0, 3})));

  CHECK_THROWS_AS(is_isolable(Graph::path(4), VertexSet::of(4, {0})), std::invalid_argument);
  CHECK_THROWS_AS(is_isolable(Graph::path(4), VertexSet::of(4, {0, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(is_isolable(Graph::complete(3), VertexSet::of(3, {0, 1})), std::invalid_argument);
}

TEST_CASE("the neighborhood-difference test agrees with the switching-scan oracle", "[separability]") {
  for (int order : {4, 5}) {
    for_each_labeled_graph(order, [&](const Graph& g) {
      std::vector<int> w;
      const std::uint64_t total = std::uint64_t{1} << order;
      for (std::uint64_t m = 0; m < total; ++m) {
        const int size = std::popcount(m);
        if (size < 2 || size > order - 2) continue;
        w.clear();
        for (int v = 0; v < order; ++v)
          if ((m >> v) & 1u) w.push_back(v);
        REQUIRE(is_isolable(g, VertexSet::of(order, w)) == oracle_isolable(g, w));
      }
    });
  }
}

TEST_CASE("isolating switchings reproduce the constructive argument", "[separability]") {
  CHECK(isolating_switching(two_disjoint_edges(), VertexSet::of(4, {0, 1})) == VertexSet(4));
  CHECK(isolating_switching(Graph::path(4), VertexSet::of(4, {0, 3})) == VertexSet::of(4, {1, 3}));
  CHECK(isolating_switching(complete_bipartite_22(), VertexSet::of(4, {0, 1})) ==
        VertexSet::of(4, {0, 1}));

  CHECK_THROWS_AS(isolating_switching(Graph::cycle(5), VertexSet::of(5, {0, 1})),
                  precondition_error);
}

TEST_CASE("every constructed isolating switching really separates", "[separability]") {
  std::mt19937_64 rng(21);
  int built = 0;
  while (built < 300) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    VertexSet w = random_subset(n, rng);
    if (w.size() < 2 || w.size() > n - 2) continue;
    if (!is_isolable(g, w)) continue;
    const VertexSet u = isolating_switching(g, w);
    const Graph h = switched(g, u);
    for (int a : w.members())
      for (int c : w.complement().members()) REQUIRE_FALSE(h.adjacent(a, c));
    ++built;
  }
}

TEST_CASE("all graphs of order 4 are separable with valid witnesses", "[separability]") {
  for_each_labeled_graph(4, [&](const Graph& g) {
    const auto wit = is_separable(g);
    REQUIRE(wit.has_value());
    REQUIRE(witness_is_valid(g, *wit));
  });
}

TEST_CASE("decision instances from the circulant family", "[separability]") {
  CHECK_FALSE(is_separable(Graph::cycle(5)).has_value());
  CHECK_FALSE(is_separable(circulant_gn(13)).has_value());

  const auto wit = is_separable(delete_vertex(circulant_gn(13), 0));
  REQUIRE(wit.has_value());
  CHECK(wit->part == VertexSet::of(12, {2, 9}));
}

TEST_CASE("order below 4 is rejected", "[separability]") {
  CHECK_THROWS_AS(is_separable(Graph::complete(3)), std::invalid_argument);
  CHECK_THROWS_AS(brute_force_separable(Graph(2)), std::invalid_argument);
}

TEST_CASE("brute force returns the first lexicographic part", "[separability]") {
  const auto wit = brute_force_separable(Graph::path(4));
  REQUIRE(wit.has_value());
  CHECK(wit->part == VertexSet::of(4, {0, 3}));
  CHECK(witness_is_valid(Graph::path(4), *wit));

  CHECK_FALSE(brute_force_separable(Graph::cycle(5)).has_value());

  const auto e5 = brute_force_separable(Graph(5));
  REQUIRE(e5.has_value());
  CHECK(e5->part == VertexSet::of(5, {0, 1}));
  CHECK(e5->switching_set == VertexSet(5));
}

TEST_CASE("decider and brute force agree on small orders", "[separability]") {
  for (int order : {4, 5}) {
    for_each_labeled_graph(order, [&](const Graph& g) {
      const auto fast = is_separable(g);
      const auto slow = brute_force_separable(g);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        REQUIRE(witness_is_valid(g, *fast));
        REQUIRE(witness_is_valid(g, *slow));
      }
    });
  }
  // exhaustive over every labeled graph of order 6, not just representatives
  testutil::for_each_labeled_graph(6, [&](const Graph& g) {
    REQUIRE(is_separable(g).has_value() == brute_force_separable(g).has_value());
  });
}

TEST_CASE("decider agrees with the full subset-scan oracle on random graphs", "[separability]") {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 60; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 4);
    const Graph g = random_graph(n, rng);
    REQUIRE(is_separable(g).has_value() == oracle_separable(g));
  }
}

TEST_CASE("separability is invariant under switching, complement, and relabeling",
          "[separability]") {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 400; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 8);
    const Graph g = random_graph(n, rng);
    const bool sep = is_separable(g).has_value();

    CHECK(is_separable(switched(g, random_subset(n, rng))).has_value() == sep);
    CHECK(is_separable(complement(g)).has_value() == sep);

    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    CHECK(is_separable(permuted_graph(g, p)).has_value() == sep);
  }
}

TEST_CASE("twin pairs have matching outside neighborhoods", "[separability]") {
  const auto k22 = find_twins(complete_bipartite_22());
  CHECK(k22 == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

  CHECK(find_twins(Graph::cycle(5)).empty());
  CHECK(find_twins(Graph(4)).size() == 6);
}

TEST_CASE("every twin pair is isolable", "[separability]") {
  std::mt19937_64 rng(24);
  for (int rep = 0; rep < 300; ++rep) {
    const int n = 4 + static_cast<int>(rng() % 7);
    const Graph g = random_graph(n, rng);
    for (auto [v, w] : find_twins(g)) CHECK(is_isolable(g, VertexSet::of(n, {v, w})));
  }
}

TEST_CASE("the isolated-plus-path obstruction is recognized", "[separability]") {
  const Graph hit = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(has_forbidden_pattern(hit, 0));

  CHECK_FALSE(has_forbidden_pattern(Graph(5), 0));

  const Graph tri = Graph::from_edges(5, {{1, 2}, {2, 3}, {1, 3}});
  CHECK_FALSE(has_forbidden_pattern(tri, 0));

  CHECK_THROWS_AS(has_forbidden_pattern(Graph::path(5), 0), std::invalid_argument);
  CHECK_THROWS_AS(has_forbidden_pattern(Graph(4), 0), std::invalid_argument);
}

TEST_CASE("the obstruction itself is not separable", "[separability]") {
  const Graph hit = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(is_separable(hit).has_value());
}

TEST_CASE("the wide-order closure scan matches the single-word kernel", "[separability]") {
  std::mt19937_64 rng(25);
  const auto compare = [&](const Graph& g) {
    const int n = g.order();
    std::uint64_t rows[64];
    for (int v = 0; v < n; ++v) rows[v] = g.row_mask(v);
    if (rows[0]) switchsep::detail::switch_rows(rows, n, rows[0]);
    const std::uint64_t fast = switchsep::detail::least_closure_isolated_rows(rows, n);

    const Graph h = switched(g, g.neighbors(0));
    const auto wide = switchsep::detail::least_closure_isolated(h);
    if (fast == 0) {
      REQUIRE_FALSE(wide.has_value());
    } else {
      REQUIRE(wide.has_value());
      REQUIRE(wide->mask() == fast);
    }
  };
  for_each_representative(6, [&](std::uint64_t, const Graph& g) { compare(g); });
  for (int rep = 0; rep < 200; ++rep) compare(random_graph(7 + static_cast<int>(rng() % 6), rng));
}

TEST_CASE("separability works beyond the single-word order", "[separability]") {
  // two disjoint complete halves on 70 vertices: no cross edges at all
  Graph g(70);
  for (int i = 0; i < 35; ++i)
    for (int j = i + 1; j < 35; ++j) {
      g.add_edge(i, j);
      g.add_edge(i + 35, j + 35);
    }
  const auto wit = is_separable(g);
  REQUIRE(wit.has_value());
  CHECK(witness_is_valid(g, *wit));
  CHECK(is_separable(complement(g)).has_value());

  // the width-16 circulant on 65 vertices stays non-separable
  Graph c(65);
  for (int i = 0; i < 65; ++i)
    for (int j = 1; j <= 16; ++j) c.add_edge(i, (i + j) % 65);
  CHECK_FALSE(is_separable(c).has_value());
}
