#include <catch2/catch_amalgamated.hpp>

#include "switchsep/quasigroup.hpp"
#include "test_util.hpp"

using namespace switchsep;
using testutil::for_each_labeled_graph;

namespace {

ExtendedBooleanFunction random_ebf(int arity, std::mt19937_64& rng) {
  ExtendedBooleanFunction f(arity);
  for (std::uint64_t i = 0; i < f.table_bits(); ++i)
    if (rng() & 1u) f.set_table_bit(i, true);
  return f;
}

ExtendedBooleanFunction graph_lambda(const Graph& g) {
  return ebf_from_polynomial(graph_to_polynomial(g));
}

}  // namespace

TEST_CASE("the zero function yields the doubled parity group", "[quasigroup]") {
  const auto q = q_lambda(ExtendedBooleanFunction(3));  // two arguments
  CHECK(q.order() == 4);
  CHECK(q.arity() == 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(q.value({a, b}) == (a ^ b));
  CHECK(is_latin(q));
}

TEST_CASE("q_lambda outputs are Latin for random functions", "[quasigroup]") {
  std::mt19937_64 rng(51);
  for (int rep = 0; rep < 50; ++rep) {
    const int arity = 4 + static_cast<int>(rng() % 2);  // 3- or 4-ary results
    CHECK(is_latin(q_lambda(random_ebf(arity, rng))));
  }
  CHECK_THROWS_AS(q_lambda(ExtendedBooleanFunction(2)), std::invalid_argument);
}

TEST_CASE("latin validation", "[quasigroup]") {
  CHECK(is_latin(QuasigroupTable::iterated_sum_mod(4, 2)));
  CHECK_FALSE(is_latin(4, 2, std::vector<std::uint8_t>(16, 0)));
  CHECK_THROWS_AS(is_latin(4, 2, std::vector<std::uint8_t>(15, 0)), std::invalid_argument);
  CHECK_THROWS_AS(is_latin(2, 2, {0, 1, 1, 3}), std::invalid_argument);  // symbol out of range
}

TEST_CASE("retracts of the modular sum", "[quasigroup]") {
  const auto z4_3 = QuasigroupTable::iterated_sum_mod(4, 3);

  // fixing the last argument to 0 leaves plain addition
  RetractSpec fix_last;
  fix_last.fixed = {{3, 0}};
  CHECK(retract(z4_3, fix_last) == QuasigroupTable::iterated_sum_mod(4, 2));

  // fixing the value slot of the binary sum would leave a unary relation
  const auto z4_2 = QuasigroupTable::iterated_sum_mod(4, 2);
  RetractSpec fix_value;
  fix_value.fixed = {{0, 0}};
  CHECK_THROWS_AS(retract(z4_2, fix_value), std::invalid_argument);

  // fixing the value slot of the ternary sum: x1 = c - x2 - x3
  RetractSpec fix_value3;
  fix_value3.fixed = {{0, 0}};
  const auto r = retract(z4_3, fix_value3);
  CHECK(r.arity() == 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(r.value({a, b}) == ((8 - a - b) % 4));
}

TEST_CASE("retracts stay Latin", "[quasigroup]") {
  std::mt19937_64 rng(52);
  for (int rep = 0; rep < 40; ++rep) {
    const auto q = q_lambda(random_ebf(5, rng));  // 4-ary, order 4
    RetractSpec spec;
    const int pos = static_cast<int>(rng() % 5);
    const int sym = static_cast<int>(rng() % 4);
    spec.fixed = {{pos, sym}};
    CHECK(is_latin(retract(q, spec)));
  }
}

TEST_CASE("fixing an argument to the zero pair matches the function restriction", "[quasigroup]") {
  std::mt19937_64 rng(53);
  for (int rep = 0; rep < 60; ++rep) {
    const auto lambda = random_ebf(4, rng);  // 3-ary quasigroup
    const auto q = q_lambda(lambda);
    const int i = 1 + static_cast<int>(rng() % 3);  // argument position
    RetractSpec spec;
    spec.fixed = {{i, 0}};  // the [0,0] symbol
    CHECK(retract(q, spec) == q_lambda(ebf_restrict0(lambda, i)));
  }
}

TEST_CASE("the modular sum splits at the first two arguments", "[quasigroup]") {
  const auto red = is_reducible(QuasigroupTable::iterated_sum_mod(4, 3));
  REQUIRE(red.has_value());
  CHECK(red->inner_args == std::vector<int>{0, 1});
  CHECK(is_latin(red->inner));
  CHECK(is_latin(red->outer));
}

TEST_CASE("a reported reduction reassembles the table", "[quasigroup]") {
  std::mt19937_64 rng(54);
  int found = 0;
  while (found < 30) {
    const auto lambda = random_ebf(4, rng);
    const auto q = q_lambda(lambda);
    const auto red = is_reducible(q);
    if (!red) continue;
    ++found;
    const int n = q.arity();
    std::vector<bool> inner(static_cast<std::size_t>(n), false);
    for (int b : red->inner_args) inner[static_cast<std::size_t>(b)] = true;
    std::vector<int> args(static_cast<std::size_t>(n));
    for (std::uint64_t idx = 0; idx < q.cells(); ++idx) {
      std::uint64_t rest = idx;
      for (int i = n - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(i)] = static_cast<int>(rest % 4);
        rest /= 4;
      }
      std::vector<int> in_args, out_args;
      for (int i = 0; i < n; ++i)
        (inner[static_cast<std::size_t>(i)] ? in_args : out_args).push_back(args[static_cast<std::size_t>(i)]);
      std::vector<int> outer_args{red->inner.value(in_args)};
      outer_args.insert(outer_args.end(), out_args.begin(), out_args.end());
      REQUIRE(red->outer.value(outer_args) == static_cast<int>(q.value_at(idx)));
    }
  }
}

TEST_CASE("the pentagon chain is irreducible with kappa 2", "[quasigroup]") {
  const auto q = q_lambda(graph_lambda(Graph::cycle(5)));
  CHECK(q.arity() == 4);
  CHECK(is_latin(q));
  CHECK_FALSE(is_reducible(q).has_value());
  CHECK(kappa(q) == 2);
}

TEST_CASE("the path chain of order 4 is reducible", "[quasigroup]") {
  const auto q = q_lambda(graph_lambda(Graph::path(4)));
  CHECK(q.arity() == 3);
  CHECK(is_reducible(q).has_value());
}

TEST_CASE("kappa of the modular sum is 2", "[quasigroup]") {
  CHECK(kappa(QuasigroupTable::iterated_sum_mod(4, 4)) == 2);
  CHECK_THROWS_AS(kappa(QuasigroupTable::iterated_sum_mod(4, 2)), std::invalid_argument);
}

TEST_CASE("direct products pair the table with a modular sum", "[quasigroup]") {
  const auto z2 = QuasigroupTable::iterated_sum_mod(2, 2);
  const auto prod = direct_product(z2, 2);
  CHECK(prod.order() == 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) CHECK(prod.value({a, b}) == (a ^ b));
  CHECK(is_latin(prod));
}

TEST_CASE("direct products preserve the split status on tested instances", "[quasigroup]") {
  const auto reducible3 = q_lambda(graph_lambda(Graph::path(4)));
  CHECK(is_reducible(direct_product(reducible3, 2)).has_value());

  const auto irreducible4 = q_lambda(graph_lambda(Graph::cycle(5)));
  const auto prod = direct_product(irreducible4, 2);
  CHECK(prod.order() == 8);
  CHECK(is_latin(prod));
  CHECK_FALSE(is_reducible(prod).has_value());
}

TEST_CASE("desk-scale bounds reject oversized tables", "[quasigroup]") {
  // an 8-ary order-4 table would hit 4^8 = 2^16 cells
  CHECK_THROWS_AS(q_lambda(ExtendedBooleanFunction(9)), resource_error);
  // 16^4 = 2^16 cells as well
  CHECK_THROWS_AS(direct_product(q_lambda(graph_lambda(Graph::cycle(5))), 4), resource_error);
}

TEST_CASE("reducibility is invariant under argument permutation", "[quasigroup]") {
  std::mt19937_64 rng(55);
  for (int rep = 0; rep < 40; ++rep) {
    const auto q = q_lambda(random_ebf(5, rng));
    std::vector<int> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_reducible(q).has_value() == is_reducible(permute_arguments(q, perm)).has_value());
  }
}

TEST_CASE("order-4 graphs: function split iff quasigroup split", "[quasigroup]") {
  for_each_labeled_graph(4, [&](const Graph& g) {
    const auto lambda = graph_lambda(g);
    const bool f_sep = ebf_is_separable(lambda).has_value();
    const bool q_red = is_reducible(q_lambda(lambda)).has_value();
    REQUIRE(f_sep == q_red);
  });
}
