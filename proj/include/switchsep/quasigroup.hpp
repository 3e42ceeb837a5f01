// quasigroup.hpp -- finite n-ary quasigroups as operation tables.
//
// A table over symbols 0..q-1 is an n-ary quasigroup when the (n+1)-ary
// predicate x0 = Q(x1..xn) is Latin in every position: fixing any n of
// the variables determines the remaining one. Values are stored row-major
// with the last argument varying fastest. Tables are capped at the desk
// scale of strictly fewer than 2^16 cells.

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "switchsep/ebf.hpp"

namespace switchsep {

namespace detail {

inline constexpr std::uint64_t kMaxQuasigroupCells = std::uint64_t{1} << 16;

inline std::uint64_t quasigroup_cells(int order, int arity) {
  std::uint64_t cells = 1;
  for (int i = 0; i < arity; ++i) {
    cells *= static_cast<std::uint64_t>(order);
    if (cells >= kMaxQuasigroupCells)
      throw resource_error("quasigroup table exceeds the desk-scale cell bound");
  }
  return cells;
}

}  // namespace detail

class QuasigroupTable {
 public:
  QuasigroupTable() = default;

  QuasigroupTable(int order, int arity, std::vector<std::uint8_t> values)
      : order_(order), arity_(arity), values_(std::move(values)) {
    if (order < 1 || arity < 1)
      throw std::invalid_argument("QuasigroupTable: order and arity must be positive");
    const std::uint64_t cells = detail::quasigroup_cells(order, arity);
    if (values_.size() != cells)
      throw std::invalid_argument("QuasigroupTable: value count does not match order^arity");
    for (auto v : values_)
      if (v >= order) throw std::invalid_argument("QuasigroupTable: symbol out of range");
  }

  static QuasigroupTable iterated_sum_mod(int order, int arity) {
    const std::uint64_t cells = detail::quasigroup_cells(order, arity);
    std::vector<std::uint8_t> values(static_cast<std::size_t>(cells));
    for (std::uint64_t idx = 0; idx < cells; ++idx) {
      std::uint64_t rest = idx;
      int sum = 0;
      for (int i = 0; i < arity; ++i) {
        sum += static_cast<int>(rest % static_cast<std::uint64_t>(order));
        rest /= static_cast<std::uint64_t>(order);
      }
      values[idx] = static_cast<std::uint8_t>(sum % order);
    }
    return QuasigroupTable(order, arity, std::move(values));
  }

  int order() const { return order_; }
  int arity() const { return arity_; }
  std::uint64_t cells() const { return values_.size(); }
  const std::vector<std::uint8_t>& values() const { return values_; }

  int value_at(std::uint64_t idx) const { return values_[idx]; }

  int value(const std::vector<int>& args) const {
    if (static_cast<int>(args.size()) != arity_)
      throw std::invalid_argument("QuasigroupTable: wrong argument count");
    std::uint64_t idx = 0;
    for (int a : args) {
      if (a < 0 || a >= order_) throw std::invalid_argument("QuasigroupTable: symbol out of range");
      idx = idx * static_cast<std::uint64_t>(order_) + static_cast<std::uint64_t>(a);
    }
    return values_[idx];
  }

  bool operator==(const QuasigroupTable& o) const {
    return order_ == o.order_ && arity_ == o.arity_ && values_ == o.values_;
  }
  bool operator!=(const QuasigroupTable& o) const { return !(*this == o); }

 private:
  int order_ = 0;
  int arity_ = 0;
  std::vector<std::uint8_t> values_;
};

// Latin in every predicate position. The value position is Latin by
// construction (the table is a function); each argument position must be
// invertible: with all other arguments fixed, the map from that argument
// to the value is a bijection.
inline bool is_latin(int order, int arity, const std::vector<std::uint8_t>& values) {
  if (order < 1 || arity < 1)
    throw std::invalid_argument("is_latin: order and arity must be positive");
  const std::uint64_t cells = detail::quasigroup_cells(order, arity);
  if (values.size() != cells)
    throw std::invalid_argument("is_latin: value count does not match order^arity");
  for (auto v : values)
    if (v >= order) throw std::invalid_argument("is_latin: symbol out of range");
  if (order > 64) throw resource_error("is_latin: order above 64");

  for (int pos = 0; pos < arity; ++pos) {
    std::uint64_t stride = 1;
    for (int k = pos + 1; k < arity; ++k) stride *= static_cast<std::uint64_t>(order);
    const std::uint64_t outer = cells / (stride * static_cast<std::uint64_t>(order));
    for (std::uint64_t o = 0; o < outer; ++o)
      for (std::uint64_t inner = 0; inner < stride; ++inner) {
        const std::uint64_t base = o * stride * static_cast<std::uint64_t>(order) + inner;
        std::uint64_t seen = 0;
        for (int a = 0; a < order; ++a)
          seen |= detail::bit(values[base + static_cast<std::uint64_t>(a) * stride]);
        if (seen != detail::low_mask(order)) return false;
      }
  }
  return true;
}

inline bool is_latin(const QuasigroupTable& t) {
  return is_latin(t.order(), t.arity(), t.values());
}

// Order-4 n-ary quasigroup on bit pairs encoded e = 2x + y: the first
// coordinates satisfy x0 = x1 + ... + xn and the second coordinates
// satisfy y0 + ... + yn = lambda(x0,...,xn), lambda an extended Boolean
// function in n+1 arguments.
inline QuasigroupTable q_lambda(const ExtendedBooleanFunction& lambda) {
  const int np1 = lambda.arity();
  if (np1 < 3) throw std::invalid_argument("q_lambda: lambda arity must be >= 3");
  const int n = np1 - 1;
  const std::uint64_t cells = detail::quasigroup_cells(4, n);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(cells));
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    std::uint64_t rest = idx;
    int x0 = 0, ysum = 0;
    std::uint64_t point = 0;  // bit j = x_j
    for (int i = n; i >= 1; --i) {
      const int e = static_cast<int>(rest & 3);
      rest >>= 2;
      const int x = e >> 1;
      const int y = e & 1;
      x0 ^= x;
      ysum ^= y;
      if (x) point |= detail::bit(i);
    }
    if (x0) point |= detail::bit(0);
    const int y0 = (lambda.evaluate_even(point) ? 1 : 0) ^ ysum;
    values[idx] = static_cast<std::uint8_t>((x0 << 1) | y0);
  }
  return QuasigroupTable(4, n, std::move(values));
}

// Fixes values at chosen predicate positions (0 is the value slot,
// 1..n the arguments); the surviving positions form the predicate of a
// smaller quasigroup whose output sits at the least unfixed position.
struct RetractSpec {
  std::vector<std::pair<int, int>> fixed;  // (predicate position, symbol)
};

inline QuasigroupTable retract(const QuasigroupTable& qg, const RetractSpec& spec) {
  const int n = qg.arity();
  const int q = qg.order();
  std::vector<int> fixed_value(static_cast<std::size_t>(n) + 1, -1);
  for (auto [pos, sym] : spec.fixed) {
    if (pos < 0 || pos > n) throw std::invalid_argument("retract: position out of range");
    if (sym < 0 || sym >= q) throw std::invalid_argument("retract: symbol out of range");
    if (fixed_value[static_cast<std::size_t>(pos)] != -1)
      throw std::invalid_argument("retract: duplicate position");
    fixed_value[static_cast<std::size_t>(pos)] = sym;
  }
  const int m = static_cast<int>(spec.fixed.size());
  if (m < 1) throw std::invalid_argument("retract: at least one position must be fixed");
  const int r = n - m;
  if (r < 2) throw std::invalid_argument("retract: resulting arity below 2");

  std::vector<int> free_positions;
  for (int p = 0; p <= n; ++p)
    if (fixed_value[static_cast<std::size_t>(p)] == -1) free_positions.push_back(p);
  const int out_pos = free_positions.front();
  const std::vector<int> arg_positions(free_positions.begin() + 1, free_positions.end());

  const std::uint64_t cells = detail::quasigroup_cells(q, r);
  std::vector<int> result(static_cast<std::size_t>(cells), -1);

  // Scan the full predicate relation and keep the tuples matching the
  // fixed coordinates.
  std::vector<int> tuple(static_cast<std::size_t>(n) + 1, 0);
  const std::uint64_t total = qg.cells();
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = n; i >= 1; --i) {
      tuple[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    tuple[0] = qg.value_at(idx);
    bool match = true;
    for (int p = 0; p <= n && match; ++p)
      if (fixed_value[static_cast<std::size_t>(p)] != -1 &&
          tuple[static_cast<std::size_t>(p)] != fixed_value[static_cast<std::size_t>(p)])
        match = false;
    if (!match) continue;
    std::uint64_t ridx = 0;
    for (int p : arg_positions)
      ridx = ridx * static_cast<std::uint64_t>(q) + static_cast<std::uint64_t>(tuple[static_cast<std::size_t>(p)]);
    if (result[ridx] != -1)
      throw std::invalid_argument("retract: input table is not Latin");
    result[ridx] = tuple[static_cast<std::size_t>(out_pos)];
  }
  std::vector<std::uint8_t> values(static_cast<std::size_t>(cells));
  for (std::uint64_t i = 0; i < cells; ++i) {
    if (result[i] == -1) throw std::invalid_argument("retract: input table is not Latin");
    values[i] = static_cast<std::uint8_t>(result[i]);
  }
  return QuasigroupTable(q, r, std::move(values));
}

struct QgReduction {
  std::vector<int> inner_args;  // argument indices (0-based) fed to the inner table
  QuasigroupTable inner;        // arity |inner_args|
  QuasigroupTable outer;        // arity n - |inner_args| + 1, inner result in slot 0
};

// Searches for a repetition-free composition Q(x) = R(S(x_B), x_rest)
// over argument subsets B, 2 <= |B| <= n-1, in ascending-sequence order.
// Grouping the |B|-tuples by their residual function yields exactly q
// groups iff such a split exists; the group labeling (first occurrence
// order) is the inner table and the shared residuals form the outer one.
inline std::optional<QgReduction> is_reducible(const QuasigroupTable& qg) {
  const int n = qg.arity();
  if (n < 3) throw std::invalid_argument("is_reducible: arity must be >= 3");
  const int q = qg.order();

  std::optional<QgReduction> found;
  // Ascending-sequence enumeration over all argument subsets of size
  // 2..n-1 (the inner block may sit anywhere).
  std::vector<int> acc;
  detail::for_each_lex_subset_from(acc, 0, n, 2, n - 1, [&](const std::vector<int>& bv) {
    const int bsize = static_cast<int>(bv.size());
    std::uint64_t inner_cells = 1, rest_cells = 1;
    for (int i = 0; i < bsize; ++i) inner_cells *= static_cast<std::uint64_t>(q);
    for (int i = 0; i < n - bsize; ++i) rest_cells *= static_cast<std::uint64_t>(q);

    std::vector<bool> in_b(static_cast<std::size_t>(n), false);
    for (int b : bv) in_b[static_cast<std::size_t>(b)] = true;
    std::vector<int> rest_args;
    for (int i = 0; i < n; ++i)
      if (!in_b[static_cast<std::size_t>(i)]) rest_args.push_back(i);

    // residual[t] for inner tuple t: values over all rest tuples
    std::map<std::vector<std::uint8_t>, int> labels;
    std::vector<int> label_of(static_cast<std::size_t>(inner_cells), -1);
    std::vector<std::vector<std::uint8_t>> residual_of_label;
    std::vector<int> args(static_cast<std::size_t>(n), 0);
    bool ok = true;
    for (std::uint64_t t = 0; t < inner_cells && ok; ++t) {
      std::uint64_t rest = t;
      for (int i = bsize - 1; i >= 0; --i) {
        args[static_cast<std::size_t>(bv[static_cast<std::size_t>(i)])] =
            static_cast<int>(rest % static_cast<std::uint64_t>(q));
        rest /= static_cast<std::uint64_t>(q);
      }
      std::vector<std::uint8_t> res(static_cast<std::size_t>(rest_cells));
      for (std::uint64_t rtup = 0; rtup < rest_cells; ++rtup) {
        std::uint64_t rr = rtup;
        for (int i = static_cast<int>(rest_args.size()) - 1; i >= 0; --i) {
          args[static_cast<std::size_t>(rest_args[static_cast<std::size_t>(i)])] =
              static_cast<int>(rr % static_cast<std::uint64_t>(q));
          rr /= static_cast<std::uint64_t>(q);
        }
        res[rtup] = static_cast<std::uint8_t>(qg.value(args));
      }
      auto [it, inserted] = labels.try_emplace(std::move(res), static_cast<int>(labels.size()));
      if (inserted) residual_of_label.push_back(it->first);
      label_of[t] = it->second;
      if (static_cast<int>(labels.size()) > q) ok = false;  // too many groups: no split via B
    }
    if (!ok || static_cast<int>(labels.size()) != q) return false;

    std::vector<std::uint8_t> inner_values(static_cast<std::size_t>(inner_cells));
    for (std::uint64_t t = 0; t < inner_cells; ++t)
      inner_values[t] = static_cast<std::uint8_t>(label_of[t]);
    QuasigroupTable inner(q, bsize, std::move(inner_values));

    std::vector<std::uint8_t> outer_values(static_cast<std::size_t>(q) * rest_cells);
    for (int s = 0; s < q; ++s)
      for (std::uint64_t rtup = 0; rtup < rest_cells; ++rtup)
        outer_values[static_cast<std::uint64_t>(s) * rest_cells + rtup] =
            residual_of_label[static_cast<std::size_t>(s)][rtup];
    QuasigroupTable outer(q, n - bsize + 1, std::move(outer_values));

    if (!is_latin(inner) || !is_latin(outer))
      throw std::logic_error("is_reducible: factor table failed the Latin check");

    QgReduction red;
    red.inner_args = bv;
    red.inner = std::move(inner);
    red.outer = std::move(outer);
    found = std::move(red);
    return true;
  });
  return found;
}

// Largest arity of an irreducible proper retract. Binary retracts count
// as irreducible (composition needs arity >= 3), so the result is >= 2.
inline int kappa(const QuasigroupTable& qg) {
  const int n = qg.arity();
  if (n < 3) throw std::invalid_argument("kappa: arity must be >= 3");
  const int q = qg.order();
  for (int k = n - 1; k >= 3; --k) {
    const int m = n - k;
    bool found_irreducible = false;
    std::vector<int> acc;
    detail::for_each_lex_subset_from(acc, 0, n + 1, m, m, [&](const std::vector<int>& positions) {
      std::uint64_t assignments = 1;
      for (int i = 0; i < m; ++i) assignments *= static_cast<std::uint64_t>(q);
      for (std::uint64_t a = 0; a < assignments; ++a) {
        RetractSpec spec;
        std::uint64_t rest = a;
        for (int i = m - 1; i >= 0; --i) {
          spec.fixed.emplace_back(positions[static_cast<std::size_t>(i)],
                                  static_cast<int>(rest % static_cast<std::uint64_t>(q)));
          rest /= static_cast<std::uint64_t>(q);
        }
        if (!is_reducible(retract(qg, spec))) {
          found_irreducible = true;
          return true;
        }
      }
      return false;
    });
    if (found_irreducible) return k;
  }
  return 2;
}

// Componentwise pairing with the arity-matching iterated sum over Z_k;
// symbols pair as s = a*k + b.
inline QuasigroupTable direct_product(const QuasigroupTable& qg, int k) {
  if (k < 2) throw std::invalid_argument("direct_product: group order must be >= 2");
  const int n = qg.arity();
  const int q = qg.order();
  const int nq = q * k;
  const std::uint64_t cells = detail::quasigroup_cells(nq, n);
  std::vector<std::uint8_t> values(static_cast<std::size_t>(cells));
  std::vector<int> a_args(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    std::uint64_t rest = idx;
    int bsum = 0;
    for (int i = n - 1; i >= 0; --i) {
      const int s = static_cast<int>(rest % static_cast<std::uint64_t>(nq));
      rest /= static_cast<std::uint64_t>(nq);
      a_args[static_cast<std::size_t>(i)] = s / k;
      bsum += s % k;
    }
    const int a0 = qg.value(a_args);
    values[idx] = static_cast<std::uint8_t>(a0 * k + bsum % k);
  }
  return QuasigroupTable(nq, n, std::move(values));
}

// Reorders the arguments: result(x_0,...,x_{n-1}) = qg(x_{perm[0]},...).
inline QuasigroupTable permute_arguments(const QuasigroupTable& qg, const std::vector<int>& perm) {
  const int n = qg.arity();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("permute_arguments: permutation length mismatch");
  const int q = qg.order();
  std::vector<std::uint8_t> values(qg.values().size());
  std::vector<int> args(static_cast<std::size_t>(n));
  std::vector<int> src(static_cast<std::size_t>(n));
  const std::uint64_t cells = qg.cells();
  for (std::uint64_t idx = 0; idx < cells; ++idx) {
    std::uint64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      args[static_cast<std::size_t>(i)] = static_cast<int>(rest % static_cast<std::uint64_t>(q));
      rest /= static_cast<std::uint64_t>(q);
    }
    for (int i = 0; i < n; ++i)
      src[static_cast<std::size_t>(i)] = args[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    values[idx] = static_cast<std::uint8_t>(qg.value(src));
  }
  return QuasigroupTable(q, n, std::move(values));
}

}  // namespace switchsep
