// gf2.hpp -- multilinear polynomials over GF(2) and the bridge between
// graphs and quadratic polynomials.
//
// A polynomial is a set of monomials; a monomial is a subset of variable
// indices packed into a 64-bit mask (the empty set is the constant 1).
// Text form: "x0*x1 + x2 + 1", monomials ordered by ascending member
// sequence with the constant last.

#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "switchsep/graph.hpp"

namespace switchsep {

class Gf2Poly {
 public:
  Gf2Poly() = default;

  explicit Gf2Poly(int arity) : arity_(check_arity(arity)) {}

  static Gf2Poly zero(int arity) { return Gf2Poly(arity); }

  static Gf2Poly one(int arity) {
    Gf2Poly p(arity);
    p.monomials_.push_back(0);
    return p;
  }

  static Gf2Poly variable(int arity, int i) {
    Gf2Poly p(arity);
    p.check_index(i);
    p.monomials_.push_back(detail::bit(i));
    return p;
  }

  static Gf2Poly from_monomials(int arity, std::vector<std::uint64_t> monos) {
    Gf2Poly p(arity);
    for (auto m : monos)
      if (m & ~detail::low_mask(arity))
        throw std::invalid_argument("Gf2Poly: monomial variable outside arity");
    std::sort(monos.begin(), monos.end());
    // cancel duplicate pairs mod 2
    for (std::size_t i = 0; i < monos.size();) {
      std::size_t j = i;
      while (j < monos.size() && monos[j] == monos[i]) ++j;
      if ((j - i) % 2 == 1) p.monomials_.push_back(monos[i]);
      i = j;
    }
    return p;
  }

  int arity() const { return arity_; }
  const std::vector<std::uint64_t>& monomials() const { return monomials_; }
  bool is_zero() const { return monomials_.empty(); }

  int degree() const {
    int d = 0;
    for (auto m : monomials_) d = std::max(d, std::popcount(m));
    return d;
  }

  void toggle(std::uint64_t mono) {
    if (mono & ~detail::low_mask(arity_))
      throw std::invalid_argument("Gf2Poly: monomial variable outside arity");
    auto it = std::lower_bound(monomials_.begin(), monomials_.end(), mono);
    if (it != monomials_.end() && *it == mono)
      monomials_.erase(it);
    else
      monomials_.insert(it, mono);
  }

  bool has_monomial(std::uint64_t mono) const {
    return std::binary_search(monomials_.begin(), monomials_.end(), mono);
  }

  Gf2Poly operator+(const Gf2Poly& o) const {
    require_same_arity(o);
    std::vector<std::uint64_t> merged = monomials_;
    merged.insert(merged.end(), o.monomials_.begin(), o.monomials_.end());
    return from_monomials(arity_, std::move(merged));
  }

  Gf2Poly operator*(const Gf2Poly& o) const {
    require_same_arity(o);
    std::vector<std::uint64_t> acc;
    acc.reserve(monomials_.size() * o.monomials_.size());
    for (auto a : monomials_)
      for (auto b : o.monomials_) acc.push_back(a | b);  // x^2 = x
    return from_monomials(arity_, std::move(acc));
  }

  bool evaluate(std::uint64_t point) const {
    bool v = false;
    for (auto m : monomials_)
      if ((m & point) == m) v = !v;
    return v;
  }

  // Sets variable i to zero: every monomial mentioning it vanishes.
  Gf2Poly substituted_zero(int i) const {
    check_index(i);
    Gf2Poly p(arity_);
    for (auto m : monomials_)
      if (!(m & detail::bit(i))) p.monomials_.push_back(m);
    return p;
  }

  // Removes an unused variable slot, shifting higher indices down.
  Gf2Poly dropped_variable(int i) const {
    check_index(i);
    Gf2Poly p(arity_ - 1);
    for (auto m : monomials_) {
      if (m & detail::bit(i))
        throw std::invalid_argument("dropped_variable: variable still in use");
      p.monomials_.push_back((m & detail::low_mask(i)) | ((m >> (i + 1)) << i));
    }
    std::sort(p.monomials_.begin(), p.monomials_.end());
    return p;
  }

  bool operator==(const Gf2Poly& o) const {
    return arity_ == o.arity_ && monomials_ == o.monomials_;
  }
  bool operator!=(const Gf2Poly& o) const { return !(*this == o); }

  std::string to_string() const {
    if (monomials_.empty()) return "0";
    std::vector<std::uint64_t> order = monomials_;
    std::sort(order.begin(), order.end(), mono_print_less);
    std::string out;
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (k) out += " + ";
      if (order[k] == 0) {
        out += "1";
        continue;
      }
      bool first = true;
      std::uint64_t m = order[k];
      while (m) {
        const int i = std::countr_zero(m);
        m &= m - 1;
        if (!first) out += "*";
        out += "x" + std::to_string(i);
        first = false;
      }
    }
    return out;
  }

  // Parses the text form; arity < 0 infers one past the largest index.
  static Gf2Poly parse(std::string_view text, int arity = -1) {
    std::vector<std::uint64_t> monos;
    int max_index = -1;
    std::size_t pos = 0;
    bool any_term = false;
    while (pos <= text.size()) {
      std::size_t next = text.find('+', pos);
      if (next == std::string_view::npos) next = text.size();
      std::string_view term = text.substr(pos, next - pos);
      std::size_t term_off = pos;
      // trim
      while (!term.empty() && std::isspace(static_cast<unsigned char>(term.front()))) {
        term.remove_prefix(1);
        ++term_off;
      }
      while (!term.empty() && std::isspace(static_cast<unsigned char>(term.back())))
        term.remove_suffix(1);
      if (term.empty()) {
        if (any_term || next < text.size())
          throw parse_error("polynomial: empty term", term_off);
        if (next == text.size()) break;
      } else {
        any_term = true;
        if (term == "0") {
          // a literal zero term contributes nothing
        } else if (term == "1") {
          monos.push_back(0);
        } else {
          std::uint64_t mono = 0;
          std::size_t fpos = 0;
          while (fpos <= term.size()) {
            std::size_t fend = term.find('*', fpos);
            if (fend == std::string_view::npos) fend = term.size();
            std::string_view factor = term.substr(fpos, fend - fpos);
            std::size_t factor_off = term_off + fpos;
            while (!factor.empty() && std::isspace(static_cast<unsigned char>(factor.front()))) {
              factor.remove_prefix(1);
              ++factor_off;
            }
            while (!factor.empty() && std::isspace(static_cast<unsigned char>(factor.back())))
              factor.remove_suffix(1);
            if (factor.size() < 2 || factor[0] != 'x')
              throw parse_error("polynomial: expected a variable like x3", factor_off);
            int idx = 0;
            for (std::size_t k = 1; k < factor.size(); ++k) {
              if (!std::isdigit(static_cast<unsigned char>(factor[k])))
                throw parse_error("polynomial: bad variable index", factor_off + k);
              idx = idx * 10 + (factor[k] - '0');
              if (idx > 63) throw parse_error("polynomial: variable index above 63", factor_off);
            }
            mono |= detail::bit(idx);
            max_index = std::max(max_index, idx);
            if (fend == term.size()) break;
            fpos = fend + 1;
          }
          monos.push_back(mono);
        }
      }
      if (next == text.size()) break;
      pos = next + 1;
    }
    const int n = arity >= 0 ? arity : max_index + 1;
    if (max_index >= n)
      throw parse_error("polynomial: variable index exceeds arity", 0);
    return from_monomials(std::max(n, 0), std::move(monos));
  }

 private:
  // Ascending member-sequence order with the constant term last.
  static bool mono_print_less(std::uint64_t a, std::uint64_t b) {
    if (a == b) return false;
    const int m = std::countr_zero(a ^ b);
    return (a >> m) & 1u;
  }

  static int check_arity(int arity) {
    if (arity < 0 || arity > 64)
      throw std::invalid_argument("Gf2Poly: arity must be in 0..64");
    return arity;
  }

  void check_index(int i) const {
    if (i < 0 || i >= arity_)
      throw std::invalid_argument("Gf2Poly: variable index out of range");
  }

  void require_same_arity(const Gf2Poly& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Gf2Poly: arity mismatch");
  }

  int arity_ = 0;
  std::vector<std::uint64_t> monomials_;  // sorted ascending by mask
};

// Sum of all variables; multiplying it by a linear l and adding realizes a
// switching of the associated graph.
inline Gf2Poly sigma_all_vars(int arity) {
  Gf2Poly p(arity);
  for (int i = 0; i < arity; ++i) p.toggle(detail::bit(i));
  return p;
}

// Vertices are variable indices; edges are the degree-2 monomials.
inline Graph polynomial_to_graph(const Gf2Poly& p) {
  if (p.degree() > 2)
    throw std::invalid_argument("polynomial_to_graph: degree above 2");
  Graph g(p.arity());
  for (auto m : p.monomials())
    if (std::popcount(m) == 2) {
      const int i = std::countr_zero(m);
      const int j = 63 - std::countl_zero(m);
      g.add_edge(i, j);
    }
  return g;
}

inline Gf2Poly graph_to_polynomial(const Graph& g, const Gf2Poly& linear) {
  if (linear.arity() != g.order())
    throw std::invalid_argument("graph_to_polynomial: linear part arity mismatch");
  if (linear.degree() > 1)
    throw std::invalid_argument("graph_to_polynomial: linear part must have degree <= 1");
  Gf2Poly p = linear;
  for (auto [u, v] : g.edges()) p.toggle(detail::bit(u) | detail::bit(v));
  return p;
}

inline Gf2Poly graph_to_polynomial(const Graph& g) {
  return graph_to_polynomial(g, Gf2Poly::zero(g.order()));
}

// Unique split r = q + (x_0 + ... + x_{n-1}) * l with q and l free of the
// last variable. Obtained by substituting x_{n-1} := s + x_0 + ... +
// x_{n-2} and reading the s-free part (q) and the s-coefficient (l).
inline std::pair<Gf2Poly, Gf2Poly> canonical_decomposition(const Gf2Poly& r) {
  const int n = r.arity();
  if (n < 1) throw std::invalid_argument("canonical_decomposition: arity must be >= 1");
  const std::uint64_t last = detail::bit(n - 1);
  std::vector<std::uint64_t> q_acc;
  std::vector<std::uint64_t> l_acc;
  for (auto m : r.monomials()) {
    if (!(m & last)) {
      q_acc.push_back(m);
      continue;
    }
    const std::uint64_t rest = m & ~last;
    l_acc.push_back(rest);
    for (int i = 0; i < n - 1; ++i) q_acc.push_back(rest | detail::bit(i));
  }
  return {Gf2Poly::from_monomials(n - 1, std::move(q_acc)),
          Gf2Poly::from_monomials(n - 1, std::move(l_acc))};
}

}  // namespace switchsep
