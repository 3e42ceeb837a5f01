// ebf.hpp -- partial Boolean functions on even-weight tuples.
//
// An extended Boolean function of arity n is defined exactly on the
// binary n-tuples with an even number of ones. Since the last coordinate
// of a domain point is the parity of the others, the function is stored
// as a total truth table over the first n-1 coordinates (bit i of the
// table index is coordinate i).

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "switchsep/gf2.hpp"

namespace switchsep {

class ExtendedBooleanFunction {
 public:
  ExtendedBooleanFunction() = default;

  explicit ExtendedBooleanFunction(int arity) : arity_(check_arity(arity)) {
    const std::uint64_t bits = std::uint64_t{1} << (arity_ - 1);
    table_.assign(static_cast<std::size_t>((bits + 63) / 64), 0);
  }

  int arity() const { return arity_; }
  std::uint64_t table_bits() const { return std::uint64_t{1} << (arity_ - 1); }

  bool table_bit(std::uint64_t idx) const {
    return (table_[idx >> 6] >> (idx & 63)) & 1u;
  }

  void set_table_bit(std::uint64_t idx, bool v) {
    if (v)
      table_[idx >> 6] |= detail::bit(static_cast<int>(idx & 63));
    else
      table_[idx >> 6] &= ~detail::bit(static_cast<int>(idx & 63));
  }

  // Value at an even-weight n-bit point (the top coordinate is implied by
  // the others and must match).
  bool evaluate_even(std::uint64_t point) const {
    if (std::popcount(point) % 2 != 0)
      throw std::invalid_argument("evaluate_even: point has odd weight");
    return table_bit(point & detail::low_mask(arity_ - 1));
  }

  bool operator==(const ExtendedBooleanFunction& o) const {
    return arity_ == o.arity_ && table_ == o.table_;
  }
  bool operator!=(const ExtendedBooleanFunction& o) const { return !(*this == o); }

  // Hex string, most significant digit first; table index 0 is the least
  // significant bit.
  std::string to_hex() const {
    const std::uint64_t bits = table_bits();
    const std::uint64_t digits = (bits + 3) / 4;
    std::string out(static_cast<std::size_t>(digits), '0');
    for (std::uint64_t d = 0; d < digits; ++d) {
      int v = 0;
      for (int k = 3; k >= 0; --k) {
        const std::uint64_t idx = d * 4 + static_cast<std::uint64_t>(k);
        v = (v << 1) | (idx < bits && table_bit(idx) ? 1 : 0);
      }
      out[static_cast<std::size_t>(digits - 1 - d)] = static_cast<char>(v < 10 ? '0' + v : 'a' + v - 10);
    }
    return out;
  }

  static ExtendedBooleanFunction from_hex(const std::string& hex, int arity) {
    ExtendedBooleanFunction f(arity);
    const std::uint64_t bits = f.table_bits();
    const std::uint64_t digits = (bits + 3) / 4;
    if (hex.size() != digits)
      throw parse_error("table hex: expected " + std::to_string(digits) + " digits", hex.size());
    for (std::uint64_t d = 0; d < digits; ++d) {
      const char c = hex[static_cast<std::size_t>(digits - 1 - d)];
      int v;
      if (c >= '0' && c <= '9') v = c - '0';
      else if (c >= 'a' && c <= 'f') v = c - 'a' + 10;
      else if (c >= 'A' && c <= 'F') v = c - 'A' + 10;
      else throw parse_error("table hex: invalid digit", static_cast<std::size_t>(digits - 1 - d));
      for (int k = 0; k < 4; ++k) {
        const std::uint64_t idx = d * 4 + static_cast<std::uint64_t>(k);
        if ((v >> k) & 1) {
          if (idx >= bits)
            throw parse_error("table hex: bit set beyond table size",
                              static_cast<std::size_t>(digits - 1 - d));
          f.set_table_bit(idx, true);
        }
      }
    }
    return f;
  }

 private:
  static int check_arity(int arity) {
    if (arity < 2) throw std::invalid_argument("ExtendedBooleanFunction: arity must be >= 2");
    if (arity > 26) throw resource_error("ExtendedBooleanFunction: arity above desk scale");
    return arity;
  }

  int arity_ = 0;
  std::vector<std::uint64_t> table_;
};

// Restriction of p to the even-weight domain, tabulated over the first
// n-1 coordinates (the last coordinate is completed by parity).
inline ExtendedBooleanFunction ebf_from_polynomial(const Gf2Poly& p) {
  const int n = p.arity();
  if (n < 2) throw std::invalid_argument("ebf_from_polynomial: arity must be >= 2");
  ExtendedBooleanFunction f(n);
  const std::uint64_t bits = f.table_bits();
  for (std::uint64_t b = 0; b < bits; ++b) {
    const std::uint64_t parity = static_cast<std::uint64_t>(std::popcount(b) % 2);
    const std::uint64_t point = b | (parity << (n - 1));
    f.set_table_bit(b, p.evaluate(point));
  }
  return f;
}

// Fixes coordinate i to zero, producing an extended Boolean function in
// one fewer argument.
inline ExtendedBooleanFunction ebf_restrict0(const ExtendedBooleanFunction& f, int i) {
  const int n = f.arity();
  if (i < 0 || i >= n) throw std::invalid_argument("ebf_restrict0: coordinate out of range");
  if (n < 3) throw std::invalid_argument("ebf_restrict0: arity would drop below 2");
  ExtendedBooleanFunction g(n - 1);
  const std::uint64_t bits = g.table_bits();
  for (std::uint64_t b = 0; b < bits; ++b) {
    const std::uint64_t parity = static_cast<std::uint64_t>(std::popcount(b) % 2);
    const std::uint64_t z = b | (parity << (n - 2));  // even-weight (n-1)-tuple
    const std::uint64_t point = (z & detail::low_mask(i)) | ((z >> i) << (i + 1));
    g.set_table_bit(b, f.evaluate_even(point));
  }
  return g;
}

struct EbfBipartition {
  VertexSet y;  // contains argument 0
  VertexSet z;
};

namespace detail {

// Checks f(y,z) = f(y,z0) + f(y0,z) + f(y0,z0) over one parity block.
inline bool block_additive(const ExtendedBooleanFunction& f, std::uint64_t ymask,
                           std::uint64_t zmask, int parity) {
  const std::uint64_t y0 = parity == 0 ? 0 : (ymask & (~ymask + 1));
  const std::uint64_t z0 = parity == 0 ? 0 : (zmask & (~zmask + 1));
  // iterate submasks of ymask / zmask with matching weight parity
  std::uint64_t y = 0;
  while (true) {
    if (std::popcount(y) % 2 == parity) {
      std::uint64_t z = 0;
      while (true) {
        if (std::popcount(z) % 2 == parity) {
          const bool lhs = f.evaluate_even(y | z);
          const bool rhs = f.evaluate_even(y | z0) ^ f.evaluate_even(y0 | z) ^
                           f.evaluate_even(y0 | z0);
          if (lhs != rhs) return false;
        }
        if (z == zmask) break;
        z = (z - zmask) & zmask;  // next submask
      }
    }
    if (y == ymask) break;
    y = (y - ymask) & ymask;
  }
  return true;
}

}  // namespace detail

// Searches for a bipartition (Y,Z) of the n arguments, 2 <= |Y| <= n-2,
// such that f is a sum of a function of Y and a function of Z on the
// even-weight domain. The domain splits into the |y| even / |y| odd
// blocks, which carry no cross constraints, so each block is tested for
// additive decomposability on its own. First hit in ascending-sequence
// order of Y (which always contains argument 0).
inline std::optional<EbfBipartition> ebf_is_separable(const ExtendedBooleanFunction& f) {
  const int n = f.arity();
  if (n < 4) throw std::invalid_argument("ebf_is_separable: arity must be >= 4");
  std::optional<EbfBipartition> found;
  detail::for_each_lex_subset_containing(0, n, 2, n - 2, [&](const std::vector<int>& yv) {
    std::uint64_t ymask = 0;
    for (int i : yv) ymask |= detail::bit(i);
    const std::uint64_t zmask = detail::low_mask(n) & ~ymask;
    if (!detail::block_additive(f, ymask, zmask, 0)) return false;
    if (!detail::block_additive(f, ymask, zmask, 1)) return false;
    EbfBipartition bp;
    bp.y = VertexSet::from_mask(n, ymask);
    bp.z = VertexSet::from_mask(n, zmask);
    found = std::move(bp);
    return true;
  });
  return found;
}

struct EbfAnf {
  bool quadratic = false;
  Gf2Poly q;  // algebraic normal form in the first n-1 coordinates
};

// Moebius transform of the stored table; the unique multilinear polynomial
// in the first n-1 coordinates representing f on its domain.
inline EbfAnf is_quadratic_ebf(const ExtendedBooleanFunction& f) {
  const int vars = f.arity() - 1;
  const std::uint64_t bits = f.table_bits();
  std::vector<std::uint8_t> a(static_cast<std::size_t>(bits));
  for (std::uint64_t i = 0; i < bits; ++i) a[i] = f.table_bit(i) ? 1 : 0;
  for (int v = 0; v < vars; ++v)
    for (std::uint64_t i = 0; i < bits; ++i)
      if (i & detail::bit(v)) a[i] ^= a[i ^ detail::bit(v)];
  std::vector<std::uint64_t> monos;
  for (std::uint64_t i = 0; i < bits; ++i)
    if (a[i]) monos.push_back(i);
  EbfAnf out;
  out.q = Gf2Poly::from_monomials(vars, std::move(monos));
  out.quadratic = out.q.degree() <= 2;
  return out;
}

}  // namespace switchsep
