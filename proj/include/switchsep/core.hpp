// core.hpp -- shared error types, bit utilities, and the VertexSet type.
//
// Vertex sets are dynamic bit vectors interpreted relative to a fixed
// universe 0..universe-1. Everything here is value-semantic and
// immutable-after-construction friendly; no interior mutation is shared.

#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace switchsep {

// Thrown when text input (graph6, polynomial text, hex tables) is malformed.
// Carries the byte offset of the first offending character.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Thrown when an operation is invoked outside its contract in a way the
// caller could have checked (e.g. requesting an isolating switching for a
// set that is not isolable).
class precondition_error : public std::logic_error {
  using std::logic_error::logic_error;
};

// Thrown when an operation would exceed the configured desk-scale bounds.
class resource_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Mask with bits 0..n-1 set; n in [0,64].
inline constexpr std::uint64_t low_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Compares two bit masks as ascending member sequences (so {0,1} < {0,1,2}
// < {0,2}); a proper prefix sorts first.
inline bool seq_lex_less_mask(std::uint64_t a, std::uint64_t b) {
  if (a == b) return false;
  const int m = std::countr_zero(a ^ b);
  const std::uint64_t at_or_above = ~low_mask(m);
  if (a & bit(m)) return (b & at_or_above) != 0;
  return (a & at_or_above) == 0;
}

}  // namespace detail

// A subset of {0,...,universe-1} stored as packed 64-bit words.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe)
      : universe_(check_universe(universe)),
        words_(static_cast<std::size_t>((universe + 63) / 64), 0) {}

  static VertexSet of(int universe, std::initializer_list<int> members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet of(int universe, const std::vector<int>& members) {
    VertexSet s(universe);
    for (int v : members) s.add(v);
    return s;
  }

  static VertexSet from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw std::invalid_argument("from_mask: universe > 64");
    VertexSet s(universe);
    if (mask & ~detail::low_mask(universe))
      throw std::invalid_argument("from_mask: bits outside universe");
    if (!s.words_.empty()) s.words_[0] = mask;
    return s;
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return universe_; }

  bool contains(int v) const {
    if (v < 0 || v >= universe_) return false;
    return (words_[static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1u;
  }

  void add(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) / 64] |= detail::bit(v % 64);
  }

  void remove(int v) {
    check_member(v);
    words_[static_cast<std::size_t>(v) / 64] &= ~detail::bit(v % 64);
  }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  VertexSet complement() const {
    VertexSet r(*this);
    for (auto& w : r.words_) w = ~w;
    r.trim();
    return r;
  }

  VertexSet operator&(const VertexSet& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & b; }); }
  VertexSet operator|(const VertexSet& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a | b; }); }
  VertexSet operator^(const VertexSet& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a ^ b; }); }
  VertexSet minus(const VertexSet& o) const { return combine(o, [](std::uint64_t a, std::uint64_t b) { return a & ~b; }); }

  bool subset_of(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    require_same_universe(o);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        out.push_back(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
    return out;
  }

  int min_member() const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    throw precondition_error("min_member of empty set");
  }

  // Valid only for universes of at most 64 elements.
  std::uint64_t mask() const {
    if (universe_ > 64) throw std::invalid_argument("mask: universe > 64");
    return words_.empty() ? 0 : words_[0];
  }

  bool operator==(const VertexSet& o) const {
    return universe_ == o.universe_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Ascending-member-sequence comparison; a proper prefix sorts first.
  static bool seq_lex_less(const VertexSet& a, const VertexSet& b) {
    a.require_same_universe(b);
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      if (a.words_[i] == b.words_[i]) continue;
      const int m = std::countr_zero(a.words_[i] ^ b.words_[i]);
      const bool in_a = (a.words_[i] >> m) & 1u;
      const VertexSet& rest = in_a ? b : a;
      // Does `rest` contain any member at or above the first difference?
      std::uint64_t hi = rest.words_[i] & ~detail::low_mask(m);
      for (std::size_t j = i + 1; !hi && j < rest.words_.size(); ++j) hi = rest.words_[j];
      return in_a ? hi != 0 : hi == 0;
    }
    return false;
  }

 private:
  template <class F>
  VertexSet combine(const VertexSet& o, F f) const {
    require_same_universe(o);
    VertexSet r(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = f(words_[i], o.words_[i]);
    return r;
  }

  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= detail::low_mask(universe_ % 64);
  }

  static int check_universe(int universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    return universe;
  }

  void check_member(int v) const {
    if (v < 0 || v >= universe_)
      throw std::invalid_argument("VertexSet: vertex " + std::to_string(v) +
                                  " outside universe of size " + std::to_string(universe_));
  }

  void require_same_universe(const VertexSet& o) const {
    if (universe_ != o.universe_)
      throw std::invalid_argument("VertexSet: universe mismatch");
  }

  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

namespace detail {

// Visits every subset of {lo,...,hi-1} that contains `first` and whose size
// lies in [min_size, max_size], in ascending-member-sequence lexicographic
// order. The visitor receives the members in ascending order and returns
// true to stop the scan.
template <class Visitor>
bool for_each_lex_subset_from(std::vector<int>& acc, int next, int hi, int min_size,
                              int max_size, Visitor&& visit) {
  const int sz = static_cast<int>(acc.size());
  if (sz >= min_size && sz <= max_size)
    if (visit(acc)) return true;
  if (sz == max_size) return false;
  for (int v = next; v < hi; ++v) {
    acc.push_back(v);
    if (for_each_lex_subset_from(acc, v + 1, hi, min_size, max_size, visit)) return true;
    acc.pop_back();
  }
  return false;
}

template <class Visitor>
bool for_each_lex_subset_containing(int first, int hi, int min_size, int max_size,
                                    Visitor&& visit) {
  std::vector<int> acc{first};
  return for_each_lex_subset_from(acc, first + 1, hi, min_size, max_size, visit);
}

}  // namespace detail

}  // namespace switchsep
