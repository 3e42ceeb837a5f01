// graph6.hpp -- bit-exact graph6 text codec plus an edge-list reader.
//
// graph6 packs the upper adjacency triangle column by column (x01, x02,
// x12, x03, ...) into 6-bit groups, most significant bit first, each
// group offset by 63 into the printable range. Orders above 62 use the
// extended '~' headers.

#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "switchsep/graph.hpp"

namespace switchsep {

namespace detail {

// Orders beyond this are treated as malformed input rather than an
// invitation to allocate gigabytes.
inline constexpr long long kMaxGraph6Order = 1 << 20;

inline int graph6_byte(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw parse_error("graph6: truncated input", i);
  const unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw parse_error("graph6: byte outside 63..126", i);
  return c - 63;
}

}  // namespace detail

inline std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int group = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      group = (group << 1) | static_cast<int>(g.adjacent(i, j));
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + 63));
        group = 0;
        filled = 0;
      }
    }
  if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
  return out;
}

inline Graph from_graph6(std::string_view s) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw parse_error("graph6: empty input", 0);

  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(s[0]) == 126) {
    if (s.size() >= 2 && static_cast<unsigned char>(s[1]) == 126) {
      pos = 2;
      for (int k = 0; k < 6; ++k) n = (n << 6) | detail::graph6_byte(s, pos++);
    } else {
      pos = 1;
      for (int k = 0; k < 3; ++k) n = (n << 6) | detail::graph6_byte(s, pos++);
      if (n < 63) throw parse_error("graph6: non-canonical extended header", 1);
    }
  } else {
    n = detail::graph6_byte(s, pos++);
  }
  if (n > detail::kMaxGraph6Order)
    throw parse_error("graph6: order too large", 0);

  Graph g(static_cast<int>(n));
  const long long tri_bits = n * (n - 1) / 2;
  const std::size_t expect = pos + static_cast<std::size_t>((tri_bits + 5) / 6);
  if (s.size() > expect) throw parse_error("graph6: trailing bytes", expect);

  int group = 0;
  int avail = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (avail == 0) {
        group = detail::graph6_byte(s, pos++);
        avail = 6;
      }
      if ((group >> (avail - 1)) & 1) g.add_edge(i, j);
      --avail;
    }
  return g;
}

// Plain text edge list: one "u v" pair per line, 0-based labels. An
// optional first line holding a single integer fixes the order; otherwise
// the order is one past the largest label seen. Blank lines and lines
// starting with '#' are skipped.
inline Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<int, int>> edges;
  long long declared = -1;
  long long max_label = -1;
  std::size_t consumed = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    const std::size_t line_start = consumed;
    consumed += line.size() + 1;
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) {
      std::string word;
      std::istringstream probe(line);
      if (probe >> word && word[0] != '#')
        throw parse_error("edge list: unreadable line", line_start);
      continue;  // blank or comment
    }
    if (!(ls >> v)) {
      if (first_content && u >= 0) {
        declared = u;
        first_content = false;
        continue;
      }
      throw parse_error("edge list: expected two labels per line", line_start);
    }
    first_content = false;
    if (u < 0 || v < 0) throw parse_error("edge list: negative label", line_start);
    if (u == v) throw parse_error("edge list: loop rejected", line_start);
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_label = std::max({max_label, u, v});
  }
  const long long order = std::max(declared, max_label + 1);
  if (order < 0) return Graph(0);
  if (order > detail::kMaxGraph6Order) throw parse_error("edge list: order too large", 0);
  if (declared >= 0 && max_label >= declared)
    throw parse_error("edge list: label exceeds declared order", 0);
  Graph g(static_cast<int>(order));
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

}  // namespace switchsep
