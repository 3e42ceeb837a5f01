// enumeration.hpp -- exhaustive scans over switching classes.
//
// Every switching class of labeled graphs contains exactly one graph in
// which vertex 0 is isolated (switch by N(v0) to land there; only the
// trivial switchings preserve the isolation). Those representatives are
// enumerated by a plain integer counter over the adjacency bits of
// vertices 1..n-1, first pair (1,2) most significant, so scans are
// deterministic, splittable into contiguous ranges, and resumable.
//
// Deleting a vertex commutes with switching, so a subgraph-separability
// property tested on the representative holds for its whole class.

#pragma once

#include <chrono>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "switchsep/graph6.hpp"
#include "switchsep/separability.hpp"

namespace switchsep {

inline int representative_bit_count(int order) {
  return (order - 1) * (order - 2) / 2;
}

inline std::uint64_t representative_count(int order) {
  if (order < 4 || order > 10)
    throw std::invalid_argument("switching-class stream supports orders 4..10");
  return std::uint64_t{1} << representative_bit_count(order);
}

namespace detail {

inline void representative_rows(int order, std::uint64_t counter, std::uint64_t* rows) {
  for (int i = 0; i < order; ++i) rows[i] = 0;
  const int total = representative_bit_count(order);
  int p = 0;
  for (int i = 1; i < order; ++i)
    for (int j = i + 1; j < order; ++j, ++p)
      if ((counter >> (total - 1 - p)) & 1u) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
}

}  // namespace detail

inline Graph representative_from_counter(int order, std::uint64_t counter) {
  if (counter >= representative_count(order))
    throw std::invalid_argument("representative counter out of range");
  std::uint64_t rows[16];
  detail::representative_rows(order, counter, rows);
  return Graph::from_rows(order, rows);
}

template <class Fn>
void for_each_representative(int order, Fn&& fn) {
  const std::uint64_t count = representative_count(order);
  std::uint64_t rows[16];
  for (std::uint64_t c = 0; c < count; ++c) {
    detail::representative_rows(order, c, rows);
    fn(c, Graph::from_rows(order, rows));
  }
}

struct SearchReport {
  int order = 0;
  std::uint64_t classes_scanned = 0;
  std::uint64_t nonseparable_count = 0;
  std::vector<std::string> counterexamples;  // graph6, ascending counter order
  double wall_time_seconds = 0.0;
  int worker_count = 1;
  std::string nonseparable_dump;  // file that received the graph6 dump, if any
};

namespace detail {

// Representative is non-separable and every one- and two-vertex deletion
// is separable.
inline bool deletion_stable_nonseparable_2(const std::uint64_t* rows, int n, bool& nonsep) {
  if (separable_isolated_rows(rows, n, 0)) {
    nonsep = false;
    return false;
  }
  nonsep = true;
  std::uint64_t sub[16];
  std::uint64_t sub2[16];
  for (int v = 0; v < n; ++v) {
    delete_vertex_rows(rows, n, v, sub);
    const bool sep = (v == 0) ? separable_rows(sub, n - 1)
                              : separable_isolated_rows(sub, n - 1, 0);
    if (!sep) return false;
  }
  for (int u = 0; u < n; ++u) {
    delete_vertex_rows(rows, n, u, sub);
    for (int v = u + 1; v < n; ++v) {
      delete_vertex_rows(sub, n - 1, v - 1, sub2);
      const bool sep = (u == 0) ? separable_rows(sub2, n - 2)
                                : separable_isolated_rows(sub2, n - 2, 0);
      if (!sep) return false;
    }
  }
  return true;
}

// Representative is non-separable and every one-vertex deletion is
// separable.
inline bool deletion_stable_nonseparable_1(const std::uint64_t* rows, int n, bool& nonsep) {
  if (separable_isolated_rows(rows, n, 0)) {
    nonsep = false;
    return false;
  }
  nonsep = true;
  std::uint64_t sub[16];
  for (int v = 0; v < n; ++v) {
    delete_vertex_rows(rows, n, v, sub);
    const bool sep = (v == 0) ? separable_rows(sub, n - 1)
                              : separable_isolated_rows(sub, n - 1, 0);
    if (!sep) return false;
  }
  return true;
}

struct RangeStats {
  std::uint64_t scanned = 0;
  std::uint64_t nonseparable = 0;
  std::vector<std::uint64_t> counterexamples;
  std::vector<std::uint64_t> nonseparable_list;  // filled only when dumping

  void merge(RangeStats&& o) {
    scanned += o.scanned;
    nonseparable += o.nonseparable;
    counterexamples.insert(counterexamples.end(), o.counterexamples.begin(),
                           o.counterexamples.end());
    nonseparable_list.insert(nonseparable_list.end(), o.nonseparable_list.begin(),
                             o.nonseparable_list.end());
  }
};

template <class Check>
RangeStats scan_range(int order, std::uint64_t begin, std::uint64_t end, Check check,
                      bool collect_nonseparable = false) {
  RangeStats stats;
  std::uint64_t rows[16];
  for (std::uint64_t c = begin; c < end; ++c) {
    representative_rows(order, c, rows);
    bool nonsep = false;
    if (check(rows, order, nonsep)) stats.counterexamples.push_back(c);
    if (nonsep) {
      ++stats.nonseparable;
      if (collect_nonseparable) stats.nonseparable_list.push_back(c);
    }
    ++stats.scanned;
  }
  return stats;
}

struct CheckpointState {
  int order = 0;
  std::uint64_t next_counter = 0;
  std::uint64_t nonseparable = 0;
  std::vector<std::uint64_t> counterexamples;
};

inline bool load_checkpoint(const std::string& path, CheckpointState& state) {
  std::ifstream in(path);
  if (!in) return false;
  if (!(in >> state.order >> state.next_counter >> state.nonseparable))
    throw parse_error("checkpoint: malformed header", 0);
  std::uint64_t c;
  while (in >> c) state.counterexamples.push_back(c);
  return true;
}

inline void write_checkpoint(const std::string& path, const CheckpointState& state) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("checkpoint: cannot write " + tmp);
    out << state.order << ' ' << state.next_counter << ' ' << state.nonseparable << '\n';
    for (auto c : state.counterexamples) out << c << '\n';
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("checkpoint: cannot replace " + path);
}

// Chunked, deterministically mergeable scan driver. Worker count affects
// wall time only; results are merged in counter order. A checkpoint is
// written after every finished chunk of 2^20 counters when a resume path
// is configured.
template <class Check>
SearchReport run_search(int order, int jobs, const std::string& resume_path, Check check,
                        const std::string& dump_path = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const std::uint64_t count = representative_count(order);
  if (jobs < 1) jobs = 1;
  const bool dump = !dump_path.empty();
  if (dump && !resume_path.empty())
    throw std::invalid_argument("the non-separable dump cannot be combined with --resume");

  RangeStats total;
  std::uint64_t start = 0;
  if (!resume_path.empty()) {
    CheckpointState state;
    if (load_checkpoint(resume_path, state)) {
      if (state.order != order)
        throw std::invalid_argument("checkpoint order does not match requested order");
      start = state.next_counter;
      total.scanned = state.next_counter;
      total.nonseparable = state.nonseparable;
      total.counterexamples = state.counterexamples;
    }
  }

  constexpr std::uint64_t kChunk = std::uint64_t{1} << 20;
  for (std::uint64_t base = start; base < count; base += kChunk) {
    const std::uint64_t hi = std::min(count, base + kChunk);
    if (jobs == 1 || hi - base < 2 * static_cast<std::uint64_t>(jobs)) {
      total.merge(scan_range(order, base, hi, check, dump));
    } else {
      const std::uint64_t span = hi - base;
      std::vector<RangeStats> slots(static_cast<std::size_t>(jobs));
      std::vector<std::thread> threads;
      threads.reserve(static_cast<std::size_t>(jobs));
      for (int w = 0; w < jobs; ++w) {
        const std::uint64_t lo = base + span * static_cast<std::uint64_t>(w) / static_cast<std::uint64_t>(jobs);
        const std::uint64_t up = base + span * static_cast<std::uint64_t>(w + 1) / static_cast<std::uint64_t>(jobs);
        threads.emplace_back([&, w, lo, up] { slots[static_cast<std::size_t>(w)] = scan_range(order, lo, up, check, dump); });
      }
      for (auto& t : threads) t.join();
      for (auto& s : slots) total.merge(std::move(s));
    }
    if (!resume_path.empty()) {
      CheckpointState state;
      state.order = order;
      state.next_counter = hi;
      state.nonseparable = total.nonseparable;
      state.counterexamples = total.counterexamples;
      write_checkpoint(resume_path, state);
    }
  }

  if (dump) {
    std::ofstream out(dump_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + dump_path);
    for (auto c : total.nonseparable_list)
      out << to_graph6(representative_from_counter(order, c)) << '\n';
  }

  SearchReport report;
  report.order = order;
  report.classes_scanned = total.scanned;
  report.nonseparable_count = total.nonseparable;
  report.counterexamples.reserve(total.counterexamples.size());
  for (auto c : total.counterexamples)
    report.counterexamples.push_back(to_graph6(representative_from_counter(order, c)));
  report.worker_count = jobs;
  report.nonseparable_dump = dump_path;
  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

}  // namespace detail

// Scans all switching-class representatives of the given order for graphs
// that are non-separable although all their one- and two-vertex deletions
// are separable. The expected outcome is an empty counterexample list.
inline SearchReport verify_theorem1(int order, int jobs = 1, const std::string& resume_path = {},
                                    const std::string& dump_path = {}) {
  if (order < 6 || order > 9)
    throw std::invalid_argument("verify theorem1 supports orders 6..9");
  return detail::run_search(
      order, jobs, resume_path,
      [](const std::uint64_t* rows, int n, bool& nonsep) {
        return detail::deletion_stable_nonseparable_2(rows, n, nonsep);
      },
      dump_path);
}

// Scans even orders for non-separable graphs whose one-vertex deletions
// are all separable; odd orders are rejected since the circulant family
// already provides such graphs there.
inline SearchReport search_conjecture(int order, int jobs = 1, const std::string& dump_path = {}) {
  if (order % 2 != 0)
    throw std::invalid_argument(
        "search conjecture expects an even order; odd orders have known examples (gen gn)");
  if (order < 6 || order > 10)
    throw std::invalid_argument("search conjecture supports orders 6, 8, 10");
  return detail::run_search(
      order, jobs, std::string{},
      [](const std::uint64_t* rows, int n, bool& nonsep) {
        return detail::deletion_stable_nonseparable_1(rows, n, nonsep);
      },
      dump_path);
}

}  // namespace switchsep
