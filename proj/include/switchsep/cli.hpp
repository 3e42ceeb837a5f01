// cli.hpp -- the switchsep command-line frontend.
//
// Every invocation writes one JSON report (insertion-ordered keys, stable
// bytes apart from the timing block). Exit codes: 0 ok, 1 a scan or
// verification found a counterexample, 2 usage or input error.

#pragma once

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "switchsep/graph6.hpp"
#include "switchsep/report_json.hpp"

namespace switchsep::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kFormatVersion = 1;
inline constexpr const char* kJobsEnvVar = "SWITCHSEP_JOBS";

namespace detail {

struct Outcome {
  std::string status = "ok";  // ok | counterexample | error
  OrderedJson payload = OrderedJson::object();
  OrderedJson timing_extra = OrderedJson::object();
};

inline int exit_code_for(const std::string& status) {
  if (status == "ok") return 0;
  if (status == "counterexample") return 1;
  return 2;
}

inline VertexSet parse_vertex_list(const std::string& text, int universe) {
  VertexSet s(universe);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw parse_error("vertex list: empty entry", 0);
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    if (used != item.size()) throw parse_error("vertex list: bad vertex label", 0);
    s.add(v);
  }
  return s;
}

inline int default_jobs() {
  if (const char* env = std::getenv(kJobsEnvVar)) {
    const int j = std::atoi(env);
    if (j >= 1) return j;
  }
  return 1;
}

inline std::string read_file_or_stdin(const std::string& path, std::istream& in) {
  if (path == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

inline OrderedJson check_payload(const Graph& g) {
  OrderedJson payload{{"order", g.order()}};
  const auto witness = is_separable(g);
  payload["separable"] = witness.has_value();
  if (witness) payload["witness"] = witness_to_json(*witness);
  return payload;
}

}  // namespace detail

// Runs one CLI invocation; the report goes to `out`, diagnostics to `err`,
// and "-" inputs are read from `in`.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr, std::istream& in = std::cin) {
  CLI::App app{"switching separability toolkit"};
  app.require_subcommand(1);

  std::string arg_graph, arg_set, arg_linear, arg_hex, arg_table, arg_edges, arg_resume,
      arg_dump;
  int arg_n = 0, arg_order = 0, arg_arity = 0;
  int arg_jobs = detail::default_jobs();

  auto* cmd_check = app.add_subcommand("check", "decide switching separability (graph6 or '-' for one graph per stdin line)");
  cmd_check->add_option("graph", arg_graph, "graph6 string or '-'");
  cmd_check->add_option("--edges", arg_edges, "read the graph from an edge-list file instead");

  auto* cmd_isolable = app.add_subcommand("isolable", "test whether a vertex set is isolable");
  cmd_isolable->add_option("graph", arg_graph, "graph6 string")->required();
  cmd_isolable->add_option("--set", arg_set, "comma-separated vertex list")->required();

  auto* cmd_switch = app.add_subcommand("switch", "apply a switching and print the resulting graph6");
  cmd_switch->add_option("graph", arg_graph, "graph6 string")->required();
  cmd_switch->add_option("--set", arg_set, "comma-separated vertex list")->required();

  auto* cmd_gen = app.add_subcommand("gen", "generators");
  auto* cmd_gen_gn = cmd_gen->add_subcommand("gn", "odd-order circulant family");
  cmd_gen_gn->add_option("n", arg_n, "odd order >= 5")->required();

  auto* cmd_verify = app.add_subcommand("verify", "verification scans");
  auto* cmd_verify_gn = cmd_verify->add_subcommand("gn", "full deletion report for the circulant family");
  cmd_verify_gn->add_option("n", arg_n, "odd order >= 5")->required();
  auto* cmd_verify_t1 = cmd_verify->add_subcommand(
      "theorem1", "scan all switching classes for non-separable graphs whose one- and two-vertex deletions are all separable");
  cmd_verify_t1->add_option("--order", arg_order, "graph order (6..9)")->required();
  cmd_verify_t1->add_option("--jobs", arg_jobs, "worker threads");
  cmd_verify_t1->add_option("--resume", arg_resume, "checkpoint file for resumable runs");
  cmd_verify_t1->add_option("--dump-nonseparable", arg_dump,
                            "write every non-separable representative to this file as graph6");

  auto* cmd_search = app.add_subcommand("search", "exhaustive searches");
  auto* cmd_search_conj = cmd_search->add_subcommand(
      "conjecture", "scan even orders for non-separable graphs whose one-vertex deletions are all separable");
  cmd_search_conj->add_option("--order", arg_order, "even graph order (6 or 8; 10 accepted)")->required();
  cmd_search_conj->add_option("--jobs", arg_jobs, "worker threads");
  cmd_search_conj->add_option("--dump-nonseparable", arg_dump,
                              "write every non-separable representative to this file as graph6");

  auto* cmd_bool = app.add_subcommand("bool", "extended Boolean function bridge");
  auto* cmd_bool_fg = cmd_bool->add_subcommand("from-graph", "quadratic polynomial and table of a graph");
  cmd_bool_fg->add_option("graph", arg_graph, "graph6 string")->required();
  cmd_bool_fg->add_option("--linear", arg_linear, "linear part, e.g. 'x0 + x2 + 1'");
  auto* cmd_bool_sep = cmd_bool->add_subcommand("separable", "additive decomposability of a table");
  cmd_bool_sep->add_option("table", arg_hex, "hex table, low index = least-significant bit")->required();
  cmd_bool_sep->add_option("--arity", arg_arity, "number of arguments")->required();

  auto* cmd_qg = app.add_subcommand("qg", "n-ary quasigroup bridge");
  auto* cmd_qg_fb = cmd_qg->add_subcommand("from-bool", "order-4 quasigroup of an extended Boolean function");
  cmd_qg_fb->add_option("table", arg_hex, "hex table of the function")->required();
  cmd_qg_fb->add_option("--arity", arg_arity, "number of function arguments")->required();
  auto* cmd_qg_red = cmd_qg->add_subcommand("reducible", "decompose as a repetition-free composition");
  cmd_qg_red->add_option("table", arg_table, "table JSON file ('-' for stdin)")->required();
  auto* cmd_qg_kappa = cmd_qg->add_subcommand("kappa", "largest arity of an irreducible proper retract");
  cmd_qg_kappa->add_option("table", arg_table, "table JSON file ('-' for stdin)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    OrderedJson report{{"command", ""},
                       {"status", "error"},
                       {"payload", OrderedJson{{"message", e.what()}}},
                       {"version", OrderedJson{{"name", "switchsep"}, {"version", kVersion}, {"format", kFormatVersion}}}};
    out << report.dump(2) << '\n';
    return 2;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) {
    if (i > 1) command += ' ';
    command += argv[i];
  }

  const auto t0 = std::chrono::steady_clock::now();

  // Batch mode: one compact report per input line.
  if (cmd_check->parsed() && arg_graph == "-" && arg_edges.empty()) {
    std::string line;
    bool any_error = false;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      OrderedJson report{{"command", command}};
      try {
        report["status"] = "ok";
        report["payload"] = detail::check_payload(from_graph6(line));
      } catch (const std::exception& e) {
        report["status"] = "error";
        report["payload"] = OrderedJson{{"message", e.what()}};
        any_error = true;
      }
      out << report.dump() << '\n';
    }
    return any_error ? 2 : 0;
  }

  detail::Outcome outcome;
  try {
    if (cmd_check->parsed()) {
      if (arg_graph.empty() == arg_edges.empty())
        throw std::invalid_argument("check: give exactly one of <graph6> or --edges FILE");
      const Graph g = arg_edges.empty()
                          ? from_graph6(arg_graph)
                          : parse_edge_list(detail::read_file_or_stdin(arg_edges, in));
      outcome.payload = detail::check_payload(g);
    } else if (cmd_isolable->parsed()) {
      const Graph g = from_graph6(arg_graph);
      const VertexSet w = detail::parse_vertex_list(arg_set, g.order());
      const bool ok = is_isolable(g, w);
      outcome.payload = OrderedJson{{"order", g.order()}, {"set", w.members()}, {"isolable", ok}};
      if (ok) outcome.payload["switching_set"] = isolating_switching(g, w).members();
    } else if (cmd_switch->parsed()) {
      const Graph g = from_graph6(arg_graph);
      const VertexSet u = detail::parse_vertex_list(arg_set, g.order());
      outcome.payload = OrderedJson{{"order", g.order()}, {"graph6", to_graph6(switched(g, u))}};
    } else if (cmd_gen_gn->parsed()) {
      const CirculantSpec spec = CirculantSpec::for_order(arg_n);
      outcome.payload = OrderedJson{{"n", spec.n},
                                    {"m", spec.m},
                                    {"width", spec.width},
                                    {"graph6", to_graph6(circulant_gn(arg_n))}};
    } else if (cmd_verify_gn->parsed()) {
      const GnReport report = verify_gn(arg_n);
      outcome.payload = gn_payload(report);
      if (!report.all_ok()) outcome.status = "counterexample";
    } else if (cmd_verify_t1->parsed()) {
      const SearchReport report = verify_theorem1(arg_order, arg_jobs, arg_resume, arg_dump);
      outcome.payload = search_payload(report);
      if (!arg_dump.empty()) outcome.payload["nonseparable_dump"] = arg_dump;
      outcome.timing_extra = OrderedJson{{"worker_count", report.worker_count}};
      if (!report.counterexamples.empty()) outcome.status = "counterexample";
    } else if (cmd_search_conj->parsed()) {
      if (arg_order == 10)
        err << "note: order 10 scans 2^36 classes; expect a long run\n";
      const SearchReport report = search_conjecture(arg_order, arg_jobs, arg_dump);
      outcome.payload = search_payload(report);
      if (!arg_dump.empty()) outcome.payload["nonseparable_dump"] = arg_dump;
      outcome.timing_extra = OrderedJson{{"worker_count", report.worker_count}};
      if (!report.counterexamples.empty()) outcome.status = "counterexample";
    } else if (cmd_bool_fg->parsed()) {
      const Graph g = from_graph6(arg_graph);
      const Gf2Poly linear = arg_linear.empty() ? Gf2Poly::zero(g.order())
                                                : Gf2Poly::parse(arg_linear, g.order());
      const Gf2Poly p = graph_to_polynomial(g, linear);
      const ExtendedBooleanFunction f = ebf_from_polynomial(p);
      outcome.payload = OrderedJson{{"arity", p.arity()},
                                    {"polynomial", p.to_string()},
                                    {"table_hex", f.to_hex()}};
    } else if (cmd_bool_sep->parsed()) {
      const auto f = ExtendedBooleanFunction::from_hex(arg_hex, arg_arity);
      const auto bp = ebf_is_separable(f);
      outcome.payload = OrderedJson{{"arity", arg_arity}, {"separable", bp.has_value()}};
      if (bp) {
        outcome.payload["y"] = bp->y.members();
        outcome.payload["z"] = bp->z.members();
      }
    } else if (cmd_qg_fb->parsed()) {
      const auto f = ExtendedBooleanFunction::from_hex(arg_hex, arg_arity);
      outcome.payload = table_to_json(q_lambda(f));
    } else if (cmd_qg_red->parsed()) {
      const auto j = OrderedJson::parse(detail::read_file_or_stdin(arg_table, in));
      const QuasigroupTable t = table_from_json(j);
      const auto red = is_reducible(t);
      outcome.payload = OrderedJson{{"order", t.order()}, {"arity", t.arity()},
                                    {"reducible", red.has_value()}};
      if (red) {
        outcome.payload["inner_args"] = red->inner_args;
        outcome.payload["inner"] = table_to_json(red->inner);
        outcome.payload["outer"] = table_to_json(red->outer);
      }
    } else if (cmd_qg_kappa->parsed()) {
      const auto j = OrderedJson::parse(detail::read_file_or_stdin(arg_table, in));
      const QuasigroupTable t = table_from_json(j);
      outcome.payload = OrderedJson{{"order", t.order()}, {"arity", t.arity()},
                                    {"kappa", kappa(t)}};
    }
  } catch (const OrderedJson::parse_error& e) {
    outcome.status = "error";
    outcome.payload = OrderedJson{{"message", std::string("table json: ") + e.what()}};
  } catch (const std::exception& e) {
    outcome.status = "error";
    outcome.payload = OrderedJson{{"message", e.what()}};
  }

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  OrderedJson timing{{"wall_time_seconds", seconds}};
  for (auto& [k, v] : outcome.timing_extra.items()) timing[k] = v;

  OrderedJson report{{"command", command},
                     {"status", outcome.status},
                     {"payload", outcome.payload},
                     {"version", OrderedJson{{"name", "switchsep"},
                                             {"version", kVersion},
                                             {"format", kFormatVersion}}},
                     {"timing", timing}};
  out << report.dump(2) << '\n';
  return detail::exit_code_for(outcome.status);
}

}  // namespace switchsep::cli
