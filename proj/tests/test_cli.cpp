#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "switchsep/cli.hpp"

using namespace switchsep;

namespace {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
  OrderedJson json() const { return OrderedJson::parse(out); }
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = {}) {
  std::vector<const char*> argv;
  argv.push_back("switchsep");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  std::istringstream in(input);
  CliResult r;
  r.exit_code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, in);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string g6(const Graph& g) { return to_graph6(g); }

OrderedJson strip_timing(OrderedJson j) {
  j.erase("timing");
  return j;
}

}  // namespace

TEST_CASE("check reports non-separable graphs with status ok", "[cli]") {
  const auto r = run_cli({"check", g6(Graph::cycle(5))});
  CHECK(r.exit_code == 0);
  const auto j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["separable"] == false);
  CHECK(j["payload"]["order"] == 5);
  CHECK_FALSE(j["payload"].contains("witness"));
}

TEST_CASE("check emits a replayable witness", "[cli]") {
  const auto r = run_cli({"check", g6(Graph::path(4))});
  REQUIRE(r.exit_code == 0);
  const auto j = r.json();
  REQUIRE(j["payload"]["separable"] == true);
  const auto part = j["payload"]["witness"]["part"].get<std::vector<int>>();
  const auto uset = j["payload"]["witness"]["switching_set"].get<std::vector<int>>();

  const Graph h = switched(Graph::path(4), VertexSet::of(4, uset));
  const VertexSet w = VertexSet::of(4, part);
  for (int a : w.members())
    for (int c : w.complement().members()) CHECK_FALSE(h.adjacent(a, c));
}

TEST_CASE("check rejects orders below four", "[cli]") {
  const auto r = run_cli({"check", g6(Graph::complete(3))});
  CHECK(r.exit_code == 2);
  const auto j = r.json();
  CHECK(j["status"] == "error");
  const std::string msg = j["payload"]["message"];
  CHECK(msg.find("order >= 4") != std::string::npos);
}

TEST_CASE("check reads edge lists on request", "[cli]") {
  const std::string path = "cli_edges_test.txt";
  {
    std::ofstream f(path);
    f << "0 1\n1 2\n2 3\n";
  }
  const auto r = run_cli({"check", "--edges", path});
  CHECK(r.exit_code == 0);
  CHECK(r.json()["payload"]["separable"] == true);
  std::remove(path.c_str());
}

TEST_CASE("batch mode emits one report per line", "[cli]") {
  const std::string input = g6(Graph::cycle(5)) + "\n" + g6(Graph::path(4)) + "\n";
  const auto r = run_cli({"check", "-"}, input);
  CHECK(r.exit_code == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<bool> separable;
  while (std::getline(lines, line)) {
    const auto j = OrderedJson::parse(line);
    CHECK(j["status"] == "ok");
    separable.push_back(j["payload"]["separable"].get<bool>());
  }
  CHECK(separable == std::vector<bool>{false, true});
}

TEST_CASE("isolable and switch round-trip through graph6", "[cli]") {
  const auto iso = run_cli({"isolable", g6(Graph::path(4)), "--set", "0,3"});
  CHECK(iso.exit_code == 0);
  CHECK(iso.json()["payload"]["isolable"] == true);
  CHECK(iso.json()["payload"]["switching_set"].get<std::vector<int>>() ==
        std::vector<int>{1, 3});

  const auto sw = run_cli({"switch", g6(Graph::path(4)), "--set", "1,3"});
  CHECK(sw.exit_code == 0);
  const std::string switched_g6 = sw.json()["payload"]["graph6"];
  const auto back = run_cli({"switch", switched_g6, "--set", "1,3"});
  CHECK(back.json()["payload"]["graph6"] == g6(Graph::path(4)));
}

TEST_CASE("gn generation and verification", "[cli]") {
  const auto gen = run_cli({"gen", "gn", "13"});
  CHECK(gen.exit_code == 0);
  CHECK(gen.json()["payload"]["m"] == 3);
  CHECK(gen.json()["payload"]["graph6"] == g6(circulant_gn(13)));

  const auto bad = run_cli({"gen", "gn", "6"});
  CHECK(bad.exit_code == 2);

  const auto ver = run_cli({"verify", "gn", "9"});
  CHECK(ver.exit_code == 0);
  CHECK(ver.json()["payload"]["all_ok"] == true);
  CHECK(ver.json()["payload"]["gn_nonseparable"] == true);
}

TEST_CASE("theorem1 scan over order 6", "[cli]") {
  const auto r = run_cli({"verify", "theorem1", "--order", "6"});
  CHECK(r.exit_code == 0);
  const auto j = r.json();
  CHECK(j["status"] == "ok");
  CHECK(j["payload"]["classes_scanned"] == 1024);
  CHECK(j["payload"]["counterexamples"].empty());
  CHECK(j["timing"].contains("worker_count"));
}

TEST_CASE("reports are byte-stable apart from timing", "[cli]") {
  const auto a = run_cli({"verify", "theorem1", "--order", "6"});
  const auto b = run_cli({"verify", "theorem1", "--order", "6"});
  CHECK(strip_timing(a.json()) == strip_timing(b.json()));

  const auto c = run_cli({"check", g6(circulant_gn(9))});
  const auto d = run_cli({"check", g6(circulant_gn(9))});
  CHECK(strip_timing(c.json()) == strip_timing(d.json()));
}

TEST_CASE("worker count never changes the payload", "[cli]") {
  const auto a = run_cli({"verify", "theorem1", "--order", "7", "--jobs", "1"});
  const auto b = run_cli({"verify", "theorem1", "--order", "7", "--jobs", "3"});
  CHECK(a.json()["payload"] == b.json()["payload"]);

  const auto c = run_cli({"search", "conjecture", "--order", "6", "--jobs", "2"});
  CHECK(c.exit_code == 0);
  CHECK(c.json()["payload"]["counterexamples"].empty());
}

TEST_CASE("the jobs default comes from the environment", "[cli]") {
  setenv(cli::kJobsEnvVar, "2", 1);
  const auto r = run_cli({"verify", "theorem1", "--order", "6"});
  unsetenv(cli::kJobsEnvVar);
  CHECK(r.exit_code == 0);
  CHECK(r.json()["timing"]["worker_count"] == 2);
  CHECK(r.json()["payload"]["classes_scanned"] == 1024);
}

TEST_CASE("odd conjecture orders point at the circulant family", "[cli]") {
  const auto r = run_cli({"search", "conjecture", "--order", "7"});
  CHECK(r.exit_code == 2);
  const std::string msg = r.json()["payload"]["message"];
  CHECK(msg.find("gen gn") != std::string::npos);
}

TEST_CASE("boolean bridge subcommands", "[cli]") {
  const auto fg = run_cli({"bool", "from-graph", g6(Graph::path(4))});
  CHECK(fg.exit_code == 0);
  CHECK(fg.json()["payload"]["polynomial"] == "x0*x1 + x1*x2 + x2*x3");
  const std::string hex = fg.json()["payload"]["table_hex"];

  const auto sep = run_cli({"bool", "separable", hex, "--arity", "4"});
  CHECK(sep.exit_code == 0);
  CHECK(sep.json()["payload"]["separable"] == true);

  const auto with_linear =
      run_cli({"bool", "from-graph", g6(Graph::path(4)), "--linear", "x0 + 1"});
  CHECK(with_linear.json()["payload"]["polynomial"] == "x0*x1 + x0 + x1*x2 + x2*x3 + 1");

  const auto bad_hex = run_cli({"bool", "separable", "zz", "--arity", "4"});
  CHECK(bad_hex.exit_code == 2);
}

TEST_CASE("quasigroup bridge subcommands", "[cli]") {
  // the pentagon function: a 4-ary order-4 table that does not split
  const auto fg = run_cli({"bool", "from-graph", g6(Graph::cycle(5))});
  const std::string hex = fg.json()["payload"]["table_hex"];

  const auto qt = run_cli({"qg", "from-bool", hex, "--arity", "5"});
  CHECK(qt.exit_code == 0);
  CHECK(qt.json()["payload"]["order"] == 4);
  CHECK(qt.json()["payload"]["arity"] == 4);

  const std::string path = "cli_table_test.json";
  {
    std::ofstream f(path);
    f << qt.json()["payload"].dump();
  }

  const auto red = run_cli({"qg", "reducible", path});
  CHECK(red.exit_code == 0);
  CHECK(red.json()["payload"]["reducible"] == false);

  const auto kp = run_cli({"qg", "kappa", path});
  CHECK(kp.exit_code == 0);
  CHECK(kp.json()["payload"]["kappa"] == 2);
  std::remove(path.c_str());

  // the same table through stdin, and a reducible example
  const auto sum = table_to_json(QuasigroupTable::iterated_sum_mod(4, 3));
  const auto red2 = run_cli({"qg", "reducible", "-"}, sum.dump());
  CHECK(red2.exit_code == 0);
  CHECK(red2.json()["payload"]["reducible"] == true);
  CHECK(red2.json()["payload"]["inner_args"].get<std::vector<int>>() == std::vector<int>{0, 1});
}

TEST_CASE("status strings map onto the documented exit codes", "[cli]") {
  CHECK(cli::detail::exit_code_for("ok") == 0);
  CHECK(cli::detail::exit_code_for("counterexample") == 1);
  CHECK(cli::detail::exit_code_for("error") == 2);
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  const auto r = run_cli({"frobnicate"});
  CHECK(r.exit_code == 2);
  CHECK(r.json()["status"] == "error");

  const auto missing = run_cli({"isolable", g6(Graph::path(4))});
  CHECK(missing.exit_code == 2);

  const auto bad_table = run_cli({"qg", "reducible", "-"}, "{not json");
  CHECK(bad_table.exit_code == 2);
}
