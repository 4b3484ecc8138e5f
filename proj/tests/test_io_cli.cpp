#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgt/graph_io.hpp"
#include "sgt/group.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/verify.hpp"

using namespace sgt;
namespace fs = std::filesystem;

namespace {

SignedGraph handcuff() { return {2, {{0, 1, +1}, {0, 0, -1}, {1, 1, -1}}}; }

bool graphs_equal(const SignedGraph& a, const SignedGraph& b) {
  if (a.vertex_count != b.vertex_count || a.edges.size() != b.edges.size()) return false;
  for (std::size_t i = 0; i < a.edges.size(); ++i)
    if (a.edges[i].u != b.edges[i].u || a.edges[i].v != b.edges[i].v ||
        a.edges[i].sign != b.edges[i].sign)
      return false;
  return true;
}

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

// Scratch directory for files the tests and the command-line binary exchange.
struct ScratchDir {
  fs::path path;
  ScratchDir() {
    path = fs::temp_directory_path() / ("sgt_io_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~ScratchDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = path / name;
    std::ofstream out(p);
    out << content;
    return p.string();
  }
};

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout and stderr combined
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(SGTUTTE_CLI_PATH) + " " + args + " 2>&1";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[512];
  while (fgets(buffer, sizeof buffer, pipe)) result.output += buffer;
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("graph text round-trips through render and parse") {
  for (const auto& g : signed_graph_battery(2, 3)) {
    CHECK(graphs_equal(parse_signed_graph_text(signed_graph_to_text(g)), g));
    CHECK(graphs_equal(parse_signed_graph_json(signed_graph_to_json(g)), g));
  }
}

TEST_CASE("graph text accepts comments, semicolons and numeric signs") {
  const auto g = parse_signed_graph_text(
      "# a handcuff\n"
      "v 2\n"
      "e 0 1 +1; e 0 0 -1   # two statements on one line\n"
      "e 1 1 -\n");
  CHECK(graphs_equal(g, handcuff()));
  CHECK(graphs_equal(parse_signed_graph_text("v 2; e 0 1 1"), SignedGraph{2, {{0, 1, +1}}}));
  CHECK(parse_signed_graph_text("v 0").vertex_count == 0);
  CHECK(parse_signed_graph_text("v 3 # no edges").edges.empty());
}

TEST_CASE("graph text parse errors carry line numbers") {
  CHECK(throws_mentioning([] { parse_signed_graph_text("v 2\nv 3"); }, "line 2: duplicate"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("e 0 1 +"); },
                          "line 1: edge before the 'v <count>' line"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("v 2\ne 0 2 +"); },
                          "line 2: vertex 2 outside 0..1"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("v 2\ne 0 1 *"); }, "bad sign '*'"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("v 2\n\nw 1"); },
                          "line 3: unknown directive 'w'"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("v 2\ne 0 1"); },
                          "expected 'e <u> <v> <+|->'"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("v -1"); }, "bad vertex count"));
  CHECK(throws_mentioning([] { parse_signed_graph_text("# empty\n"); }, "'v <count>' line"));
}

TEST_CASE("graph JSON parse errors name the offending field") {
  CHECK(throws_mentioning([] { parse_signed_graph_json("{"); }, "bad graph JSON"));
  CHECK(throws_mentioning([] { parse_signed_graph_json("[1,2]"); }, "'vertices'"));
  CHECK(throws_mentioning([] { parse_signed_graph_json(R"({"vertices": -2})"); }, "negative"));
  CHECK(throws_mentioning(
      [] { parse_signed_graph_json(R"({"vertices": 2, "edges": [{"u":0,"v":1}]})"); },
      "'sign'"));
  CHECK(throws_mentioning(
      [] { parse_signed_graph_json(R"({"vertices": 2, "edges": [{"u":0,"v":9,"sign":1}]})"); },
      "outside 0..1"));
  CHECK(throws_mentioning(
      [] { parse_signed_graph_json(R"({"vertices": 2, "edges": [{"u":0,"v":1,"sign":3}]})"); },
      "sign must be 1 or -1"));
  // An edge list is optional.
  CHECK(parse_signed_graph_json(R"({"vertices": 4})").vertex_count == 4);
}

TEST_CASE("graph files load with format sniffing and save by extension") {
  const ScratchDir dir;
  const auto text_path = dir.file("g.txt", signed_graph_to_text(handcuff()));
  const auto json_path = dir.file("g.json", signed_graph_to_json(handcuff()));
  CHECK(graphs_equal(load_signed_graph(text_path), handcuff()));
  CHECK(graphs_equal(load_signed_graph(json_path), handcuff()));
  CHECK(throws_mentioning([&] { load_signed_graph((dir.path / "missing.txt").string()); },
                          "cannot open"));

  const auto out_text = (dir.path / "saved.txt").string();
  const auto out_json = (dir.path / "saved.json").string();
  save_signed_graph(out_text, handcuff());
  save_signed_graph(out_json, handcuff());
  CHECK(graphs_equal(load_signed_graph(out_text), handcuff()));
  CHECK(graphs_equal(load_signed_graph(out_json), handcuff()));
  std::ifstream sniff(out_json);
  std::string first;
  sniff >> first;
  CHECK(first == "{");  // extension picked the JSON writer
}

TEST_CASE("battery checks pass on a small battery and report deterministically") {
  const auto graphs = signed_graph_battery(1, 2);
  const std::vector<FiniteAbelianGroup> groups{FiniteAbelianGroup::parse("Z2"),
                                               FiniteAbelianGroup::parse("Z4")};
  int seen = 0;
  const auto report = run_battery_checks(graphs, groups, 1,
                                         [&](const CheckResult&) { ++seen; });
  CHECK(report.failed == 0);
  CHECK(report.skipped == 0);
  CHECK(report.passed > 0);
  CHECK(seen == report.passed);
  CHECK(report.results.size() == static_cast<std::size_t>(report.passed));
  CHECK(report.failures().empty());
  // The same run fanned out over threads yields the same result sequence.
  const auto threaded = run_battery_checks(graphs, groups, 3);
  REQUIRE(threaded.results.size() == report.results.size());
  for (std::size_t i = 0; i < report.results.size(); ++i) {
    CHECK(threaded.results[i].check == report.results[i].check);
    CHECK(threaded.results[i].subject == report.results[i].subject);
  }

  std::ostringstream json_out;
  write_report_json(json_out, report);
  const auto doc = nlohmann::json::parse(json_out.str());
  CHECK(doc["failed"] == 0);
  CHECK(doc["skipped"] == 0);
  CHECK(doc["passed"] == report.passed);
  CHECK(doc["total"] == report.passed);
  CHECK(doc["failures"].empty());
  CHECK(doc["checks"].contains("flow-counts"));
  CHECK(doc["checks"]["tension-census"]["failed"] == 0);
}

TEST_CASE("battery checks over budget are skipped, not dropped") {
  setenv("SGTUTTE_ENUM_BUDGET", "10", 1);
  const auto report = run_battery_checks(signed_graph_battery(1, 3),
                                         {FiniteAbelianGroup::parse("Z6")}, 1);
  unsetenv("SGTUTTE_ENUM_BUDGET");
  CHECK(report.failed == 0);
  CHECK(report.skipped > 0);
  for (const auto& r : report.results)
    if (r.skipped) CHECK(contains(r.detail, "SGTUTTE_ENUM_BUDGET"));

  std::ostringstream json_out;
  write_report_json(json_out, report);
  const auto doc = nlohmann::json::parse(json_out.str());
  CHECK(doc["skipped"] == report.skipped);
  CHECK(doc["skips"].size() == static_cast<std::size_t>(report.skipped));
}

TEST_CASE("cli prints polynomials by both methods") {
  const auto both = run_cli("poly --graph \"v 2; e 0 1 +; e 0 0 -; e 1 1 -\"");
  CHECK(both.exit_code == 0);
  CHECK(both.output == "X*Z^2 + Y*Z - Z^2 - Y + Z\n");
  const auto subset = run_cli("poly --method subset --graph \"v 2; e 0 1 +; e 0 0 -; e 1 1 -\"");
  const auto dc = run_cli("poly --method dc --seed 5 --graph \"v 2; e 0 1 +; e 0 0 -; e 1 1 -\"");
  CHECK(subset.output == both.output);
  CHECK(dc.output == both.output);

  const auto json = run_cli("poly --json --graph \"v 1; e 0 0 -\"");
  CHECK(json.exit_code == 0);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["rendered"] == "Z");
  CHECK(doc["terms"].size() == 1);
  CHECK(doc["terms"][0]["coefficient"] == "1");
  CHECK(doc["terms"][0]["z"] == 1);
}

TEST_CASE("cli reads graphs from files and standard input") {
  const ScratchDir dir;
  const auto path = dir.file("hc.txt", signed_graph_to_text(handcuff()));
  const auto from_file = run_cli("poly " + path);
  CHECK(from_file.exit_code == 0);
  CHECK(from_file.output == "X*Z^2 + Y*Z - Z^2 - Y + Z\n");
  const auto from_stdin = run_cli("poly - < " + path);
  CHECK(from_stdin.output == from_file.output);
}

TEST_CASE("cli evaluates at exact rational points") {
  const auto r = run_cli("eval --graph \"v 2; e 0 1 +; e 0 0 -; e 1 1 -\" --at 0 -2 0");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "2\n");
  const auto half = run_cli("eval --graph \"v 1; e 0 0 -\" --at 0 0 1/2");
  CHECK(half.output == "1/2\n");
  const auto bad = run_cli("eval --graph \"v 1\" --at 1 2 x");
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.output, "bad rational 'x'"));
}

TEST_CASE("cli counts agree with their brute-force cross-checks") {
  const std::string hc = " --graph \"v 2; e 0 1 +; e 0 0 -; e 1 1 -\"";
  for (const std::string& args :
       {"count --what flows --group Z3 --brute" + hc,
        "count --what flows --group Z4 --all --brute" + hc,
        "count --what colorings --group Z2xZ2 --brute" + hc,
        "count --what tensions --group Z2 --brute" + hc,
        "count --what tensions --group Z4 --all --brute" + hc,
        "count --what potential-differences --group Z4 --brute" + hc,
        "count --what colorings --range 2 --brute" + hc,
        "count --what colorings --range 2 --zero-free --brute" + hc,
        std::string("count --what tensions --group Z4 --off-coset --brute") +
            " --graph \"v 1; e 0 0 -\""}) {
    const auto r = run_cli(args);
    CHECK(r.exit_code == 0);
    CHECK(contains(r.output, "agrees"));
  }
  const auto nz = run_cli("count --what flows --group Z3" + hc);
  CHECK(nz.output == "2\n");
  const auto json = run_cli("count --json --what tensions --group Z2 --brute" + hc);
  const auto doc = nlohmann::json::parse(json.output);
  CHECK(doc["count"] == "1");
  CHECK(doc["brute"] == "1");
  CHECK(doc["group"] == "Z2");
}

TEST_CASE("cli joint polynomial from a graph and from matroid files") {
  const auto from_graph = run_cli("joint --graph \"v 1; e 0 0 -\"");
  CHECK(from_graph.exit_code == 0);
  CHECK(from_graph.output == "Z\n");

  const ScratchDir dir;
  const auto coloop = dir.file("coloop.txt", "ground 1\nranks\n0 1\n");
  const auto pair = run_cli("joint --m1 " + coloop + " --m2 " + coloop);
  CHECK(pair.exit_code == 0);
  CHECK(pair.output == "X*Z - X\n");

  const auto only_one = run_cli("joint --m1 " + coloop);
  CHECK(only_one.exit_code == 1);
  CHECK(contains(only_one.output, "--m1 and --m2 must be given together"));
}

TEST_CASE("cli rejects a rank table that is not a matroid") {
  const ScratchDir dir;
  const auto bad = dir.file("bad.txt", "ground 2\nranks\n0 0 0 2\n");
  const auto good = dir.file("good.txt", "ground 2\nranks\n0 1 1 2\n");
  const auto r = run_cli("joint --m1 " + bad + " --m2 " + good);
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "unit increase"));
}

TEST_CASE("cli verify runs a battery and writes a report") {
  const ScratchDir dir;
  const auto report_path = (dir.path / "report.json").string();
  const auto r = run_cli("verify --max-vertices 1 --max-edges 2 --groups Z2,Z3 --json " +
                         report_path);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "failed 0"));
  std::ifstream in(report_path);
  REQUIRE(in.good());
  const auto doc = nlohmann::json::parse(in);
  CHECK(doc["failed"] == 0);
  CHECK(doc["failures"].empty());
  CHECK(doc["passed"].get<int>() > 0);
}

TEST_CASE("cli reports graph errors with their location") {
  const auto r = run_cli("poly --graph \"v 2; e 0 5 +\"");
  CHECK(r.exit_code == 1);
  CHECK(contains(r.output, "vertex 5 outside 0..1"));
  const auto missing = run_cli("poly /nonexistent/graph.txt");
  CHECK(missing.exit_code == 1);
  CHECK(contains(missing.output, "cannot open"));
  const auto no_group = run_cli("count --what flows --graph \"v 1\"");
  CHECK(no_group.exit_code == 1);
  CHECK(contains(no_group.output, "either --group or --range"));
}
