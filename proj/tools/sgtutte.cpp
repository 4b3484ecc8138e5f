// sgtutte: exact Tutte polynomials of signed graphs and matroid pairs, with
// evaluation-based counting cross-checkable against brute-force enumeration.
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sgt/enumerators.hpp"
#include "sgt/graph_io.hpp"
#include "sgt/group.hpp"
#include "sgt/matroid.hpp"
#include "sgt/numbers.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/signed_tutte.hpp"
#include "sgt/tripoly.hpp"
#include "sgt/verify.hpp"

namespace {

using namespace sgt;

struct GraphInput {
  std::string file = "-";
  std::string inline_text;
};

void add_graph_options(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("file", in.file,
                  "Graph file (text or JSON; '-' reads standard input)");
  cmd->add_option("--graph", in.inline_text,
                  "Inline graph text, statements separated by ';' (e.g. \"v 2; e 0 1 +\")");
}

SignedGraph read_graph(const GraphInput& in) {
  if (!in.inline_text.empty()) return parse_signed_graph_text(in.inline_text);
  return load_signed_graph(in.file);
}

BigRat parse_rational(const std::string& text) {
  try {
    return BigRat(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad rational '" + text + "' (use forms like 7, -2, 3/4)");
  }
}

std::string big_to_string(const BigInt& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

std::string rat_to_string(const BigRat& v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

nlohmann::json poly_to_json(const TriPoly& t) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [mono, coeff] : t.terms())
    terms.push_back({{"x", mono.x}, {"y", mono.y}, {"z", mono.z},
                     {"coefficient", big_to_string(coeff)}});
  return {{"rendered", t.render()}, {"terms", terms}};
}

// Computes the polynomial by the requested method; "both" insists the subset
// expansion and deletion-contraction agree and aborts loudly when they do not.
TriPoly polynomial_by_method(const SignedGraph& g, const std::string& method, unsigned seed) {
  if (method == "subset") return signed_tutte_subset(g);
  if (method == "dc") return signed_tutte_dc(g, seed);
  const TriPoly subset = signed_tutte_subset(g);
  const TriPoly dc = signed_tutte_dc(g, seed);
  if (!(subset == dc)) {
    std::cerr << "sgtutte: INTERNAL DISAGREEMENT: subset expansion gives\n  "
              << subset.render() << "\nbut deletion-contraction gives\n  " << dc.render()
              << "\n";
    std::exit(2);
  }
  return subset;
}

int run_poly(const GraphInput& in, const std::string& method, unsigned seed, bool as_json) {
  const SignedGraph g = read_graph(in);
  const TriPoly t = polynomial_by_method(g, method, seed);
  if (as_json) {
    nlohmann::json doc = poly_to_json(t);
    doc["vertices"] = g.vertex_count;
    doc["edges"] = g.edge_count();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << t.render() << "\n";
  }
  return 0;
}

int run_eval(const GraphInput& in, const std::vector<std::string>& at, const std::string& method,
             unsigned seed, bool as_json) {
  const SignedGraph g = read_graph(in);
  const TriPoly t = polynomial_by_method(g, method, seed);
  const BigRat x = parse_rational(at[0]);
  const BigRat y = parse_rational(at[1]);
  const BigRat z = parse_rational(at[2]);
  const BigRat value = t.eval(x, y, z);
  if (as_json) {
    nlohmann::json doc{{"x", at[0]}, {"y", at[1]}, {"z", at[2]},
                       {"value", rat_to_string(value)}};
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << value << "\n";
  }
  return 0;
}

struct CountRequest {
  std::string what;
  std::string group_spec;
  long range = -1;
  bool all = false;
  bool zero_free = false;
  bool off_coset = false;
  bool brute = false;
  bool as_json = false;
};

// The evaluation-side answer (polynomial evaluations and closed forms).
BigInt count_by_theory(const SignedGraph& g, const CountRequest& req,
                       const FiniteAbelianGroup& grp) {
  const auto prof = component_profile(g, g.full_edge_set());
  if (req.what == "flows")
    return req.all ? count_flows_closed_form(g, grp)
                   : count_by_evaluation(CountKind::nz_flows, g, grp);
  if (req.what == "colorings")
    return req.all ? pow_int(BigInt(grp.order()), g.vertex_count)
                   : count_by_evaluation(CountKind::proper_group_colorings, g, grp);
  if (req.what == "tensions") {
    if (req.off_coset) return count_by_evaluation(CountKind::nz_tensions_off_coset, g, grp);
    if (req.all) return pow_int(BigInt(grp.order()), frame_rank(g, g.full_edge_set()));
    return count_nz_tensions_eval(g, grp);
  }
  // potential-differences
  if (req.all)
    return pow_int(BigInt(grp.order()), g.vertex_count - prof.total) *
           pow_int(BigInt(grp.two_g_index()), prof.unbalanced);
  return count_by_evaluation(CountKind::nz_potential_differences, g, grp);
}

// The brute-force answer for the same request.
BigInt count_by_enumeration(const SignedGraph& g, const CountRequest& req,
                            const FiniteAbelianGroup& grp) {
  if (req.what == "flows") return count_flows(g, grp, !req.all);
  if (req.what == "colorings") return count_group_colorings(g, grp, !req.all);
  const TensionCensus census = census_tensions(g, grp);
  if (req.what == "tensions") {
    if (req.off_coset) {
      const DenseGroup dense = dense_tables(grp);
      for (const auto& [rep, cnt] : census.nz_by_coset)
        if (!dense.in2g[rep]) return cnt;
      return 0;
    }
    return req.all ? census.tensions : census.nz_tensions;
  }
  return req.all ? census.potential_differences : census.nz_potential_differences;
}

int run_count(const GraphInput& in, const CountRequest& req) {
  const SignedGraph g = read_graph(in);
  nlohmann::json doc{{"what", req.what}};
  BigInt count;
  BigInt brute;

  if (req.range >= 0) {
    if (req.what != "colorings")
      throw std::invalid_argument("--range only applies to colorings; use --group");
    if (req.all)
      throw std::invalid_argument("range colorings are always counted proper; drop --all");
    const CountKind kind = req.zero_free ? CountKind::proper_nonzero_range_colorings
                                         : CountKind::proper_range_colorings;
    count = count_by_evaluation(kind, g, req.range);
    if (req.brute) brute = count_range_colorings(g, req.range, !req.zero_free);
    doc["range"] = req.range;
    doc["zero_free"] = req.zero_free;
  } else {
    const FiniteAbelianGroup grp = FiniteAbelianGroup::parse(req.group_spec);
    if (req.off_coset) {
      const auto prof = component_profile(g, g.full_edge_set());
      if (!(prof.total == 1 && prof.unbalanced == 1))
        throw std::invalid_argument("--off-coset needs a connected unbalanced graph");
      if (grp.two_torsion_order() == 1)
        throw std::invalid_argument("--off-coset needs a group with a proper doubling subgroup");
    }
    count = count_by_theory(g, req, grp);
    if (req.brute) brute = count_by_enumeration(g, req, grp);
    doc["group"] = grp.to_string();
  }

  doc["all"] = req.all;
  doc["count"] = big_to_string(count);
  if (req.brute) {
    doc["brute"] = big_to_string(brute);
    if (count != brute) {
      if (req.as_json) std::cout << doc.dump(2) << "\n";
      std::cerr << "sgtutte: MISMATCH: evaluation gives " << count
                << " but enumeration gives " << brute << "\n";
      return 2;
    }
  }

  if (req.as_json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << count << "\n";
    if (req.brute) std::cout << "brute " << brute << " (agrees)\n";
  }
  return 0;
}

RankOracle read_matroid_file(const std::string& path) {
  if (path == "-") return load_matroid(std::cin);
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open matroid file '" + path + "'");
  return load_matroid(in);
}

int run_joint(const GraphInput& in, const std::string& m1_path, const std::string& m2_path,
              bool as_json) {
  RankOracle m1(0, {0});
  RankOracle m2(0, {0});
  if (!m1_path.empty() || !m2_path.empty()) {
    if (m1_path.empty() || m2_path.empty())
      throw std::invalid_argument("--m1 and --m2 must be given together");
    m1 = read_matroid_file(m1_path);
    m2 = read_matroid_file(m2_path);
    if (m1.ground_size() != m2.ground_size())
      throw std::invalid_argument("the two matroids must share a ground set size");
  } else {
    const SignedGraph g = read_graph(in);
    m1 = cycle_matroid(g);
    m2 = frame_matroid(g);
  }
  const TriPoly s = joint_tutte(m1, m2);
  if (as_json) {
    nlohmann::json doc = poly_to_json(s);
    doc["ground"] = m1.ground_size();
    doc["rank_m1"] = m1.rank_full();
    doc["rank_m2"] = m2.rank_full();
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << s.render() << "\n";
  }
  return 0;
}

int run_verify(int max_vertices, int max_edges, const std::string& groups_csv, int threads,
               const std::string& json_path, bool quiet) {
  std::vector<FiniteAbelianGroup> groups;
  std::stringstream csv(groups_csv);
  std::string spec;
  while (std::getline(csv, spec, ','))
    if (!spec.empty()) groups.push_back(FiniteAbelianGroup::parse(spec));
  if (groups.empty()) throw std::invalid_argument("no groups given");

  const auto battery = signed_graph_battery(max_vertices, max_edges);
  if (!quiet)
    std::cout << "checking " << battery.size() << " graphs over " << groups.size()
              << " groups\n";

  const auto report = run_battery_checks(battery, groups, threads, [&](const CheckResult& r) {
    if (!quiet && !r.passed && !r.skipped)
      std::cout << "FAIL " << r.check << " on " << r.subject << ": " << r.detail << "\n";
  });

  if (!json_path.empty()) {
    if (json_path == "-") {
      write_report_json(std::cout, report);
    } else {
      std::ofstream out(json_path);
      if (!out) throw std::invalid_argument("cannot write report file '" + json_path + "'");
      write_report_json(out, report);
    }
  }

  if (!quiet) {
    for (const auto& r : report.results)
      if (r.skipped) std::cout << "SKIP " << r.check << " on " << r.subject << "\n";
  }
  std::cout << "passed " << report.passed << ", failed " << report.failed << ", skipped "
            << report.skipped << "\n";
  return report.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact trivariate Tutte polynomials of signed graphs, joint Tutte polynomials "
               "of matroid pairs, and the flow/coloring/tension counts they carry"};
  app.require_subcommand(1);

  GraphInput in;
  std::string method = "both";
  unsigned seed = 0;
  bool as_json = false;

  auto* poly = app.add_subcommand("poly", "Print the trivariate Tutte polynomial of a graph");
  add_graph_options(poly, in);
  poly->add_option("--method", method, "subset, dc, or both (both cross-checks)")
      ->check(CLI::IsMember({"subset", "dc", "both"}));
  poly->add_option("--seed", seed, "Random edge order for the dc method (0 = deterministic)");
  poly->add_flag("--json", as_json, "Emit JSON with the term list");

  std::vector<std::string> at;
  auto* eval = app.add_subcommand("eval", "Evaluate the polynomial at an exact rational point");
  add_graph_options(eval, in);
  eval->add_option("--at", at, "Point as three rationals, e.g. --at -3 0 1/2")
      ->expected(3)
      ->required();
  eval->add_option("--method", method, "subset, dc, or both (both cross-checks)")
      ->check(CLI::IsMember({"subset", "dc", "both"}));
  eval->add_option("--seed", seed, "Random edge order for the dc method");
  eval->add_flag("--json", as_json, "Emit JSON");

  CountRequest req;
  auto* count = app.add_subcommand(
      "count", "Count flows, colorings, tensions or potential differences exactly");
  add_graph_options(count, in);
  count->add_option("--what", req.what, "What to count")
      ->check(CLI::IsMember({"flows", "colorings", "tensions", "potential-differences"}))
      ->required();
  auto* group_opt =
      count->add_option("--group", req.group_spec, "Finite abelian group, e.g. Z6 or Z4xZ2");
  count->add_option("--range", req.range, "Integer colors {0,+-1,..,+-n} instead of a group")
      ->excludes(group_opt);
  count->add_flag("--all", req.all, "Count everything, not only nowhere-zero/proper objects");
  count->add_flag("--zero-free", req.zero_free, "Range colorings that avoid the color 0");
  count->add_flag("--off-coset", req.off_coset,
                  "Nowhere-zero tensions with cycle sums in a fixed coset outside the "
                  "doubling subgroup (connected unbalanced graphs)");
  count->add_flag("--brute", req.brute,
                  "Also enumerate by brute force and fail loudly on any mismatch");
  count->add_flag("--json", req.as_json, "Emit JSON");

  std::string m1_path, m2_path;
  auto* joint = app.add_subcommand(
      "joint", "Print the joint Tutte polynomial of a matroid pair (default: cycle and "
               "frame matroids of a graph)");
  add_graph_options(joint, in);
  joint->add_option("--m1", m1_path, "Rank-table or bases file for the first matroid");
  joint->add_option("--m2", m2_path, "Rank-table or bases file for the second matroid");
  joint->add_flag("--json", as_json, "Emit JSON with the term list");

  int max_vertices = 3;
  int max_edges = 4;
  std::string groups_csv = "Z2,Z3,Z4,Z5,Z6,Z2xZ2";
  int threads = 0;
  std::string json_path;
  bool quiet = false;
  auto* verify = app.add_subcommand(
      "verify", "Cross-check every identity over all small signed graphs and groups");
  verify->add_option("--max-vertices", max_vertices, "Battery vertex bound (default 3)")
      ->check(CLI::Range(0, 5));
  verify->add_option("--max-edges", max_edges, "Battery edge bound (default 4)")
      ->check(CLI::Range(0, 8));
  verify->add_option("--groups", groups_csv, "Comma-separated group list");
  verify->add_option("--threads", threads, "Worker threads (0 = hardware)");
  verify->add_option("--json", json_path, "Write a JSON report here ('-' for stdout)");
  verify->add_flag("--quiet", quiet, "Only print the summary line");

  CLI11_PARSE(app, argc, argv);

  try {
    if (poly->parsed()) return run_poly(in, method, seed, as_json);
    if (eval->parsed()) return run_eval(in, at, method, seed, as_json);
    if (count->parsed()) {
      if (req.range < 0 && req.group_spec.empty())
        throw std::invalid_argument("give either --group or --range");
      return run_count(in, req);
    }
    if (joint->parsed()) return run_joint(in, m1_path, m2_path, as_json);
    if (verify->parsed())
      return run_verify(max_vertices, max_edges, groups_csv, threads, json_path, quiet);
  } catch (const std::exception& e) {
    std::cerr << "sgtutte: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
