#include "sgt/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgt/enumerators.hpp"
#include "sgt/matroid.hpp"
#include "sgt/numbers.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/signed_tutte.hpp"
#include "sgt/tripoly.hpp"

namespace sgt {

namespace {

// Thrown by expect() inside a check family; run_family turns it into a failed
// CheckResult instead of letting it escape.
struct Mismatch {
  std::string detail;
};

void expect(bool condition, const std::string& detail) {
  if (!condition) throw Mismatch{detail};
}

template <typename Body>
void run_family(std::vector<CheckResult>& out, const std::string& check,
                const std::string& subject, Body&& body) {
  CheckResult r;
  r.check = check;
  r.subject = subject;
  try {
    body();
  } catch (const Mismatch& m) {
    r.passed = false;
    r.detail = m.detail;
  } catch (const BudgetExceeded& e) {
    r.skipped = true;
    r.detail = e.what();
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = std::string("exception: ") + e.what();
  }
  out.push_back(std::move(r));
}

// Renders a graph as a one-line statement list ("v 2; e 0 1 +; e 0 0 -"),
// which the graph text parser accepts back verbatim.
std::string graph_subject(const SignedGraph& g) {
  std::ostringstream out;
  out << "v " << g.vertex_count;
  for (const Edge& e : g.edges)
    out << "; e " << e.u << " " << e.v << " " << (e.sign > 0 ? '+' : '-');
  return out.str();
}

// Direct subset expansion of the recurrence solution, independent of the
// closed form used by recipe_evaluate when alpha and beta are invertible.
BigRat recipe_direct_expansion(const SignedGraph& g, const RecipeParams& p) {
  const EdgeSubset full = g.full_edge_set();
  const int rm_full = graph_rank(g, full);
  const int rf_full = frame_rank(g, full);
  const int m = g.edge_count();
  BigRat acc = 0;
  for (EdgeSubset a = 0;; ++a) {
    const int rm = graph_rank(g, a);
    const int rf = frame_rank(g, a);
    const int size = popcount(a);
    acc += pow_rat(p.alpha, rm) * pow_rat(p.beta, m - size + rf - rf_full) *
           pow_rat(p.gamma, rf_full - rf - rm_full + rm) * pow_rat(p.x - p.alpha, rm_full - rm) *
           pow_rat(p.y - p.beta, size - rf) * pow_rat(p.z - p.gamma, rf - rm);
    if (a == full) break;
  }
  return acc;
}

void graph_checks(std::vector<CheckResult>& out, const SignedGraph& g) {
  const std::string subject = graph_subject(g);

  run_family(out, "tutte-dc-matches-subset", subject, [&] {
    const TriPoly t = signed_tutte_subset(g);
    expect(signed_tutte_dc(g) == t, "deterministic deletion-contraction differs");
    expect(signed_tutte_dc(g, 7) == t, "randomized deletion-contraction differs");
  });

  run_family(out, "tutte-switching-invariant", subject, [&] {
    const TriPoly t = signed_tutte_subset(g);
    for (int v = 0; v < g.vertex_count; ++v)
      expect(signed_tutte_subset(switch_vertex(g, v)) == t,
             "switching at vertex " + std::to_string(v) + " changes the polynomial");
  });

  run_family(out, "rank-gap-counts-unbalance", subject, [&] {
    const EdgeSubset full = g.full_edge_set();
    for (EdgeSubset a = 0;; ++a) {
      expect(frame_rank(g, a) - graph_rank(g, a) == component_profile(g, a).unbalanced,
             "frame/cycle rank gap wrong on subset " + std::to_string(a));
      if (a == full) break;
    }
  });

  run_family(out, "joint-specializations", subject, [&] {
    const RankOracle m1 = cycle_matroid(g);
    const RankOracle m2 = frame_matroid(g);
    const TriPoly s = joint_tutte(m1, m2);
    expect(specialize_to_m1(s, m1.rank_full()) == matroid_tutte(m1),
           "pair polynomial does not specialize to the cycle-matroid Tutte polynomial");
    expect(specialize_to_m2(s, m2.rank_full()) == matroid_tutte(m2),
           "pair polynomial does not specialize to the frame-matroid Tutte polynomial");
    expect(s.divide_by_binomial('Z', m1.rank_full()) == signed_tutte_subset(g),
           "pair polynomial divided by (Z-1)^rank differs from the trivariate polynomial");
  });

  run_family(out, "recipe-closed-form", subject, [&] {
    const RecipeParams invertible{BigRat(2, 3), BigRat(-3), BigRat(5, 2),
                                  BigRat(7, 2), BigRat(-1, 3), BigRat(4)};
    expect(recipe_evaluate(g, invertible) == recipe_direct_expansion(g, invertible),
           "closed form differs from the direct expansion");
    const RecipeParams alpha_zero{BigRat(0), BigRat(-3), BigRat(5, 2),
                                  BigRat(7, 2), BigRat(-1, 3), BigRat(4)};
    expect(recipe_evaluate(g, alpha_zero) == recipe_direct_expansion(g, alpha_zero),
           "alpha = 0 path differs from the direct expansion");
  });

  run_family(out, "involution-coloring-counts", subject, [&] {
    const TriPoly t = signed_tutte_subset(g);
    const auto prof = component_profile(g, g.full_edge_set());
    const std::vector<std::vector<int>> involutions{{0, 1}, {1, 0}, {1, 0, 2}};
    for (const auto& iota : involutions) {
      const long colors = static_cast<long>(iota.size());
      long fixed = 0;
      for (std::size_t i = 0; i < iota.size(); ++i)
        if (iota[i] == static_cast<int>(i)) ++fixed;
      const auto counts = count_involution_colorings(g, iota);
      const BigRat value =
          t.eval(BigRat(1 - colors), BigRat(0), BigRat(1) - BigRat(fixed, colors));
      const BigRat sign = (g.vertex_count - prof.total) % 2 == 0 ? 1 : -1;
      expect(BigRat(counts.proper) == sign * pow_rat(BigRat(colors), prof.total) * value,
             "proper count with " + std::to_string(colors) +
                 " colors differs from the polynomial evaluation");
      expect(counts.all_edges_improper == pow_int(BigInt(fixed), prof.unbalanced) *
                                              pow_int(BigInt(colors), prof.balanced),
             "everywhere-improper count with " + std::to_string(colors) +
                 " colors differs from the product formula");
    }
  });

  run_family(out, "range-coloring-counts", subject, [&] {
    for (long n = 1; n <= 2; ++n) {
      const BigInt with_zero = count_range_colorings(g, n, true);
      const BigInt zero_free = count_range_colorings(g, n, false);
      expect(BigRat(with_zero) == chromatic_subset_sum(g, BigRat(2 * n + 1)),
             "colorings in {0,..,+-" + std::to_string(n) + "} differ from the subset sum");
      expect(BigRat(zero_free) == balanced_chromatic_subset_sum(g, BigRat(2 * n)),
             "zero-free colorings in {+-1,..,+-" + std::to_string(n) +
                 "} differ from the balanced subset sum");
      expect(with_zero == count_by_evaluation(CountKind::proper_range_colorings, g, n),
             "colorings in {0,..,+-" + std::to_string(n) + "} differ from the evaluation");
      expect(zero_free == count_by_evaluation(CountKind::proper_nonzero_range_colorings, g, n),
             "zero-free colorings in {+-1,..,+-" + std::to_string(n) +
                 "} differ from the evaluation");
    }
  });
}

void group_checks(std::vector<CheckResult>& out, const SignedGraph& g,
                  const FiniteAbelianGroup& grp) {
  const std::string subject = graph_subject(g) + " over " + grp.to_string();
  const auto prof = component_profile(g, g.full_edge_set());

  run_family(out, "flow-counts", subject, [&] {
    const BigInt brute = count_flows(g, grp, true);
    expect(brute == count_nz_flows_subset(g, grp),
           "nowhere-zero flows: brute force differs from the subset expansion");
    expect(brute == count_by_evaluation(CountKind::nz_flows, g, grp),
           "nowhere-zero flows: brute force differs from the evaluation");
    expect(count_flows(g, grp, false) == count_flows_closed_form(g, grp),
           "all flows: brute force differs from the closed form");
  });

  run_family(out, "tension-census", subject, [&] {
    const TensionCensus census = census_tensions(g, grp);
    const TensionCensus by_basis = census_tensions_by_basis(g, grp);
    expect(census.tensions == by_basis.tensions &&
               census.nz_tensions == by_basis.nz_tensions &&
               census.potential_differences == by_basis.potential_differences &&
               census.nz_potential_differences == by_basis.nz_potential_differences &&
               census.nz_by_coset == by_basis.nz_by_coset,
           "brute-force census differs from the basis-extension census");
    expect(census.tensions == pow_int(BigInt(grp.order()), frame_rank(g, g.full_edge_set())),
           "tension total is not |G|^frame-rank");
    expect(census.potential_differences ==
               pow_int(BigInt(grp.order()), g.vertex_count - prof.total) *
                   pow_int(BigInt(grp.two_g_index()), prof.unbalanced),
           "potential-difference total violates the rank formula");
    expect(census.nz_tensions == count_nz_tensions_eval(g, grp),
           "nowhere-zero tensions differ from the evaluation");
    expect(census.nz_potential_differences ==
               count_by_evaluation(CountKind::nz_potential_differences, g, grp),
           "nowhere-zero potential differences differ from the evaluation");
    if (prof.total == 1 && prof.unbalanced == 1) {
      const DenseGroup dense = dense_tables(grp);
      const BigInt off = count_by_evaluation(CountKind::nz_tensions_off_coset, g, grp);
      BigInt inside = 0;
      for (const auto& [rep, cnt] : census.nz_by_coset) {
        if (dense.in2g[rep])
          inside = cnt;
        else
          expect(cnt == off, "off-coset tension slice is not uniform");
      }
      expect(inside == census.nz_potential_differences,
             "in-coset tension slice differs from the potential-difference count");
    }
  });

  run_family(out, "group-coloring-counts", subject, [&] {
    const BigInt proper = count_group_colorings(g, grp, true);
    expect(proper == count_by_evaluation(CountKind::proper_group_colorings, g, grp),
           "proper colorings differ from the evaluation");
    const DeltaStats stats = delta_stats(g, grp);
    const TensionCensus census = census_tensions(g, grp);
    expect(proper == stats.kernel * census.nz_potential_differences,
           "proper colorings are not kernel size times nowhere-zero potential differences");
  });

  run_family(out, "coboundary-kernel-image", subject, [&] {
    const DeltaStats stats = delta_stats(g, grp);
    expect(stats.kernel == pow_int(BigInt(grp.order()), prof.balanced) *
                               pow_int(BigInt(grp.two_torsion_order()), prof.unbalanced),
           "coboundary kernel size violates the component formula");
    expect(stats.kernel * stats.image == pow_int(BigInt(grp.order()), g.vertex_count),
           "kernel and image sizes do not multiply to |G|^|V|");
    expect(stats.image_inside_pd, "some coboundary failed the potential-difference test");
    expect(stats.image == census_tensions(g, grp).potential_differences,
           "coboundary image size differs from the potential-difference total");
  });
}

}  // namespace

std::vector<SignedGraph> signed_graph_battery(int max_vertices, int max_edges) {
  std::vector<SignedGraph> out;
  for (int nv = 0; nv <= max_vertices; ++nv) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < nv; ++u)
      for (int v = u; v < nv; ++v) slots.emplace_back(u, v);
    // Multisets of edge slots of each size, as nondecreasing index sequences.
    std::vector<std::vector<int>> picks{{}};
    for (int size = 1; size <= max_edges && !slots.empty(); ++size) {
      std::vector<int> idx(size, 0);
      while (true) {
        picks.push_back(idx);
        int i = size - 1;
        while (i >= 0 && idx[i] == static_cast<int>(slots.size()) - 1) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < size; ++j) idx[j] = idx[i];
      }
    }
    for (const auto& pick : picks) {
      const int m = static_cast<int>(pick.size());
      for (int signs = 0; signs < (1 << m); ++signs) {
        SignedGraph g;
        g.vertex_count = nv;
        for (int i = 0; i < m; ++i) {
          const auto [u, v] = slots[pick[i]];
          g.edges.push_back({u, v, (signs >> i) & 1 ? -1 : +1});
        }
        out.push_back(std::move(g));
      }
    }
  }
  return out;
}

void VerifyReport::add(CheckResult r) {
  if (r.skipped)
    ++skipped;
  else if (r.passed)
    ++passed;
  else {
    ++failed;
    failures_.push_back(r);
  }
  results.push_back(std::move(r));
}

VerifyReport run_battery_checks(const std::vector<SignedGraph>& graphs,
                                const std::vector<FiniteAbelianGroup>& groups, int threads,
                                const std::function<void(const CheckResult&)>& on_result) {
  std::vector<std::vector<CheckResult>> per_graph(graphs.size());
  unsigned worker_count = threads > 0 ? static_cast<unsigned>(threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  worker_count = std::min(
      worker_count, static_cast<unsigned>(std::max<std::size_t>(graphs.size(), 1)));

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      graph_checks(per_graph[i], graphs[i]);
      for (const auto& grp : groups) group_checks(per_graph[i], graphs[i], grp);
    }
  };
  if (worker_count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < worker_count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  // Merge in graph order so the report is deterministic under threading.
  VerifyReport report;
  for (auto& chunk : per_graph)
    for (auto& r : chunk) {
      if (on_result) on_result(r);
      report.add(std::move(r));
    }
  return report;
}

void write_report_json(std::ostream& out, const VerifyReport& report) {
  nlohmann::json doc;
  doc["passed"] = report.passed;
  doc["failed"] = report.failed;
  doc["skipped"] = report.skipped;
  doc["total"] = report.passed + report.failed + report.skipped;

  std::map<std::string, std::array<int, 3>> tally;
  for (const auto& r : report.results) {
    auto& row = tally[r.check];
    if (r.skipped)
      ++row[2];
    else if (r.passed)
      ++row[0];
    else
      ++row[1];
  }
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, row] : tally)
    checks[name] = {{"passed", row[0]}, {"failed", row[1]}, {"skipped", row[2]}};
  doc["checks"] = checks;

  nlohmann::json failures = nlohmann::json::array();
  for (const auto& r : report.failures())
    failures.push_back({{"check", r.check}, {"subject", r.subject}, {"detail", r.detail}});
  doc["failures"] = failures;

  nlohmann::json skips = nlohmann::json::array();
  for (const auto& r : report.results)
    if (r.skipped)
      skips.push_back({{"check", r.check}, {"subject", r.subject}, {"detail", r.detail}});
  doc["skips"] = skips;

  out << doc.dump(2) << "\n";
}

}  // namespace sgt
