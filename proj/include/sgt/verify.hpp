#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "sgt/group.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

// Every signed multigraph with at most `max_vertices` labelled vertices and at
// most `max_edges` edges.  Edge slots are multisets of vertex pairs (loops
// allowed), expanded over all sign patterns.  (3, 4) yields 2944 graphs.
std::vector<SignedGraph> signed_graph_battery(int max_vertices, int max_edges);

// Outcome of one cross-check on one graph (and possibly one group).
struct CheckResult {
  std::string check;    // name of the identity or equivalence checked
  std::string subject;  // rendering of the graph / group it ran on
  bool passed = true;
  bool skipped = false;  // enumeration exceeded the configured budget
  std::string detail;    // mismatch description when failed
};

struct VerifyReport {
  std::vector<CheckResult> results;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void add(CheckResult r);
  const std::vector<CheckResult>& failures() const { return failures_; }

 private:
  std::vector<CheckResult> failures_;
};

// Runs every cross-check family over the battery of graphs and the given
// groups, fanning work out over `threads` workers (<= 0 means hardware
// concurrency).  Checks whose enumeration cost exceeds the budget are
// recorded as skipped, never silently dropped.
VerifyReport run_battery_checks(const std::vector<SignedGraph>& graphs,
                                const std::vector<FiniteAbelianGroup>& groups, int threads = 0,
                                const std::function<void(const CheckResult&)>& on_result = {});

void write_report_json(std::ostream& out, const VerifyReport& report);

}  // namespace sgt
