#include "sgt/enumerators.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include "sgt/matroid.hpp"

namespace sgt {

namespace {

std::string budget_message(const std::string& task, double cost, double budget) {
  return task + " needs about " + std::to_string(cost) + " steps, over the budget of " +
         std::to_string(budget) + " (raise SGTUTTE_ENUM_BUDGET to allow it)";
}

// Advances a mixed-radix counter; returns false once it wraps around.
bool advance(std::vector<int>& digits, int radix) {
  for (auto& d : digits) {
    if (++d < radix) return true;
    d = 0;
  }
  return false;
}

// c * x with a small integer c, in dense-index arithmetic.
int apply_coefficient(const DenseGroup& dense, int c, int x) {
  if (c < 0) {
    c = -c;
    x = dense.neg[x];
  }
  int acc = 0;
  for (int i = 0; i < c; ++i) acc = dense.plus(acc, x);
  return acc;
}

struct ComponentSkeleton {
  int root = -1;
  std::vector<int> tree_edges;
  int closing_edge = -1;  // smallest-index edge closing an unbalanced cycle
  std::vector<int> unbalanced_cycle;  // tree path plus the closing edge
};

// Breadth-first skeletons of all components: spanning-tree edges, +-1
// potentials from the root, and for unbalanced components the canonical
// unbalanced cycle (the one closed by the smallest inconsistent edge).
std::vector<ComponentSkeleton> component_skeletons(const SignedGraph& g) {
  const int nv = g.vertex_count;
  std::vector<std::vector<int>> incident(nv);
  for (int e = 0; e < g.edge_count(); ++e) {
    incident[g.edges[e].u].push_back(e);
    if (g.edges[e].v != g.edges[e].u) incident[g.edges[e].v].push_back(e);
  }
  std::vector<int> comp(nv, -1), theta(nv, 0), parent_edge(nv, -1), parent(nv, -1);
  std::vector<ComponentSkeleton> out;
  for (int r = 0; r < nv; ++r) {
    if (comp[r] != -1) continue;
    ComponentSkeleton sk;
    sk.root = r;
    const int id = static_cast<int>(out.size());
    comp[r] = id;
    theta[r] = 1;
    std::vector<int> order{r};
    for (std::size_t head = 0; head < order.size(); ++head) {
      const int v = order[head];
      for (int e : incident[v]) {
        const auto& ed = g.edges[e];
        const int w = ed.u == v ? ed.v : ed.u;
        if (comp[w] != -1) continue;
        comp[w] = id;
        theta[w] = theta[v] * ed.sign;
        parent[w] = v;
        parent_edge[w] = e;
        sk.tree_edges.push_back(e);
        order.push_back(w);
      }
    }
    std::sort(sk.tree_edges.begin(), sk.tree_edges.end());
    for (int e = 0; e < g.edge_count(); ++e) {
      const auto& ed = g.edges[e];
      if (comp[ed.u] != id) continue;
      if (std::find(sk.tree_edges.begin(), sk.tree_edges.end(), e) != sk.tree_edges.end())
        continue;
      if (theta[ed.u] * theta[ed.v] * ed.sign == 1) continue;  // closes a balanced cycle
      sk.closing_edge = e;
      // Tree path between the endpoints: walk both to the root and drop the
      // shared tail.
      std::vector<int> up_u, up_v;
      for (int x = ed.u; parent[x] != -1; x = parent[x]) up_u.push_back(parent_edge[x]);
      for (int x = ed.v; parent[x] != -1; x = parent[x]) up_v.push_back(parent_edge[x]);
      while (!up_u.empty() && !up_v.empty() && up_u.back() == up_v.back()) {
        up_u.pop_back();
        up_v.pop_back();
      }
      sk.unbalanced_cycle = up_u;
      sk.unbalanced_cycle.insert(sk.unbalanced_cycle.end(), up_v.begin(), up_v.end());
      sk.unbalanced_cycle.push_back(e);
      std::sort(sk.unbalanced_cycle.begin(), sk.unbalanced_cycle.end());
      break;
    }
    out.push_back(std::move(sk));
  }
  return out;
}

int half_sign(const Orientation& o, const SignedGraph& g, const CircuitWalkStep& step) {
  (void)g;
  return step.enter_side == 0 ? o.half[step.edge].first : o.half[step.edge].second;
}

// Walks one cycle of `mask` starting (and ending) at `start`, consuming the
// edges it uses from `unused`.  At every vertex the smallest-index unused
// edge is taken, so the traversal is canonical.
std::vector<CircuitWalkStep> traverse_cycle(const SignedGraph& g, EdgeSubset mask,
                                            std::vector<char>& unused, int start) {
  std::vector<CircuitWalkStep> steps;
  int cur = start;
  do {
    int next = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!(mask & edge_bit(e)) || !unused[e]) continue;
      if (g.edges[e].u == cur || g.edges[e].v == cur) {
        next = e;
        break;
      }
    }
    if (next == -1) throw std::logic_error("circuit walk: stuck during cycle traversal");
    unused[next] = 0;
    CircuitWalkStep step;
    step.edge = next;
    step.enter_vertex = cur;
    if (g.edges[next].u == g.edges[next].v) {
      step.exit_vertex = cur;
      step.enter_side = 0;
    } else if (g.edges[next].u == cur) {
      step.exit_vertex = g.edges[next].v;
      step.enter_side = 0;
    } else {
      step.exit_vertex = g.edges[next].u;
      step.enter_side = 1;
    }
    steps.push_back(step);
    cur = step.exit_vertex;
  } while (cur != start);
  return steps;
}

// The unique path through `path_mask` from `a` to `b` (both of path-degree
// one), as walk steps.
std::vector<CircuitWalkStep> traverse_path(const SignedGraph& g, EdgeSubset path_mask, int a,
                                           int b) {
  std::vector<CircuitWalkStep> steps;
  int cur = a;
  int prev_edge = -1;
  while (cur != b) {
    int next = -1;
    for (int e = 0; e < g.edge_count(); ++e) {
      if (!(path_mask & edge_bit(e)) || e == prev_edge) continue;
      if (g.edges[e].u == cur || g.edges[e].v == cur) {
        next = e;
        break;
      }
    }
    if (next == -1) throw std::logic_error("circuit walk: broken connecting path");
    CircuitWalkStep step;
    step.edge = next;
    step.enter_vertex = cur;
    step.exit_vertex = g.edges[next].u == cur ? g.edges[next].v : g.edges[next].u;
    step.enter_side = g.edges[next].u == cur ? 0 : 1;
    steps.push_back(step);
    prev_edge = next;
    cur = step.exit_vertex;
  }
  return steps;
}

void append(std::vector<CircuitWalkStep>& walk, const std::vector<CircuitWalkStep>& part) {
  walk.insert(walk.end(), part.begin(), part.end());
}

int degree_in(const SignedGraph& g, EdgeSubset mask, int v) {
  int d = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(mask & edge_bit(e))) continue;
    if (g.edges[e].u == v) ++d;
    if (g.edges[e].v == v) ++d;
  }
  return d;
}

Circuit build_circuit(const SignedGraph& g, EdgeSubset mask) {
  Circuit c;
  c.edges = mask;
  const auto base = component_map(g, mask);
  // Bridges of (V, mask) that lie in the mask are the doubled path edges.
  for (int e = 0; e < g.edge_count(); ++e) {
    if (!(mask & edge_bit(e))) continue;
    if (component_map(g, mask & ~edge_bit(e)).total() > base.total()) c.path_edges |= edge_bit(e);
  }
  const bool balanced = component_profile(g, mask).unbalanced == 0;
  std::vector<char> unused(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e)
    if (mask & edge_bit(e)) unused[e] = 1;

  if (balanced) {
    if (c.path_edges != 0) throw std::logic_error("circuit walk: balanced cycle with bridges");
    c.kind = CircuitKind::balanced_cycle;
    int start = -1;
    for (int v = 0; v < g.vertex_count && start == -1; ++v)
      if (degree_in(g, mask, v) > 0) start = v;
    c.walk = traverse_cycle(g, mask, unused, start);
  } else if (c.path_edges == 0) {
    c.kind = CircuitKind::tight_handcuffs;
    int shared = -1;
    for (int v = 0; v < g.vertex_count && shared == -1; ++v)
      if (degree_in(g, mask, v) == 4) shared = v;
    if (shared == -1) throw std::logic_error("circuit walk: tight handcuffs without hub");
    c.walk = traverse_cycle(g, mask, unused, shared);
    append(c.walk, traverse_cycle(g, mask, unused, shared));
  } else {
    c.kind = CircuitKind::loose_handcuffs;
    const EdgeSubset cycle_mask = mask & ~c.path_edges;
    const auto cm = component_map(g, cycle_mask);
    // The two cycle components, ordered by their smallest vertex.
    std::vector<int> cycle_comp;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (degree_in(g, cycle_mask, v) == 0) continue;
      if (std::find(cycle_comp.begin(), cycle_comp.end(), cm.component_of[v]) == cycle_comp.end())
        cycle_comp.push_back(cm.component_of[v]);
    }
    if (cycle_comp.size() != 2) throw std::logic_error("circuit walk: expected two cycles");
    // Attachment vertices: cycle vertices met by a path edge.
    int a = -1, b = -1;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (degree_in(g, cycle_mask, v) == 0 || degree_in(g, c.path_edges, v) == 0) continue;
      (cm.component_of[v] == cycle_comp[0] ? a : b) = v;
    }
    if (a == -1 || b == -1) throw std::logic_error("circuit walk: detached connecting path");
    c.walk = traverse_cycle(g, cycle_mask, unused, a);
    const auto path = traverse_path(g, c.path_edges, a, b);
    append(c.walk, path);
    std::vector<char> unused2(unused);
    append(c.walk, traverse_cycle(g, cycle_mask, unused2, b));
    append(c.walk, reverse_walk(path));
  }

  // Sanity of the canonical walk: closed, positive, and covering the circuit
  // with the advertised multiplicities.
  int sign = 1;
  std::vector<int> times(g.edge_count(), 0);
  for (std::size_t i = 0; i < c.walk.size(); ++i) {
    sign *= g.edges[c.walk[i].edge].sign;
    ++times[c.walk[i].edge];
    if (i + 1 < c.walk.size() && c.walk[i].exit_vertex != c.walk[i + 1].enter_vertex)
      throw std::logic_error("circuit walk: not contiguous");
  }
  if (sign != 1 || c.walk.front().enter_vertex != c.walk.back().exit_vertex)
    throw std::logic_error("circuit walk: not a positive closed walk");
  for (int e = 0; e < g.edge_count(); ++e) {
    const int expect = !(mask & edge_bit(e)) ? 0 : (c.path_edges & edge_bit(e)) ? 2 : 1;
    if (times[e] != expect) throw std::logic_error("circuit walk: wrong edge multiplicity");
  }
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------

BudgetExceeded::BudgetExceeded(const std::string& what_task, double cost, double budget)
    : std::runtime_error(budget_message(what_task, cost, budget)), cost_(cost), budget_(budget) {}

double enumeration_budget() {
  if (const char* env = std::getenv("SGTUTTE_ENUM_BUDGET")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) return v;
  }
  return 1e8;
}

void check_budget(const std::string& task, double cost) {
  const double budget = enumeration_budget();
  if (cost > budget) throw BudgetExceeded(task, cost, budget);
}

Orientation default_orientation(const SignedGraph& g) {
  Orientation o;
  o.half.reserve(g.edges.size());
  for (const auto& e : g.edges) o.half.emplace_back(+1, e.sign > 0 ? -1 : +1);
  return o;
}

Orientation flip_edge(Orientation o, int e) {
  o.half[e].first = -o.half[e].first;
  o.half[e].second = -o.half[e].second;
  return o;
}

// ---------------------------------------------------------------------------

BigInt count_flows(const SignedGraph& g, const FiniteAbelianGroup& group, bool nowhere_zero,
                   const Orientation* orientation) {
  const Orientation def = orientation ? *orientation : default_orientation(g);
  const int m = g.edge_count();
  const DenseGroup dense = dense_tables(group);
  check_budget("flow enumeration", std::pow(double(dense.n), m));
  // Half-edges per vertex as (edge, incidence sign).
  std::vector<std::vector<std::pair<int, int>>> at(g.vertex_count);
  for (int e = 0; e < m; ++e) {
    at[g.edges[e].u].emplace_back(e, def.half[e].first);
    at[g.edges[e].v].emplace_back(e, def.half[e].second);
  }
  std::vector<int> f(m, 0);
  BigInt count = 0;
  do {
    if (nowhere_zero && std::find(f.begin(), f.end(), 0) != f.end()) continue;
    bool ok = true;
    for (int v = 0; v < g.vertex_count && ok; ++v) {
      int acc = 0;
      for (const auto& [e, s] : at[v]) acc = dense.plus(acc, s > 0 ? f[e] : dense.neg[f[e]]);
      ok = acc == 0;
    }
    if (ok) ++count;
  } while (advance(f, dense.n));
  return count;
}

BigInt count_flows_closed_form(const SignedGraph& g, const FiniteAbelianGroup& group) {
  const auto prof = component_profile(g, g.full_edge_set());
  const int exponent = g.edge_count() - g.vertex_count + prof.balanced;
  return pow_int(BigInt(group.order()), exponent) *
         pow_int(BigInt(group.two_torsion_order()), prof.unbalanced);
}

BigInt count_nz_flows_subset(const SignedGraph& g, const FiniteAbelianGroup& group) {
  const int m = g.edge_count();
  BigInt acc = 0;
  for (EdgeSubset a = 0;; ++a) {
    const auto prof = component_profile(g, a);
    const int size = popcount(a);
    const BigInt value = pow_int(BigInt(group.order()), size - g.vertex_count + prof.balanced) *
                         pow_int(BigInt(group.two_torsion_order()), prof.unbalanced);
    acc += (m - size) % 2 == 0 ? value : -value;
    if (a == g.full_edge_set()) break;
  }
  return acc;
}

// ---------------------------------------------------------------------------

BigInt count_group_colorings(const SignedGraph& g, const FiniteAbelianGroup& group, bool proper) {
  const DenseGroup dense = dense_tables(group);
  check_budget("coloring enumeration", std::pow(double(dense.n), g.vertex_count));
  std::vector<int> col(g.vertex_count, 0);
  BigInt count = 0;
  do {
    bool ok = true;
    if (proper) {
      for (const auto& e : g.edges) {
        const int other = e.sign > 0 ? col[e.v] : dense.neg[col[e.v]];
        if (col[e.u] == other) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  } while (advance(col, dense.n));
  return count;
}

BigInt count_range_colorings(const SignedGraph& g, long n, bool allow_zero) {
  if (n < 0) throw std::invalid_argument("count_range_colorings: n must be non-negative");
  std::vector<long> colors;
  if (allow_zero) colors.push_back(0);
  for (long c = 1; c <= n; ++c) {
    colors.push_back(c);
    colors.push_back(-c);
  }
  const int radix = static_cast<int>(colors.size());
  if (radix == 0) return g.vertex_count == 0 ? 1 : 0;
  check_budget("range coloring enumeration", std::pow(double(radix), g.vertex_count));
  std::vector<int> idx(g.vertex_count, 0);
  BigInt count = 0;
  do {
    bool ok = true;
    for (const auto& e : g.edges) {
      const long other = e.sign > 0 ? colors[idx[e.v]] : -colors[idx[e.v]];
      if (colors[idx[e.u]] == other) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  } while (advance(idx, radix));
  return count;
}

BigRat chromatic_subset_sum(const SignedGraph& g, const BigRat& t) {
  BigRat acc = 0;
  for (EdgeSubset a = 0;; ++a) {
    const auto prof = component_profile(g, a);
    const BigRat value = pow_rat(t, prof.balanced);
    acc += popcount(a) % 2 == 0 ? value : -value;
    if (a == g.full_edge_set()) break;
  }
  return acc;
}

BigRat balanced_chromatic_subset_sum(const SignedGraph& g, const BigRat& t) {
  BigRat acc = 0;
  for (EdgeSubset a = 0;; ++a) {
    const auto prof = component_profile(g, a);
    if (prof.unbalanced == 0) {
      const BigRat value = pow_rat(t, prof.balanced);
      acc += popcount(a) % 2 == 0 ? value : -value;
    }
    if (a == g.full_edge_set()) break;
  }
  return acc;
}

InvolutionColoringCounts count_involution_colorings(const SignedGraph& g,
                                                    const std::vector<int>& iota) {
  const int x = static_cast<int>(iota.size());
  for (int i = 0; i < x; ++i) {
    if (iota[i] < 0 || iota[i] >= x || iota[iota[i]] != i)
      throw std::invalid_argument("count_involution_colorings: iota is not an involution");
  }
  if (x == 0) return {g.vertex_count == 0 ? 1 : 0, g.vertex_count == 0 ? 1 : 0};
  check_budget("involution coloring enumeration", std::pow(double(x), g.vertex_count));
  std::vector<int> col(g.vertex_count, 0);
  InvolutionColoringCounts counts{0, 0};
  do {
    bool proper = true, improper = true;
    for (const auto& e : g.edges) {
      const int other = e.sign > 0 ? col[e.v] : iota[col[e.v]];
      (col[e.u] == other ? proper : improper) = false;
      if (!proper && !improper) break;
    }
    if (proper) ++counts.proper;
    if (improper) ++counts.all_edges_improper;
  } while (advance(col, x));
  return counts;
}

// ---------------------------------------------------------------------------

std::vector<Circuit> frame_circuits(const SignedGraph& g) {
  std::vector<Circuit> out;
  for (EdgeSubset mask : frame_matroid(g).circuits()) out.push_back(build_circuit(g, mask));
  return out;
}

std::vector<EdgeSubset> unbalanced_cycles(const SignedGraph& g) {
  const int m = g.edge_count();
  check_budget("cycle enumeration", std::pow(2.0, m));
  std::vector<EdgeSubset> out;
  for (EdgeSubset mask = 1; m > 0; ++mask) {
    bool cycle = true;
    int sign = 1, support = 0;
    for (int v = 0; v < g.vertex_count && cycle; ++v) {
      const int d = degree_in(g, mask, v);
      if (d != 0 && d != 2) cycle = false;
      if (d > 0) ++support;
    }
    if (cycle) {
      for (int e = 0; e < m; ++e)
        if (mask & edge_bit(e)) sign *= g.edges[e].sign;
      const auto cm = component_map(g, mask);
      // Connected: the support vertices all share one component.
      int comp = -1;
      for (int v = 0; v < g.vertex_count && cycle; ++v) {
        if (degree_in(g, mask, v) == 0) continue;
        if (comp == -1) comp = cm.component_of[v];
        cycle = cm.component_of[v] == comp;
      }
      if (cycle && support > 0 && sign < 0) out.push_back(mask);
    }
    if (mask == g.full_edge_set()) break;
  }
  return out;
}

std::vector<int> walk_coefficients(const SignedGraph& g, const std::vector<CircuitWalkStep>& walk,
                                   const Orientation* orientation) {
  const Orientation def = orientation ? *orientation : default_orientation(g);
  std::vector<int> coeff(g.edge_count(), 0);
  int running = 1;
  for (const auto& step : walk) {
    coeff[step.edge] += half_sign(def, g, step) * running;
    running *= g.edges[step.edge].sign;
  }
  return coeff;
}

std::vector<CircuitWalkStep> reverse_walk(const std::vector<CircuitWalkStep>& walk) {
  std::vector<CircuitWalkStep> out(walk.rbegin(), walk.rend());
  for (auto& step : out) {
    std::swap(step.enter_vertex, step.exit_vertex);
    step.enter_side ^= 1;
  }
  return out;
}

// ---------------------------------------------------------------------------

TensionChecker::TensionChecker(const SignedGraph& g, const FiniteAbelianGroup& group)
    : edge_count_(g.edge_count()), dense_(dense_tables(group)) {
  for (const auto& c : frame_circuits(g)) forms_.push_back(walk_coefficients(g, c.walk));
  for (const auto& sk : component_skeletons(g))
    if (sk.closing_edge != -1) cycles_.push_back(sk.unbalanced_cycle);
}

bool TensionChecker::is_tension(const std::vector<int>& f) const {
  for (const auto& form : forms_) {
    int acc = 0;
    for (int e = 0; e < edge_count_; ++e)
      if (form[e] != 0) acc = dense_.plus(acc, apply_coefficient(dense_, form[e], f[e]));
    if (acc != 0) return false;
  }
  return true;
}

std::vector<int> TensionChecker::cycle_cosets(const std::vector<int>& f) const {
  std::vector<int> out;
  out.reserve(cycles_.size());
  for (const auto& cycle : cycles_) {
    int acc = 0;
    for (int e : cycle) acc = dense_.plus(acc, f[e]);
    out.push_back(dense_.coset_rep[acc]);
  }
  return out;
}

bool TensionChecker::is_potential_difference(const std::vector<int>& f) const {
  if (!is_tension(f)) return false;
  for (const auto& cycle : cycles_) {
    int acc = 0;
    for (int e : cycle) acc = dense_.plus(acc, f[e]);
    if (!dense_.in2g[acc]) return false;
  }
  return true;
}

namespace {

void tally(const SignedGraph& g, const TensionChecker& checker, const std::vector<int>& f,
           bool connected_unbalanced, TensionCensus& census) {
  ++census.tensions;
  const bool nz = std::find(f.begin(), f.end(), 0) == f.end();
  const auto cosets = checker.cycle_cosets(f);
  bool pd = true;
  for (std::size_t i = 0; i < cosets.size() && pd; ++i)
    pd = checker.dense().in2g[cosets[i]] != 0;
  if (pd) ++census.potential_differences;
  if (nz) {
    ++census.nz_tensions;
    if (pd) ++census.nz_potential_differences;
    if (connected_unbalanced) census.nz_by_coset[cosets.front()] += 1;
  }
  (void)g;
}

bool is_connected_unbalanced(const SignedGraph& g) {
  const auto prof = component_profile(g, g.full_edge_set());
  return prof.total == 1 && prof.unbalanced == 1;
}

}  // namespace

TensionCensus census_tensions(const SignedGraph& g, const FiniteAbelianGroup& group) {
  const TensionChecker checker(g, group);
  const int m = g.edge_count();
  check_budget("tension enumeration", std::pow(double(checker.dense().n), m));
  const bool cu = is_connected_unbalanced(g);
  TensionCensus census;
  std::vector<int> f(m, 0);
  do {
    if (checker.is_tension(f)) tally(g, checker, f, cu, census);
  } while (advance(f, checker.dense().n));
  return census;
}

TensionBasis tension_basis(const SignedGraph& g) {
  TensionBasis basis;
  basis.in_basis.assign(g.edge_count(), 0);
  basis.extension.resize(g.edge_count());
  for (const auto& sk : component_skeletons(g)) {
    for (int e : sk.tree_edges) basis.in_basis[e] = 1;
    if (sk.closing_edge != -1) basis.in_basis[sk.closing_edge] = 1;
  }
  EdgeSubset basis_mask = 0;
  for (int e = 0; e < g.edge_count(); ++e) {
    if (basis.in_basis[e]) {
      basis.edges.push_back(e);
      basis_mask |= edge_bit(e);
    }
  }
  const int rank = frame_rank(g, g.full_edge_set());
  if (static_cast<int>(basis.edges.size()) != rank ||
      frame_rank(g, basis_mask) != rank)
    throw std::logic_error("tension basis: skeleton edges are not a frame basis");
  for (int e = 0; e < g.edge_count(); ++e) {
    if (basis.in_basis[e]) continue;
    // Fundamental circuit of e with the basis: members are exactly the
    // elements whose removal keeps the rank of basis + e.
    const EdgeSubset with = basis_mask | edge_bit(e);
    const int r = frame_rank(g, with);
    EdgeSubset circuit = 0;
    for (int x = 0; x < g.edge_count(); ++x)
      if ((with & edge_bit(x)) && frame_rank(g, with & ~edge_bit(x)) == r) circuit |= edge_bit(x);
    const Circuit c = build_circuit(g, circuit);
    const auto coeff = walk_coefficients(g, c.walk);
    if (coeff[e] != 1 && coeff[e] != -1)
      throw std::logic_error("tension basis: new edge is a doubled path edge");
    for (int x = 0; x < g.edge_count(); ++x)
      if (x != e && coeff[x] != 0) basis.extension[e].emplace_back(x, -coeff[e] * coeff[x]);
  }
  return basis;
}

std::vector<int> extend_tension(const SignedGraph& g, const TensionBasis& basis,
                                const DenseGroup& dense, const std::vector<int>& basis_values) {
  if (basis_values.size() != basis.edges.size())
    throw std::invalid_argument("extend_tension: wrong number of basis values");
  std::vector<int> f(g.edge_count(), 0);
  for (std::size_t i = 0; i < basis.edges.size(); ++i) f[basis.edges[i]] = basis_values[i];
  for (int e = 0; e < g.edge_count(); ++e) {
    if (basis.in_basis[e]) continue;
    int acc = 0;
    for (const auto& [x, coef] : basis.extension[e])
      acc = dense.plus(acc, apply_coefficient(dense, coef, f[x]));
    f[e] = acc;
  }
  return f;
}

TensionCensus census_tensions_by_basis(const SignedGraph& g, const FiniteAbelianGroup& group) {
  const TensionChecker checker(g, group);
  const TensionBasis basis = tension_basis(g);
  check_budget("tension basis enumeration",
               std::pow(double(checker.dense().n), double(basis.edges.size())));
  const bool cu = is_connected_unbalanced(g);
  TensionCensus census;
  std::vector<int> values(basis.edges.size(), 0);
  do {
    const auto f = extend_tension(g, basis, checker.dense(), values);
    tally(g, checker, f, cu, census);
  } while (advance(values, checker.dense().n));
  return census;
}

// ---------------------------------------------------------------------------

std::vector<int> delta_coloring(const SignedGraph& g, const DenseGroup& dense,
                                const std::vector<int>& coloring,
                                const Orientation* orientation) {
  const Orientation def = orientation ? *orientation : default_orientation(g);
  std::vector<int> f(g.edge_count(), 0);
  for (int e = 0; e < g.edge_count(); ++e) {
    const int du = def.half[e].first > 0 ? coloring[g.edges[e].u] : dense.neg[coloring[g.edges[e].u]];
    const int dv = def.half[e].second > 0 ? coloring[g.edges[e].v] : dense.neg[coloring[g.edges[e].v]];
    f[e] = dense.plus(du, dv);
  }
  return f;
}

DeltaStats delta_stats(const SignedGraph& g, const FiniteAbelianGroup& group) {
  const DenseGroup dense = dense_tables(group);
  const TensionChecker checker(g, group);
  check_budget("coboundary enumeration", std::pow(double(dense.n), g.vertex_count));
  DeltaStats stats;
  std::set<std::vector<int>> image;
  std::vector<int> col(g.vertex_count, 0);
  do {
    const auto f = delta_coloring(g, dense, col);
    if (std::all_of(f.begin(), f.end(), [](int x) { return x == 0; })) ++stats.kernel;
    if (image.insert(f).second && !checker.is_potential_difference(f))
      stats.image_inside_pd = false;
  } while (advance(col, dense.n));
  stats.image = BigInt(image.size());
  return stats;
}

}  // namespace sgt
