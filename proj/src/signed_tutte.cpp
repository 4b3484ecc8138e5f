#include "sgt/signed_tutte.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace sgt {

TriPoly signed_tutte_subset(const SignedGraph& g) {
  validate_graph(g);
  const EdgeSubset full = g.full_edge_set();
  const int k_full = component_profile(g, full).total;
  std::map<std::tuple<int, int, int>, BigInt> counts;
  for (EdgeSubset a = 0;; ++a) {
    const ComponentProfile p = component_profile(g, a);
    counts[{p.total - k_full, popcount(a) - g.vertex_count + p.balanced, p.unbalanced}] += 1;
    if (a == full) break;
  }
  return from_binomial_counts(counts);
}

namespace {

TriPoly bouquet_factor(int negative_loops) {
  // 1 + (Z-1)(1 + Y + ... + Y^(l-1))
  TriPoly geometric;
  for (int i = 0; i < negative_loops; ++i) geometric += TriPoly::variable('Y', i);
  return TriPoly::one() + TriPoly::binomial_power('Z', 1) * geometric;
}

TriPoly dc_recurse(const SignedGraph& g, std::mt19937* rng) {
  // Collect non-loop edges; when none remain the graph is a disjoint union of
  // loop bouquets and isolated vertices.
  std::vector<int> non_loops;
  for (int i = 0; i < g.edge_count(); ++i)
    if (!g.is_loop(i)) non_loops.push_back(i);

  if (non_loops.empty()) {
    int positive_loops = 0;
    std::vector<int> negative_at(g.vertex_count, 0);
    for (const Edge& e : g.edges) {
      if (e.sign > 0) ++positive_loops;
      else ++negative_at[e.u];
    }
    TriPoly acc = TriPoly::variable('Y', positive_loops);
    for (int v = 0; v < g.vertex_count; ++v)
      if (negative_at[v] > 0) acc *= bouquet_factor(negative_at[v]);
    return acc;
  }

  int e = non_loops.front();
  if (rng) e = non_loops[(*rng)() % non_loops.size()];

  SignedGraph h = g.edges[e].sign < 0 ? switch_vertex(g, g.edges[e].u) : g;
  const EdgeClass cls = classify_edge(h, e);
  if (cls.graph_role == GraphRole::bridge) {
    if (cls.circuit_path_edge)
      return dc_recurse(contract_edge(h, e), rng) +
             TriPoly::binomial_power('X', 1) * dc_recurse(delete_edge(h, e), rng);
    return TriPoly::variable('X') * dc_recurse(contract_edge(h, e), rng);
  }
  return dc_recurse(contract_edge(h, e), rng) + dc_recurse(delete_edge(h, e), rng);
}

}  // namespace

TriPoly signed_tutte_dc(const SignedGraph& g, unsigned seed) {
  validate_graph(g);
  if (seed == 0) return dc_recurse(g, nullptr);
  std::mt19937 rng(seed);
  return dc_recurse(g, &rng);
}

BigRat dichromatic(const SignedGraph& g, const BigRat& u, const BigRat& v) {
  if (u == 0) throw std::domain_error("dichromatic: u must be non-zero");
  const int k = component_profile(g, g.full_edge_set()).total;
  const TriPoly t = signed_tutte_subset(g);
  return pow_rat(u, k) * t.eval(u + 1, v + 1, BigRat(1) / u + 1);
}

BigRat recipe_evaluate(const SignedGraph& g, const RecipeParams& p) {
  validate_graph(g);
  if (p.gamma == 0) throw std::domain_error("recipe_evaluate: gamma must be non-zero");
  const EdgeSubset full = g.full_edge_set();
  const int m = g.edge_count();
  const int rm_full = graph_rank(g, full);
  const int rf_full = frame_rank(g, full);

  if (p.alpha != 0 && p.beta != 0) {
    const TriPoly t = signed_tutte_subset(g);
    return pow_rat(p.alpha, rm_full) * pow_rat(p.beta, m - rf_full) *
           pow_rat(p.gamma, rf_full - rm_full) *
           t.eval(p.x / p.alpha, p.y / p.beta, p.z / p.gamma);
  }

  // Subset form; only the gamma exponent can go negative.
  BigRat acc = 0;
  for (EdgeSubset a = 0;; ++a) {
    const int rm = graph_rank(g, a);
    const int rf = frame_rank(g, a);
    const long gamma_exp = (rf_full - rf) - (rm_full - rm);
    acc += pow_rat(p.alpha, rm) * pow_rat(p.beta, m - popcount(a) + rf - rf_full) *
           pow_rat(p.gamma, gamma_exp) * pow_rat(p.x - p.alpha, rm_full - rm) *
           pow_rat(p.y - p.beta, popcount(a) - rf) * pow_rat(p.z - p.gamma, rf - rm);
    if (a == full) break;
  }
  return acc;
}

namespace {

BigRat signed_pow(int exponent) { return exponent % 2 == 0 ? BigRat(1) : BigRat(-1); }

}  // namespace

EvaluationPoint evaluation_point(CountKind kind, const SignedGraph& g,
                                 const FiniteAbelianGroup& group) {
  const ComponentProfile pf = component_profile(g, g.full_edge_set());
  const int k = pf.total;
  const BigRat order(group.order());
  const BigRat two_g(group.two_g_index());
  const BigRat torsion = order / two_g;  // |G|/|2G|
  EvaluationPoint pt;
  switch (kind) {
    case CountKind::nz_flows:
      pt = {BigRat(0), 1 - order, 1 - torsion,
            signed_pow(g.edge_count() - g.vertex_count + k),
            "nowhere-zero flows over " + group.to_string()};
      break;
    case CountKind::proper_group_colorings:
      pt = {1 - order, BigRat(0), 1 - BigRat(1) / two_g,
            signed_pow(g.vertex_count - k) * pow_rat(order, k),
            "proper colorings over " + group.to_string()};
      break;
    case CountKind::nz_potential_differences:
      pt = {1 - order, BigRat(0), 1 - BigRat(1) / two_g,
            signed_pow(g.vertex_count - k) * pow_rat(two_g, pf.unbalanced),
            "nowhere-zero potential differences over " + group.to_string()};
      break;
    case CountKind::nz_tensions_off_coset:
      pt = {1 - order, BigRat(0), BigRat(1),
            signed_pow(g.vertex_count - k) * pow_rat(two_g, pf.unbalanced),
            "nowhere-zero tensions in a fixed non-trivial coset class over " + group.to_string()};
      break;
    default:
      throw std::invalid_argument("evaluation_point: this count kind takes a range size, not a group");
  }
  return pt;
}

EvaluationPoint evaluation_point(CountKind kind, const SignedGraph& g, long n) {
  if (n < 0) throw std::domain_error("evaluation_point: negative range size");
  const int k = component_profile(g, g.full_edge_set()).total;
  EvaluationPoint pt;
  switch (kind) {
    case CountKind::proper_range_colorings:
      pt = {BigRat(-2 * n), BigRat(0), BigRat(2 * n) / BigRat(2 * n + 1),
            signed_pow(g.vertex_count - k) * pow_rat(BigRat(2 * n + 1), k),
            "proper colorings with values in {0,+-1..+-" + std::to_string(n) + "}"};
      break;
    case CountKind::proper_nonzero_range_colorings:
      pt = {BigRat(1 - 2 * n), BigRat(0), BigRat(1),
            signed_pow(g.vertex_count - k) * pow_rat(BigRat(2 * n), k),
            "proper colorings with values in {+-1..+-" + std::to_string(n) + "}"};
      break;
    default:
      throw std::invalid_argument("evaluation_point: this count kind takes a group, not a range size");
  }
  return pt;
}

namespace {

BigInt checked_count(const SignedGraph& g, const EvaluationPoint& pt) {
  const TriPoly t = signed_tutte_subset(g);
  const BigRat value = pt.prefactor * t.eval(pt.x, pt.y, pt.z);
  const BigInt n = to_integer(value);  // throws if the evaluation is not integral
  if (n < 0)
    throw std::logic_error("count evaluated to a negative value: " + value.str() + " (" +
                           pt.meaning + ")");
  return n;
}

}  // namespace

BigInt count_by_evaluation(CountKind kind, const SignedGraph& g, const FiniteAbelianGroup& group) {
  return checked_count(g, evaluation_point(kind, g, group));
}

BigInt count_by_evaluation(CountKind kind, const SignedGraph& g, long n) {
  return checked_count(g, evaluation_point(kind, g, n));
}

BigInt count_nz_tensions_eval(const SignedGraph& g, const FiniteAbelianGroup& group) {
  validate_graph(g);
  const ComponentMap cm = component_map(g, g.full_edge_set());
  const BigRat order(group.order());
  const BigRat two_g(group.two_g_index());
  BigRat acc = 1;
  for (int id = 0; id < cm.total(); ++id) {
    const SignedGraph c = component_subgraph(g, cm, id);
    const TriPoly t = signed_tutte_subset(c);
    const int r = c.vertex_count - 1;  // component is connected
    if (cm.component_balanced[id]) {
      acc *= signed_pow(r) * t.eval(1 - order, BigRat(0), 1 - BigRat(1) / two_g);
    } else {
      acc *= signed_pow(r) * two_g *
             (t.eval(1 - order, BigRat(0), 1 - BigRat(1) / two_g) +
              (order / two_g - 1) * t.eval(1 - order, BigRat(0), BigRat(1)));
    }
  }
  const BigInt n = to_integer(acc);
  if (n < 0) throw std::logic_error("tension count evaluated negative: " + acc.str());
  return n;
}

}  // namespace sgt
