#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sgt/group.hpp"
#include "sgt/numbers.hpp"
#include "sgt/signed_graph.hpp"

namespace sgt {

// ---------------------------------------------------------------------------
// Budget guard for brute-force enumeration.

// Thrown when an enumeration would exceed the configured step budget
// (default 1e8; override with the SGTUTTE_ENUM_BUDGET environment variable).
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what_task, double cost, double budget);
  double cost() const { return cost_; }
  double budget() const { return budget_; }

 private:
  double cost_;
  double budget_;
};

double enumeration_budget();
void check_budget(const std::string& task, double cost);

// ---------------------------------------------------------------------------
// Orientations.

// Half-edge incidence signs: half[e] = {sign on the edges[e].u side, sign on
// the edges[e].v side}.  The default orientation gives a positive edge
// (+1, -1) and a negative edge (+1, +1); a positive loop therefore
// contributes net zero at its vertex and a negative loop twice its value.
struct Orientation {
  std::vector<std::pair<int, int>> half;
};

Orientation default_orientation(const SignedGraph& g);

// Negates both half-edge signs of one edge; flows and tensions transform by
// negating that coordinate, so all counts are invariant.
Orientation flip_edge(Orientation o, int e);

// ---------------------------------------------------------------------------
// Flows.

// Brute force over all edge labellings: a flow has zero net sum at every
// vertex (each half-edge contributes its incidence sign times the label).
BigInt count_flows(const SignedGraph& g, const FiniteAbelianGroup& group, bool nowhere_zero,
                   const Orientation* orientation = nullptr);

// |G|^(|E| - |V| + k_b) * (|G|/|2G|)^k_u: the number of all flows.
BigInt count_flows_closed_form(const SignedGraph& g, const FiniteAbelianGroup& group);

// Inclusion-exclusion over spanning subgraphs for the nowhere-zero count:
//   sum over A of (-1)^(|E|-|A|) |G|^(|A|-|V|+k_b(A)) (|G|/|2G|)^k_u(A).
BigInt count_nz_flows_subset(const SignedGraph& g, const FiniteAbelianGroup& group);

// ---------------------------------------------------------------------------
// Colorings.

// Vertex labellings by group elements; proper means g(u) != g(v) across
// positive edges and g(u) != -g(v) across negative ones.
BigInt count_group_colorings(const SignedGraph& g, const FiniteAbelianGroup& group, bool proper);

// Proper colorings with integer colors {0, +-1, ..., +-n} (allow_zero) or
// {+-1, ..., +-n}; positive edges want distinct colors, negative edges colors
// that are not each other's negatives.
BigInt count_range_colorings(const SignedGraph& g, long n, bool allow_zero);

// Subset expansions the range-coloring counts must match:
//   chromatic_subset_sum(t)          = sum over all A of (-1)^|A| t^k_b(A)
//   balanced_chromatic_subset_sum(t) = the same sum restricted to A with
//                                      every component of (V, A) balanced.
// The first evaluated at 2n+1 counts proper colorings with zero allowed, the
// second at 2n counts proper colorings avoiding zero.
BigRat chromatic_subset_sum(const SignedGraph& g, const BigRat& t);
BigRat balanced_chromatic_subset_sum(const SignedGraph& g, const BigRat& t);

// Colorings with values in {0, ..., |iota|-1} carrying an involution:
// a positive edge is proper when its endpoint colors differ, a negative edge
// when x_u != iota[x_v].  Also counts labellings improper at every edge.
struct InvolutionColoringCounts {
  BigInt proper;
  BigInt all_edges_improper;
};
InvolutionColoringCounts count_involution_colorings(const SignedGraph& g,
                                                    const std::vector<int>& iota);

// ---------------------------------------------------------------------------
// Circuits of the frame matroid and their canonical walks.

enum class CircuitKind { balanced_cycle, tight_handcuffs, loose_handcuffs };

struct CircuitWalkStep {
  int edge = -1;
  int enter_vertex = -1;
  int exit_vertex = -1;
  // 0 when the walk enters the edge on its u side, 1 on its v side; a loop is
  // entered on side 0 in the forward walk.
  int enter_side = 0;
};

struct Circuit {
  EdgeSubset edges = 0;
  CircuitKind kind = CircuitKind::balanced_cycle;
  EdgeSubset path_edges = 0;  // loose handcuffs only: edges walked twice
  std::vector<CircuitWalkStep> walk;
};

// All circuits of the frame matroid, each with a canonical closed walk that
// traverses cycle edges once and connecting-path edges twice and has positive
// total sign.  Walks start at the smallest vertex usable for their kind.
std::vector<Circuit> frame_circuits(const SignedGraph& g);

// Edge masks of the unbalanced cycles of the graph (connected, all support
// degrees two, negative sign product).  These are independent in the frame
// matroid, not circuits of it.
std::vector<EdgeSubset> unbalanced_cycles(const SignedGraph& g);

// Coefficient per edge of the walk height: step i contributes its entry sign
// times the product of the signs of the edges walked before it, accumulated
// onto its edge.  A labelling f makes the height sum_e coeff[e] f(e).
std::vector<int> walk_coefficients(const SignedGraph& g, const std::vector<CircuitWalkStep>& walk,
                                   const Orientation* orientation = nullptr);

// The same walk traversed backwards (steps reversed, entry sides swapped);
// for a positive closed walk the coefficients come out negated.
std::vector<CircuitWalkStep> reverse_walk(const std::vector<CircuitWalkStep>& walk);

// ---------------------------------------------------------------------------
// Tensions and potential differences.

// Precomputes the circuit walk forms of a graph over one group so that edge
// labellings (as dense element indices, see dense_tables) can be classified
// quickly.  A tension has height zero on every frame-circuit walk; a
// potential difference additionally has its plain edge sum over one (hence
// every) unbalanced cycle of each unbalanced component inside 2G.
class TensionChecker {
 public:
  TensionChecker(const SignedGraph& g, const FiniteAbelianGroup& group);

  bool is_tension(const std::vector<int>& f) const;
  bool is_potential_difference(const std::vector<int>& f) const;

  // Dense index of the canonical coset representative of the plain edge sum
  // over the chosen unbalanced cycle of each unbalanced component (component
  // order).  Meaningful for tensions (the coset does not depend on the cycle).
  std::vector<int> cycle_cosets(const std::vector<int>& f) const;

  const DenseGroup& dense() const { return dense_; }
  const std::vector<std::vector<int>>& circuit_forms() const { return forms_; }
  const std::vector<std::vector<int>>& chosen_cycles() const { return cycles_; }

 private:
  int edge_count_;
  DenseGroup dense_;
  std::vector<std::vector<int>> forms_;   // per circuit: coefficient per edge
  std::vector<std::vector<int>> cycles_;  // per unbalanced component: edge list
};

struct TensionCensus {
  BigInt tensions = 0;
  BigInt potential_differences = 0;
  BigInt nz_tensions = 0;
  BigInt nz_potential_differences = 0;
  // For connected unbalanced graphs only: nowhere-zero tensions grouped by
  // the dense index of the canonical representative of their cycle-sum coset.
  std::map<int, BigInt> nz_by_coset;
};

// Brute force over all |G|^|E| edge labellings.
TensionCensus census_tensions(const SignedGraph& g, const FiniteAbelianGroup& group);

// A basis of the tension space: per component a spanning tree plus, when the
// component is unbalanced, one extra edge closing an unbalanced cycle.  Every
// non-basis edge carries the linear form expressing its value, obtained from
// the walk of its fundamental circuit with the basis (the new edge is never a
// doubled path edge there, so its walk coefficient is +-1 and the form needs
// no division).
struct TensionBasis {
  std::vector<int> edges;                // basis edge indices, ascending
  std::vector<char> in_basis;            // per edge
  // per edge: pairs (other edge, integer coefficient); empty for basis edges.
  std::vector<std::vector<std::pair<int, int>>> extension;
};

TensionBasis tension_basis(const SignedGraph& g);

// Extends values on the basis edges (dense indices, in basis order) to the
// unique tension agreeing with them.
std::vector<int> extend_tension(const SignedGraph& g, const TensionBasis& basis,
                                const DenseGroup& dense, const std::vector<int>& basis_values);

// The same census as census_tensions but enumerating only |G|^rank(basis)
// assignments and extending each; tensions then equals that power exactly.
TensionCensus census_tensions_by_basis(const SignedGraph& g, const FiniteAbelianGroup& group);

// ---------------------------------------------------------------------------
// The coboundary operator.

// delta g labels each edge with the incidence-weighted sum of its endpoint
// colors: g(u) - g(v) across a positive edge, g(u) + g(v) across a negative
// one (so 0 on positive loops and 2 g(v) on negative ones) under the default
// orientation.
std::vector<int> delta_coloring(const SignedGraph& g, const DenseGroup& dense,
                                const std::vector<int>& coloring,
                                const Orientation* orientation = nullptr);

struct DeltaStats {
  BigInt kernel = 0;          // colorings with delta g identically zero
  BigInt image = 0;           // distinct labellings delta g
  bool image_inside_pd = true;  // every delta g passes the walk characterization
};

// Brute force over all |G|^|V| colorings.
DeltaStats delta_stats(const SignedGraph& g, const FiniteAbelianGroup& group);

}  // namespace sgt
