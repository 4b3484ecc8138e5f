#pragma once

#include <string>

#include "sgt/group.hpp"
#include "sgt/numbers.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/tripoly.hpp"

namespace sgt {

// Subset expansion of the trivariate polynomial of a signed graph:
//   sum over edge subsets A of
//     (X-1)^(k(A)-k(E)) (Y-1)^(|A|-|V|+k_b(A)) (Z-1)^(k_u(A))
// where k/k_b/k_u count components of the spanning subgraph (V, A).
TriPoly signed_tutte_subset(const SignedGraph& g);

// Same polynomial by deletion-contraction.  With seed == 0 the lowest-index
// non-loop edge is processed at each step (switching an endpoint first when
// that edge is negative); a non-zero seed picks random non-loop edges instead,
// which must not change the result.
TriPoly signed_tutte_dc(const SignedGraph& g, unsigned seed = 0);

// u^k(G) * T(u+1, v+1, 1/u + 1); requires u != 0.
BigRat dichromatic(const SignedGraph& g, const BigRat& u, const BigRat& v);

// Parameters of the general deletion-contraction recurrence solved by the
// trivariate polynomial; gamma must be non-zero.
struct RecipeParams {
  BigRat alpha;
  BigRat beta;
  BigRat gamma;
  BigRat x;
  BigRat y;
  BigRat z;
};

// Evaluates the parametrized invariant.  When alpha and beta are both
// non-zero this is the closed form
//   alpha^rM(E) beta^(|E|-rF(E)) gamma^(rF(E)-rM(E)) T(x/alpha, y/beta, z/gamma);
// otherwise the subset expansion with the same parameters is used (it needs
// only gamma != 0).
BigRat recipe_evaluate(const SignedGraph& g, const RecipeParams& p);

// The enumeration problems whose answers are evaluations of the polynomial.
enum class CountKind {
  nz_flows,                    // nowhere-zero flows over a group
  proper_group_colorings,      // proper colorings with values in a group
  nz_potential_differences,    // nowhere-zero tensions induced by colorings
  nz_tensions_off_coset,       // nowhere-zero tensions with cycle sums in a fixed non-trivial coset
  proper_range_colorings,      // proper colorings with values in {0,+-1..+-n}
  proper_nonzero_range_colorings  // proper colorings with values in {+-1..+-n}
};

struct EvaluationPoint {
  BigRat x;
  BigRat y;
  BigRat z;
  BigRat prefactor;
  std::string meaning;
};

EvaluationPoint evaluation_point(CountKind kind, const SignedGraph& g, const FiniteAbelianGroup& group);
EvaluationPoint evaluation_point(CountKind kind, const SignedGraph& g, long n);

// prefactor * T(point), checked to be a non-negative integer.
BigInt count_by_evaluation(CountKind kind, const SignedGraph& g, const FiniteAbelianGroup& group);
BigInt count_by_evaluation(CountKind kind, const SignedGraph& g, long n);

// Nowhere-zero tension count via the polynomial: per connected component the
// two-point combination
//   (-1)^r(C) |2G| [ T(1-|G|, 0, 1-1/|2G|) + (|G|/|2G| - 1) T(1-|G|, 0, 1) ]
// for unbalanced components and the one-point evaluation for balanced ones,
// multiplied over components.
BigInt count_nz_tensions_eval(const SignedGraph& g, const FiniteAbelianGroup& group);

}  // namespace sgt
