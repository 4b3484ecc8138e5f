#pragma once

#include <iosfwd>
#include <vector>

#include "sgt/signed_graph.hpp"
#include "sgt/tripoly.hpp"

namespace sgt {

inline constexpr int kMaxMatroidGround = 20;

// A matroid on ground set {0..n-1} held as a fully materialized rank table
// (2^n entries).  Ground sets are capped at kMaxMatroidGround.
class RankOracle {
 public:
  RankOracle(int ground_size, std::vector<std::uint8_t> rank_table);

  int ground_size() const { return n_; }
  int rank(EdgeSubset a) const { return rank_[a]; }
  int rank_full() const { return rank_[full_set()]; }
  EdgeSubset full_set() const { return n_ == 0 ? 0 : ((EdgeSubset{1} << n_) - 1); }

  // Checks rank axioms, throwing std::invalid_argument naming the violated
  // axiom.  Normalization and unit increase are checked on every ground size;
  // submodularity is checked exhaustively for ground sizes <= 8.
  void validate() const;

  // All circuits (minimal dependent sets) as bitmasks, ascending.
  std::vector<EdgeSubset> circuits() const;

  RankOracle dual() const;

  bool operator==(const RankOracle&) const = default;

 private:
  int n_;
  std::vector<std::uint8_t> rank_;
};

RankOracle cycle_matroid(const SignedGraph& g);
RankOracle frame_matroid(const SignedGraph& g);
RankOracle uniform_matroid(int rank, int ground_size);
RankOracle matroid_from_bases(int ground_size, const std::vector<EdgeSubset>& bases);

// Rank-generating polynomial of an ordered pair of matroids on the same
// ground set:
//   sum over subsets A of
//     (X-1)^(r1(E)-r1(A)) (Y-1)^(|A|-r2(A)) (Z-1)^(r2(A)+r1(E)-r1(A)).
TriPoly joint_tutte(const RankOracle& m1, const RankOracle& m2);

// Classical Tutte polynomial of a single matroid (Z-degree zero).
TriPoly matroid_tutte(const RankOracle& m);

// Recovers the first matroid's Tutte polynomial from the pair polynomial:
// T1(X,Y) = (Y-1)^(-r1(E)) S(X,Y,Y), computed by exact substitution and
// division.
TriPoly specialize_to_m1(const TriPoly& s, int r1_full);

// Recovers the second matroid's Tutte polynomial:
// T2(X,Y) = (X-1)^(r2(E)) S(X,Y,X/(X-1)), computed by clearing denominators
// and dividing exactly.
TriPoly specialize_to_m2(const TriPoly& s, int r2_full);

// True iff every circuit of m2 is a union of circuits of m1 (both on the same
// ground set).
bool is_perspective(const RankOracle& m2, const RankOracle& m1);

// File format: a "ground <n>" line followed by either a "ranks" line plus 2^n
// integers in bitmask order, or a "bases" line plus one bitmask per line
// (decimal, 0x hex or 0b binary).  '#' starts a comment; blank lines are
// skipped.  Loaded matroids are validated.
RankOracle load_matroid(std::istream& in);
void save_matroid(std::ostream& out, const RankOracle& m);

}  // namespace sgt
