#pragma once

#include <string>
#include <vector>

namespace sgt {

// An element of a finite abelian group presented as a product of cyclic
// factors; residues[i] lives in Z_{moduli[i]}.
struct GroupElement {
  std::vector<int> residues;

  bool operator==(const GroupElement&) const = default;
  bool operator<(const GroupElement& o) const { return residues < o.residues; }
};

// Direct product of cyclic groups given by a list of moduli (each >= 2 after
// construction; Z1 factors are dropped, so the trivial group has no factors).
class FiniteAbelianGroup {
 public:
  explicit FiniteAbelianGroup(std::vector<long> moduli = {});

  // Parses specs like "Z4xZ2xZ3" (case-insensitive).  "Z1", "z1" and the
  // empty string denote the trivial group.
  static FiniteAbelianGroup parse(const std::string& spec);

  const std::vector<long>& moduli() const { return moduli_; }
  long order() const { return order_; }          // |G|
  long two_g_index() const { return two_g_; }    // |2G| where 2G = {x+x}
  long two_torsion_order() const { return order_ / two_g_; }  // |{x : x+x = 0}|

  GroupElement zero() const;
  bool is_zero(const GroupElement& a) const;
  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement neg(const GroupElement& a) const;
  GroupElement scale(long k, const GroupElement& a) const;

  // Membership in the doubling subgroup 2G.
  bool in_two_g(const GroupElement& a) const;

  // Canonical representative of the coset a + 2G: the lexicographically
  // smallest element of the coset (cosets factor through the cyclic factors).
  GroupElement coset_rep_of(const GroupElement& a) const;

  // All elements in lexicographic residue order; element_at/index_of convert
  // between that order and flat indices 0..order()-1.
  std::vector<GroupElement> elements() const;
  std::vector<GroupElement> coset_reps() const;  // canonical transversal of G/2G
  GroupElement element_at(long index) const;
  long index_of(const GroupElement& a) const;

  std::string to_string() const;

  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  void check_element(const GroupElement& a) const;

  std::vector<long> moduli_;
  std::vector<long> strides_;  // strides_[i] = product of moduli_[j] for j > i
  long order_ = 1;
  long two_g_ = 1;
};

// Flat-index operation tables for tight enumeration loops.  Index 0 is the
// zero element and indices follow the lexicographic element order.
struct DenseGroup {
  int n = 1;
  std::vector<int> add;        // n*n, add[a*n+b]
  std::vector<int> neg;        // n
  std::vector<int> dbl;        // n, dbl[a] = a+a
  std::vector<char> in2g;      // n
  std::vector<int> coset_rep;  // n, flat index of the canonical rep of a+2G

  int plus(int a, int b) const { return add[a * n + b]; }
};

// Builds dense tables; throws std::invalid_argument when the order exceeds
// 65536 (enumeration at such sizes is outside the supported budget anyway).
DenseGroup dense_tables(const FiniteAbelianGroup& g);

}  // namespace sgt
