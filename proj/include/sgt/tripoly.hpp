#pragma once

#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "sgt/numbers.hpp"

namespace sgt {

// A monomial X^x * Y^y * Z^z.
struct Mono {
  int x = 0;
  int y = 0;
  int z = 0;

  int degree() const { return x + y + z; }
  bool operator==(const Mono&) const = default;
};

// Graded lexicographic order, highest first: compare total degree, then
// exponents of X, Y, Z in that order.  Iterating a map with this comparator
// yields the canonical display order.
struct MonoGradedLexGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    if (a.x != b.x) return a.x > b.x;
    if (a.y != b.y) return a.y > b.y;
    return a.z > b.z;
  }
};

// Sparse trivariate polynomial in X, Y, Z with arbitrary-precision integer
// coefficients.  The map never stores zero coefficients, so equality of maps
// is equality of polynomials.
class TriPoly {
 public:
  using TermMap = std::map<Mono, BigInt, MonoGradedLexGreater>;

  TriPoly() = default;

  static TriPoly zero() { return TriPoly(); }
  static TriPoly one() { return constant(1); }
  static TriPoly constant(BigInt c);
  static TriPoly variable(char v, int exp = 1);        // v in {'X','Y','Z'}
  static TriPoly binomial_power(char v, long exp);     // (V - 1)^exp

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  void add_term(const Mono& m, const BigInt& c);

  int degree_x() const;
  int degree_y() const;
  int degree_z() const;
  int total_degree() const;

  TriPoly& operator+=(const TriPoly& o);
  TriPoly& operator-=(const TriPoly& o);
  TriPoly operator+(const TriPoly& o) const;
  TriPoly operator-(const TriPoly& o) const;
  TriPoly operator-() const;
  TriPoly operator*(const TriPoly& o) const;
  TriPoly& operator*=(const TriPoly& o);
  TriPoly scaled(const BigInt& c) const;
  bool operator==(const TriPoly& o) const { return terms_ == o.terms_; }

  BigRat eval(const BigRat& x, const BigRat& y, const BigRat& z) const;

  // Bivariate restriction at Z = z: maps (x-exp, y-exp) to the rational
  // coefficient of X^x Y^y.
  std::map<std::pair<int, int>, BigRat> substitute_z(const BigRat& z) const;

  // Substitutes Z := Y, merging exponents (used by specializations).
  TriPoly substitute_z_with_y() const;

  // Exact division by (V - 1)^exp; throws std::domain_error when any division
  // step leaves a remainder.
  TriPoly divide_by_binomial(char v, long exp) const;

  // Canonical text rendering, graded-lex, e.g. "X*Z^2 + Y*Z - Z^2 - Y + Z".
  std::string render() const;

  // Parses the rendered form back (whitespace-tolerant; accepts lowercase
  // variables and optional '*' between factors).  Round-trips with render().
  static TriPoly parse(const std::string& text);

 private:
  TermMap terms_;
};

// Assembles sum of multiplicity * (X-1)^a (Y-1)^b (Z-1)^c over the given
// exponent triples — the common final step of all subset expansions here.
TriPoly from_binomial_counts(const std::map<std::tuple<int, int, int>, BigInt>& counts);

}  // namespace sgt
