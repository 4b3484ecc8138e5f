#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "sgt/tripoly.hpp"

using namespace sgt;

namespace {

TriPoly X() { return TriPoly::variable('X'); }
TriPoly Y() { return TriPoly::variable('Y'); }
TriPoly Z() { return TriPoly::variable('Z'); }

// The three-variable polynomial of the bridge-with-two-negative-loops example:
// (Y - Z)(Z - 1) + X Z^2.
TriPoly handcuff_poly() {
  return (Y() - Z()) * (Z() - TriPoly::one()) + X() * Z() * Z();
}

TriPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 3), coeff(-4, 4);
  TriPoly p;
  const int terms = static_cast<int>(rng() % 6);
  for (int i = 0; i < terms; ++i)
    p.add_term(Mono{deg(rng), deg(rng), deg(rng)}, coeff(rng));
  return p;
}

BigRat rat(long n, long d = 1) { return BigRat(n, d); }

}  // namespace

TEST_CASE("binomial powers expand correctly") {
  CHECK(TriPoly::binomial_power('X', 1) == X() - TriPoly::one());
  CHECK(TriPoly::binomial_power('Y', 2) ==
        Y() * Y() - TriPoly::constant(2) * Y() + TriPoly::one());
  CHECK(TriPoly::binomial_power('Z', 0) == TriPoly::one());
}

TEST_CASE("product collapse: (X-1)(Z-1) + (Z-1) equals XZ - X") {
  const TriPoly p = TriPoly::binomial_power('X', 1) * TriPoly::binomial_power('Z', 1) +
                    TriPoly::binomial_power('Z', 1);
  CHECK(p == X() * Z() - X());
}

TEST_CASE("cancellation prunes zero terms") {
  TriPoly p = X();
  p -= X();
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(p.render() == "0");
}

TEST_CASE("evaluation at rational points") {
  CHECK(Z().eval(0, 0, rat(1, 2)) == rat(1, 2));
  CHECK(handcuff_poly().eval(0, -1, -1) == 0);
  CHECK(handcuff_poly().eval(0, -2, 0) == 2);
}

TEST_CASE("evaluation respects ring operations at random points") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const TriPoly a = random_poly(rng);
    const TriPoly b = random_poly(rng);
    const BigRat x = rat(num(rng), den(rng)), y = rat(num(rng), den(rng)), z = rat(num(rng), den(rng));
    CHECK((a + b).eval(x, y, z) == a.eval(x, y, z) + b.eval(x, y, z));
    CHECK((a * b).eval(x, y, z) == a.eval(x, y, z) * b.eval(x, y, z));
    CHECK((a - b).eval(x, y, z) == a.eval(x, y, z) - b.eval(x, y, z));
  }
}

TEST_CASE("ring axioms hold on random polynomials") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const TriPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == TriPoly::zero());
    CHECK(a * TriPoly::one() == a);
  }
}

TEST_CASE("substitute_z restricts to two variables") {
  const auto restricted = handcuff_poly().substitute_z(rat(1));
  // (Y-1)(1-1)... at Z=1: (Y-1)*0 + X = X
  REQUIRE(restricted.size() == 1);
  CHECK(restricted.at({1, 0}) == 1);

  const auto at_half = Z().substitute_z(rat(1, 2));
  REQUIRE(at_half.size() == 1);
  CHECK(at_half.at({0, 0}) == rat(1, 2));
}

TEST_CASE("substituting Y for Z merges exponents") {
  const TriPoly p = X() * Z() * Z() + Y() * Z();
  CHECK(p.substitute_z_with_y() == X() * Y() * Y() + Y() * Y());
}

TEST_CASE("exact division by binomials") {
  const TriPoly p = TriPoly::binomial_power('Z', 1) * X();
  CHECK(p.divide_by_binomial('Z', 1) == X());
  CHECK(p.divide_by_binomial('Z', 0) == p);
  CHECK_THROWS_AS(X().divide_by_binomial('Z', 1), std::domain_error);
  CHECK_THROWS_AS((X() + TriPoly::one()).divide_by_binomial('X', 1), std::domain_error);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const TriPoly a = random_poly(rng);
    for (char v : {'X', 'Y', 'Z'}) {
      const int e = static_cast<int>(rng() % 3);
      const TriPoly prod = a * TriPoly::binomial_power(v, e);
      CHECK(prod.divide_by_binomial(v, e) == a);
    }
  }
}

TEST_CASE("rendering is graded-lex with conventional signs") {
  CHECK(handcuff_poly().render() == "X*Z^2 + Y*Z - Z^2 - Y + Z");
  CHECK(TriPoly::one().render() == "1");
  CHECK(TriPoly::constant(-3).render() == "-3");
  CHECK((X() - Y()).render() == "X - Y");
  CHECK((TriPoly::constant(2) * X() * X() * Y()).render() == "2*X^2*Y");
  CHECK((-X()).render() == "-X");
  CHECK((Z() * Z() - X() * Y()).render() == "-X*Y + Z^2");
}

TEST_CASE("degree queries") {
  const TriPoly p = handcuff_poly();
  CHECK(p.degree_x() == 1);
  CHECK(p.degree_y() == 1);
  CHECK(p.degree_z() == 2);
  CHECK(p.total_degree() == 3);
  CHECK(TriPoly::zero().total_degree() == 0);
}

TEST_CASE("parse inverts render") {
  std::mt19937 rng(333);
  for (int trial = 0; trial < 200; ++trial) {
    const TriPoly p = random_poly(rng);
    CHECK(TriPoly::parse(p.render()) == p);
  }
  CHECK(TriPoly::parse("X*Z^2 + Y*Z - Z^2 - Y + Z") == handcuff_poly());
  CHECK(TriPoly::parse("  - 2 * x ^ 2 + 1") == TriPoly::constant(-2) * X() * X() + TriPoly::one());
  CHECK_THROWS_AS(TriPoly::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(TriPoly::parse("X +"), std::invalid_argument);
  CHECK_THROWS_AS(TriPoly::parse("W"), std::invalid_argument);
  CHECK_THROWS_AS(TriPoly::parse("2X $"), std::invalid_argument);
}

TEST_CASE("binomial count assembly matches direct expansion") {
  std::map<std::tuple<int, int, int>, BigInt> counts;
  counts[{1, 0, 2}] = 3;
  counts[{0, 1, 0}] = -2;
  counts[{0, 0, 0}] = 5;
  const TriPoly expected = TriPoly::binomial_power('X', 1).scaled(3) *
                               TriPoly::binomial_power('Z', 2) +
                           TriPoly::binomial_power('Y', 1).scaled(-2) + TriPoly::constant(5);
  CHECK(from_binomial_counts(counts) == expected);
}
