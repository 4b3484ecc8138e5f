#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sgt/matroid.hpp"
#include "sgt/signed_graph.hpp"
#include "sgt/tripoly.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

namespace {

SignedGraph negative_loop() { return {1, {{0, 0, -1}}}; }
SignedGraph k2(int sign = +1) { return {2, {{0, 1, sign}}}; }
SignedGraph handcuff() { return {2, {{0, 1, +1}, {0, 0, -1}, {1, 1, -1}}}; }
SignedGraph triangle(int neg_edges = 0) {
  SignedGraph g{3, {{0, 1, +1}, {1, 2, +1}, {0, 2, +1}}};
  for (int i = 0; i < neg_edges; ++i) g.edges[i].sign = -1;
  return g;
}

std::vector<SignedGraph> small_battery(int max_v, int max_e) {
  return signed_graph_battery(max_v, max_e);
}

bool throws_mentioning(const std::function<void()>& fn, const std::string& needle) {
  try {
    fn();
  } catch (const std::invalid_argument& e) {
    return std::string(e.what()).find(needle) != std::string::npos;
  }
  return false;
}

// First duality identity, right-hand side: given S = sum c_ijk X^i Y^j Z^k on a
// ground set of size m, build sum c_ijk Y^i X^j Z^k (Z-1)^(m-k), which equals
// (Z-1)^m S(Y, X, Z/(Z-1)) with denominators cleared.
TriPoly swap_and_clear(const TriPoly& s, int ground) {
  TriPoly out;
  for (const auto& [mono, coeff] : s.terms()) {
    TriPoly term = TriPoly::variable('Y', mono.x) * TriPoly::variable('X', mono.y) *
                   TriPoly::variable('Z', mono.z) * TriPoly::binomial_power('Z', ground - mono.z);
    out += term.scaled(coeff);
  }
  return out;
}

// Second duality identity, checked with denominators cleared.  With
// c = |E| - r1(E) - r2(E) and D = deg_Z(S), the claim
//   S' = (X-1)^(-r1E) (Y-1)^(r2E) (Z-1)^c S(Y, X, 1 + (X-1)(Z-1)/(Y-1))
// becomes the polynomial identity
//   S' (X-1)^r1E (Y-1)^max(0, D-r2E) (Z-1)^max(0,-c)
//     = P (Y-1)^max(0, r2E-D) (Z-1)^max(0, c)
// where P = sum c_ijk Y^i X^j ((Y-1) + (X-1)(Z-1))^k (Y-1)^(D-k).
bool second_duality_holds(const TriPoly& s_dual, const TriPoly& s, int ground, int r1_full,
                          int r2_full) {
  const int d = s.degree_z();
  const int c = ground - r1_full - r2_full;
  const TriPoly core = TriPoly::binomial_power('Y', 1) +
                       TriPoly::binomial_power('X', 1) * TriPoly::binomial_power('Z', 1);
  TriPoly p;
  std::vector<TriPoly> core_pow(d + 1);
  core_pow[0] = TriPoly::one();
  for (int k = 1; k <= d; ++k) core_pow[k] = core_pow[k - 1] * core;
  for (const auto& [mono, coeff] : s.terms()) {
    TriPoly term = TriPoly::variable('Y', mono.x) * TriPoly::variable('X', mono.y) *
                   core_pow[mono.z] * TriPoly::binomial_power('Y', d - mono.z);
    p += term.scaled(coeff);
  }
  const TriPoly lhs = s_dual * TriPoly::binomial_power('X', r1_full) *
                      TriPoly::binomial_power('Y', std::max(0, d - r2_full)) *
                      TriPoly::binomial_power('Z', std::max(0, -c));
  const TriPoly rhs = p * TriPoly::binomial_power('Y', std::max(0, r2_full - d)) *
                      TriPoly::binomial_power('Z', std::max(0, c));
  return lhs == rhs;
}

}  // namespace

TEST_CASE("cycle matroid ranks of the handcuff") {
  const auto m = cycle_matroid(handcuff());
  CHECK(m.ground_size() == 3);
  CHECK(m.rank(0) == 0);
  CHECK(m.rank(0b001) == 1);  // the bridge alone spans both vertices
  CHECK(m.rank(0b010) == 0);  // a loop has no rank
  CHECK(m.rank(0b110) == 0);
  CHECK(m.rank(0b111) == 1);
  CHECK(m.rank_full() == 1);
}

TEST_CASE("frame matroid of the handcuff is the uniform matroid U_{2,3}") {
  const auto f = frame_matroid(handcuff());
  CHECK(f == uniform_matroid(2, 3));
  CHECK(f.circuits() == std::vector<EdgeSubset>{0b111});
}

TEST_CASE("a lone negative loop is a frame coloop but a cycle-matroid loop") {
  const auto g = negative_loop();
  CHECK(cycle_matroid(g).rank_full() == 0);
  CHECK(frame_matroid(g).rank(0b1) == 1);
  CHECK(cycle_matroid(g).circuits() == std::vector<EdgeSubset>{0b1});
  CHECK(frame_matroid(g).circuits().empty());
}

TEST_CASE("balanced graphs have identical cycle and frame matroids") {
  const std::vector<SignedGraph> balanced{k2(), triangle(), triangle(2)};
  for (const auto& g : balanced) {
    CHECK(component_profile(g, g.full_edge_set()).unbalanced == 0);
    CHECK(cycle_matroid(g) == frame_matroid(g));
  }
}

TEST_CASE("frame rank exceeds cycle rank exactly by the unbalanced component count") {
  for (const auto& g : small_battery(3, 3)) {
    const auto m = cycle_matroid(g);
    const auto f = frame_matroid(g);
    for (EdgeSubset a = 0; a <= g.full_edge_set(); ++a)
      CHECK(f.rank(a) - m.rank(a) == component_profile(g, a).unbalanced);
  }
}

TEST_CASE("cycle and frame matroids satisfy the rank axioms") {
  for (const auto& g : small_battery(3, 3)) {
    CHECK_NOTHROW(cycle_matroid(g).validate());
    CHECK_NOTHROW(frame_matroid(g).validate());
  }
}

TEST_CASE("validation names the violated axiom") {
  CHECK(throws_mentioning([] { RankOracle(1, {1, 1}).validate(); }, "normalization"));
  CHECK(throws_mentioning([] { RankOracle(1, {0, 2}).validate(); }, "unit increase"));
  // Normalized with unit increases, but r({0}) + r({1}) < r({0,1}) + r({}).
  CHECK(throws_mentioning([] { RankOracle(2, {0, 0, 0, 1}).validate(); }, "submodularity"));
}

TEST_CASE("dual rank oracle") {
  const auto m = cycle_matroid(k2());
  const auto d = m.dual();
  CHECK(d.rank(0b1) == 0);  // the edge becomes a loop
  CHECK(d.rank_full() == 0);

  const auto free2 = uniform_matroid(2, 2);
  CHECK(free2.dual() == uniform_matroid(0, 2));

  for (const auto& g : small_battery(2, 3)) {
    for (const auto& m2 : {cycle_matroid(g), frame_matroid(g)}) {
      CHECK(m2.dual().dual() == m2);
      CHECK(m2.dual().rank_full() == m2.ground_size() - m2.rank_full());
      CHECK_NOTHROW(m2.dual().validate());
    }
  }
}

TEST_CASE("matroid reconstructed from its bases") {
  CHECK(matroid_from_bases(2, {0b01, 0b10}) == uniform_matroid(1, 2));
  const auto f = frame_matroid(handcuff());
  CHECK(matroid_from_bases(3, {0b011, 0b101, 0b110}) == f);
  CHECK(throws_mentioning([] { matroid_from_bases(2, {0b01, 0b11}); }, "same size"));
}

TEST_CASE("joint polynomial of the K2 pair") {
  const auto m = cycle_matroid(k2());
  CHECK(joint_tutte(m, m) == TriPoly::parse("X*Z - X"));
}

TEST_CASE("joint polynomial of the negative-loop pair is Z") {
  const auto g = negative_loop();
  CHECK(joint_tutte(cycle_matroid(g), frame_matroid(g)) == TriPoly::variable('Z'));
}

TEST_CASE("joint polynomial on the empty ground set is 1") {
  const RankOracle empty(0, {0});
  CHECK(joint_tutte(empty, empty) == TriPoly::one());
}

TEST_CASE("classical Tutte polynomials of small matroids") {
  CHECK(matroid_tutte(uniform_matroid(1, 1)) == TriPoly::variable('X'));
  CHECK(matroid_tutte(uniform_matroid(0, 1)) == TriPoly::variable('Y'));
  CHECK(matroid_tutte(uniform_matroid(1, 2)) == TriPoly::parse("X + Y"));
  CHECK(matroid_tutte(cycle_matroid(triangle())) == TriPoly::parse("X^2 + X + Y"));
}

TEST_CASE("specializations recover both Tutte polynomials from the joint polynomial") {
  const auto check_pair = [](const RankOracle& m1, const RankOracle& m2) {
    const auto s = joint_tutte(m1, m2);
    CHECK(specialize_to_m1(s, m1.rank_full()) == matroid_tutte(m1));
    CHECK(specialize_to_m2(s, m2.rank_full()) == matroid_tutte(m2));
  };
  for (const auto& g : small_battery(3, 3)) check_pair(cycle_matroid(g), frame_matroid(g));
  check_pair(uniform_matroid(1, 2), uniform_matroid(2, 2));
  check_pair(uniform_matroid(2, 3), uniform_matroid(1, 3));
}

TEST_CASE("specialization hand examples") {
  const auto g = negative_loop();
  const auto s = joint_tutte(cycle_matroid(g), frame_matroid(g));
  // The frame matroid is a single coloop.
  CHECK(specialize_to_m2(s, 1) == TriPoly::variable('X'));
  CHECK(specialize_to_m1(s, 0) == TriPoly::variable('Y'));
}

TEST_CASE("first duality identity on graph matroid pairs") {
  for (const auto& g : small_battery(2, 4)) {
    const auto m1 = cycle_matroid(g);
    const auto m2 = frame_matroid(g);
    const auto s = joint_tutte(m1, m2);
    const auto s_dual = joint_tutte(m2.dual(), m1.dual());
    CHECK(s_dual == swap_and_clear(s, g.edge_count()));
  }
}

TEST_CASE("second duality identity on graph matroid pairs") {
  for (const auto& g : small_battery(2, 4)) {
    const auto m1 = cycle_matroid(g);
    const auto m2 = frame_matroid(g);
    const auto s = joint_tutte(m1, m2);
    const auto s_dual = joint_tutte(m1.dual(), m2.dual());
    CHECK(second_duality_holds(s_dual, s, g.edge_count(), m1.rank_full(), m2.rank_full()));
  }
}

TEST_CASE("perspective pairs require circuits to decompose") {
  // Identical matroids are trivially perspectives.
  const auto f = frame_matroid(handcuff());
  CHECK(is_perspective(f, f));
  // Balanced graphs: frame and cycle matroids coincide.
  const auto t = triangle();
  CHECK(is_perspective(frame_matroid(t), cycle_matroid(t)));
  // The handcuff's frame circuit {bridge, loop, loop} is not a union of
  // cycle-matroid circuits (the bridge lies in none).
  CHECK_FALSE(is_perspective(frame_matroid(handcuff()), cycle_matroid(handcuff())));
  // The zero matroid's circuit {e} is not a union of free-matroid circuits.
  CHECK_FALSE(is_perspective(uniform_matroid(0, 1), uniform_matroid(1, 1)));
  // U_{1,2} -> U_{0,2}: the circuit {0,1} is the union of the loops {0}, {1}.
  CHECK(is_perspective(uniform_matroid(1, 2), uniform_matroid(0, 2)));
}

TEST_CASE("matroid files round-trip in both formats") {
  const auto f = frame_matroid(handcuff());
  std::ostringstream rank_text;
  save_matroid(rank_text, f);
  std::istringstream back(rank_text.str());
  CHECK(load_matroid(back) == f);

  std::istringstream bases_text("# handcuff frame matroid\nground 3\nbases\n0b011\n0x5\n6\n");
  CHECK(load_matroid(bases_text) == f);
}

TEST_CASE("matroid files reject corrupt rank tables by naming the axiom") {
  std::istringstream text("ground 2\nranks\n0 0 0 2\n");
  CHECK(throws_mentioning([&] { load_matroid(text); }, "unit increase"));
}

TEST_CASE("matroid files reject malformed input") {
  std::istringstream missing("ranks\n0\n");
  CHECK(throws_mentioning([&] { load_matroid(missing); }, "ground"));
  std::istringstream short_table("ground 2\nranks\n0 1\n");
  CHECK(throws_mentioning([&] { load_matroid(short_table); }, "expected 4"));
}
