#include "sgt/matroid.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sgt {

namespace {

std::string mask_str(EdgeSubset a) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < 64; ++i) {
    if (!(a & (EdgeSubset{1} << i))) continue;
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

}  // namespace

RankOracle::RankOracle(int ground_size, std::vector<std::uint8_t> rank_table)
    : n_(ground_size), rank_(std::move(rank_table)) {
  if (n_ < 0 || n_ > kMaxMatroidGround)
    throw std::invalid_argument("matroid ground size must be between 0 and " +
                                std::to_string(kMaxMatroidGround));
  if (rank_.size() != (std::size_t{1} << n_))
    throw std::invalid_argument("rank table must have exactly 2^n entries");
}

void RankOracle::validate() const {
  if (rank_[0] != 0)
    throw std::invalid_argument("rank axiom violated: normalization (rank of the empty set is " +
                                std::to_string(rank_[0]) + ", expected 0)");
  const EdgeSubset full = full_set();
  for (EdgeSubset a = 0; a <= full && full != 0; ++a) {
    for (int e = 0; e < n_; ++e) {
      if (a & edge_bit(e)) continue;
      const int before = rank_[a];
      const int after = rank_[a | edge_bit(e)];
      if (after < before || after > before + 1)
        throw std::invalid_argument("rank axiom violated: unit increase at A=" + mask_str(a) +
                                    ", e=" + std::to_string(e));
    }
    if (a == full) break;
  }
  if (n_ <= 8) {
    for (EdgeSubset a = 0; a <= full; ++a) {
      for (EdgeSubset b = a; b <= full; ++b) {
        if (rank_[a | b] + rank_[a & b] > rank_[a] + rank_[b])
          throw std::invalid_argument("rank axiom violated: submodularity at A=" + mask_str(a) +
                                      ", B=" + mask_str(b));
        if (b == full) break;
      }
      if (a == full) break;
    }
  }
}

std::vector<EdgeSubset> RankOracle::circuits() const {
  std::vector<EdgeSubset> out;
  const EdgeSubset full = full_set();
  for (EdgeSubset c = 1; c != 0 && c <= full; ++c) {
    const int size = popcount(c);
    if (rank_[c] >= size) continue;  // independent
    bool minimal = true;
    for (int e = 0; e < n_ && minimal; ++e) {
      if (!(c & edge_bit(e))) continue;
      if (rank_[c & ~edge_bit(e)] < size - 1) minimal = false;
    }
    if (minimal) out.push_back(c);
  }
  return out;
}

RankOracle RankOracle::dual() const {
  const EdgeSubset full = full_set();
  const int r_full = rank_[full];
  std::vector<std::uint8_t> table(rank_.size());
  for (EdgeSubset a = 0; a < rank_.size(); ++a)
    table[a] = static_cast<std::uint8_t>(rank_[full & ~a] + popcount(a) - r_full);
  return RankOracle(n_, std::move(table));
}

namespace {

RankOracle graph_based_matroid(const SignedGraph& g, bool frame) {
  validate_graph(g);
  const int n = g.edge_count();
  if (n > kMaxMatroidGround)
    throw std::invalid_argument("matroid operations are limited to " +
                                std::to_string(kMaxMatroidGround) + " edges");
  std::vector<std::uint8_t> table(std::size_t{1} << n);
  for (EdgeSubset a = 0; a < table.size(); ++a) {
    const ComponentProfile p = component_profile(g, a);
    table[a] = static_cast<std::uint8_t>(g.vertex_count - (frame ? p.balanced : p.total));
  }
  return RankOracle(n, std::move(table));
}

}  // namespace

RankOracle cycle_matroid(const SignedGraph& g) { return graph_based_matroid(g, false); }
RankOracle frame_matroid(const SignedGraph& g) { return graph_based_matroid(g, true); }

RankOracle uniform_matroid(int rank, int ground_size) {
  if (rank < 0 || rank > ground_size) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  std::vector<std::uint8_t> table(std::size_t{1} << ground_size);
  for (EdgeSubset a = 0; a < table.size(); ++a)
    table[a] = static_cast<std::uint8_t>(std::min(rank, popcount(a)));
  return RankOracle(ground_size, std::move(table));
}

RankOracle matroid_from_bases(int ground_size, const std::vector<EdgeSubset>& bases) {
  if (bases.empty()) throw std::invalid_argument("matroid needs at least one basis");
  if (ground_size < 0 || ground_size > kMaxMatroidGround)
    throw std::invalid_argument("matroid ground size must be between 0 and " +
                                std::to_string(kMaxMatroidGround));
  const EdgeSubset full = ground_size == 0 ? 0 : ((EdgeSubset{1} << ground_size) - 1);
  const int r = popcount(bases.front());
  for (EdgeSubset b : bases) {
    if (b & ~full) throw std::invalid_argument("basis " + mask_str(b) + " leaves the ground set");
    if (popcount(b) != r)
      throw std::invalid_argument("bases must all have the same size; " + mask_str(b) +
                                  " differs from " + mask_str(bases.front()));
  }
  std::vector<std::uint8_t> table(std::size_t{1} << ground_size);
  for (EdgeSubset a = 0; a < table.size(); ++a) {
    int best = 0;
    for (EdgeSubset b : bases) best = std::max(best, popcount(a & b));
    table[a] = static_cast<std::uint8_t>(best);
  }
  RankOracle m(ground_size, std::move(table));
  m.validate();
  return m;
}

TriPoly joint_tutte(const RankOracle& m1, const RankOracle& m2) {
  if (m1.ground_size() != m2.ground_size())
    throw std::invalid_argument("joint_tutte: matroids must share a ground set");
  const EdgeSubset full = m1.full_set();
  const int r1_full = m1.rank_full();
  std::map<std::tuple<int, int, int>, BigInt> counts;
  for (EdgeSubset a = 0;; ++a) {
    const int co1 = r1_full - m1.rank(a);
    const int nu2 = popcount(a) - m2.rank(a);
    counts[{co1, nu2, m2.rank(a) + co1}] += 1;
    if (a == full) break;
  }
  return from_binomial_counts(counts);
}

TriPoly matroid_tutte(const RankOracle& m) {
  const EdgeSubset full = m.full_set();
  const int r_full = m.rank_full();
  std::map<std::tuple<int, int, int>, BigInt> counts;
  for (EdgeSubset a = 0;; ++a) {
    counts[{r_full - m.rank(a), popcount(a) - m.rank(a), 0}] += 1;
    if (a == full) break;
  }
  return from_binomial_counts(counts);
}

TriPoly specialize_to_m1(const TriPoly& s, int r1_full) {
  return s.substitute_z_with_y().divide_by_binomial('Y', r1_full);
}

TriPoly specialize_to_m2(const TriPoly& s, int r2_full) {
  // Clear (X-1) denominators with a shift large enough for every Z-degree,
  // then divide the surplus back out; cancellation makes the result exact.
  const int shift = std::max(s.degree_z(), r2_full);
  TriPoly cleared;
  for (const auto& [m, c] : s.terms()) {
    TriPoly term = TriPoly::variable('X', m.x + m.z) * TriPoly::variable('Y', m.y) *
                   TriPoly::binomial_power('X', shift - m.z);
    cleared += term.scaled(c);
  }
  return cleared.divide_by_binomial('X', shift - r2_full);
}

bool is_perspective(const RankOracle& m2, const RankOracle& m1) {
  if (m1.ground_size() != m2.ground_size())
    throw std::invalid_argument("is_perspective: matroids must share a ground set");
  const auto c1 = m1.circuits();
  for (EdgeSubset c : m2.circuits()) {
    // A set is a union of circuits iff each of its elements lies inside a
    // contained circuit.
    for (int e = 0; e < m2.ground_size(); ++e) {
      if (!(c & edge_bit(e))) continue;
      const bool covered = std::any_of(c1.begin(), c1.end(), [&](EdgeSubset cc) {
        return (cc & ~c) == 0 && (cc & edge_bit(e));
      });
      if (!covered) return false;
    }
  }
  return true;
}

namespace {

// Reads the next token, skipping whitespace and '#' comments.
bool next_token(std::istream& in, std::string& tok) {
  while (in >> tok) {
    if (tok[0] == '#') {
      std::string rest;
      std::getline(in, rest);
      continue;
    }
    return true;
  }
  return false;
}

EdgeSubset parse_mask(const std::string& tok) {
  try {
    std::size_t used = 0;
    unsigned long long value = 0;
    if (tok.rfind("0x", 0) == 0 || tok.rfind("0X", 0) == 0) {
      value = std::stoull(tok.substr(2), &used, 16);
      used += 2;
    } else if (tok.rfind("0b", 0) == 0 || tok.rfind("0B", 0) == 0) {
      value = std::stoull(tok.substr(2), &used, 2);
      used += 2;
    } else {
      value = std::stoull(tok, &used, 10);
    }
    if (used != tok.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed bitmask '" + tok + "'");
  }
}

}  // namespace

RankOracle load_matroid(std::istream& in) {
  std::string tok;
  if (!next_token(in, tok) || tok != "ground")
    throw std::invalid_argument("matroid file must start with 'ground <n>'");
  if (!next_token(in, tok)) throw std::invalid_argument("matroid file: missing ground size");
  int n = 0;
  try {
    n = std::stoi(tok);
  } catch (const std::exception&) {
    throw std::invalid_argument("matroid file: malformed ground size '" + tok + "'");
  }
  if (n < 0 || n > kMaxMatroidGround)
    throw std::invalid_argument("matroid file: ground size must be between 0 and " +
                                std::to_string(kMaxMatroidGround));
  if (!next_token(in, tok))
    throw std::invalid_argument("matroid file: expected 'ranks' or 'bases'");
  if (tok == "ranks") {
    std::vector<std::uint8_t> table(std::size_t{1} << n);
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (!next_token(in, tok))
        throw std::invalid_argument("matroid file: expected " + std::to_string(table.size()) +
                                    " rank entries, got " + std::to_string(i));
      int r = 0;
      try {
        r = std::stoi(tok);
      } catch (const std::exception&) {
        throw std::invalid_argument("matroid file: malformed rank entry '" + tok + "'");
      }
      if (r < 0 || r > n)
        throw std::invalid_argument("matroid file: rank entry " + std::to_string(r) +
                                    " outside 0.." + std::to_string(n));
      table[i] = static_cast<std::uint8_t>(r);
    }
    if (next_token(in, tok))
      throw std::invalid_argument("matroid file: unexpected trailing token '" + tok + "'");
    RankOracle m(n, std::move(table));
    m.validate();
    return m;
  }
  if (tok == "bases") {
    std::vector<EdgeSubset> bases;
    while (next_token(in, tok)) bases.push_back(parse_mask(tok));
    return matroid_from_bases(n, bases);
  }
  throw std::invalid_argument("matroid file: expected 'ranks' or 'bases', got '" + tok + "'");
}

void save_matroid(std::ostream& out, const RankOracle& m) {
  out << "ground " << m.ground_size() << "\n";
  out << "ranks\n";
  const EdgeSubset full = m.full_set();
  for (EdgeSubset a = 0;; ++a) {
    out << m.rank(a);
    out << ((a % 16 == 15 || a == full) ? "\n" : " ");
    if (a == full) break;
  }
}

}  // namespace sgt
