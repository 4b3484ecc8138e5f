#include "sgt/tripoly.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <vector>

namespace sgt {

TriPoly TriPoly::constant(BigInt c) {
  TriPoly p;
  if (c != 0) p.terms_[Mono{}] = std::move(c);
  return p;
}

TriPoly TriPoly::variable(char v, int exp) {
  if (exp < 0) throw std::domain_error("variable exponent must be non-negative");
  Mono m;
  switch (v) {
    case 'X': m.x = exp; break;
    case 'Y': m.y = exp; break;
    case 'Z': m.z = exp; break;
    default: throw std::invalid_argument("variable must be one of X, Y, Z");
  }
  TriPoly p;
  p.terms_[m] = 1;
  return p;
}

TriPoly TriPoly::binomial_power(char v, long exp) {
  if (exp < 0) throw std::domain_error("binomial_power: negative exponent");
  // (V - 1)^e = sum_i C(e,i) (-1)^(e-i) V^i
  std::vector<BigInt> row{1};
  for (long r = 1; r <= exp; ++r) {
    std::vector<BigInt> next(r + 1, 0);
    for (long i = 0; i < r; ++i) {
      next[i] += row[i];
      next[i + 1] += row[i];
    }
    row = std::move(next);
  }
  TriPoly p;
  for (long i = 0; i <= exp; ++i) {
    const BigInt coeff = ((exp - i) % 2 == 0) ? row[i] : -row[i];
    p += TriPoly::variable(v, static_cast<int>(i)).scaled(coeff);
  }
  return p;
}

void TriPoly::add_term(const Mono& m, const BigInt& c) {
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int TriPoly::degree_x() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.x);
  return d;
}
int TriPoly::degree_y() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.y);
  return d;
}
int TriPoly::degree_z() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.z);
  return d;
}
int TriPoly::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

TriPoly& TriPoly::operator+=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}
TriPoly& TriPoly::operator-=(const TriPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}
TriPoly TriPoly::operator+(const TriPoly& o) const {
  TriPoly r = *this;
  r += o;
  return r;
}
TriPoly TriPoly::operator-(const TriPoly& o) const {
  TriPoly r = *this;
  r -= o;
  return r;
}
TriPoly TriPoly::operator-() const { return scaled(-1); }

TriPoly TriPoly::operator*(const TriPoly& o) const {
  TriPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_)
      r.add_term(Mono{ma.x + mb.x, ma.y + mb.y, ma.z + mb.z}, ca * cb);
  return r;
}
TriPoly& TriPoly::operator*=(const TriPoly& o) { return *this = *this * o; }

TriPoly TriPoly::scaled(const BigInt& c) const {
  TriPoly r;
  if (c == 0) return r;
  for (const auto& [m, coeff] : terms_) r.terms_[m] = coeff * c;
  return r;
}

namespace {
std::vector<BigRat> power_cache(const BigRat& base, int up_to) {
  std::vector<BigRat> p(up_to + 1);
  p[0] = 1;
  for (int i = 1; i <= up_to; ++i) p[i] = p[i - 1] * base;
  return p;
}
}  // namespace

BigRat TriPoly::eval(const BigRat& x, const BigRat& y, const BigRat& z) const {
  const auto px = power_cache(x, degree_x());
  const auto py = power_cache(y, degree_y());
  const auto pz = power_cache(z, degree_z());
  BigRat acc = 0;
  for (const auto& [m, c] : terms_) acc += BigRat(c) * px[m.x] * py[m.y] * pz[m.z];
  return acc;
}

std::map<std::pair<int, int>, BigRat> TriPoly::substitute_z(const BigRat& z) const {
  const auto pz = power_cache(z, degree_z());
  std::map<std::pair<int, int>, BigRat> out;
  for (const auto& [m, c] : terms_) {
    auto& slot = out[{m.x, m.y}];
    slot += BigRat(c) * pz[m.z];
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

TriPoly TriPoly::substitute_z_with_y() const {
  TriPoly r;
  for (const auto& [m, c] : terms_) r.add_term(Mono{m.x, m.y + m.z, 0}, c);
  return r;
}

TriPoly TriPoly::divide_by_binomial(char v, long exp) const {
  if (exp < 0) throw std::domain_error("divide_by_binomial: negative exponent");
  if (v != 'X' && v != 'Y' && v != 'Z')
    throw std::invalid_argument("divide_by_binomial: variable must be X, Y or Z");
  TriPoly cur = *this;
  for (long round = 0; round < exp; ++round) {
    // Bucket terms by the two fixed exponents, then synthetically divide each
    // univariate slice by (V - 1).
    std::map<std::pair<int, int>, std::map<int, BigInt>> buckets;
    for (const auto& [m, c] : cur.terms_) {
      const int dv = v == 'X' ? m.x : v == 'Y' ? m.y : m.z;
      const std::pair<int, int> key = v == 'X'   ? std::pair{m.y, m.z}
                                      : v == 'Y' ? std::pair{m.x, m.z}
                                                 : std::pair{m.x, m.y};
      buckets[key][dv] = c;
    }
    TriPoly next;
    for (const auto& [key, slice] : buckets) {
      const int d = slice.rbegin()->first;
      std::vector<BigInt> a(d + 1, 0);
      for (const auto& [i, c] : slice) a[i] = c;
      std::vector<BigInt> q(std::max(d, 1), 0);
      BigInt carry = 0;  // runs the Horner recurrence q[i-1] = a[i] + q[i]
      for (int i = d; i >= 1; --i) {
        carry += a[i];
        q[i - 1] = carry;
      }
      if (carry + a[0] != 0)
        throw std::domain_error("divide_by_binomial: division leaves a remainder");
      for (int i = 0; i < d; ++i) {
        Mono m;
        if (v == 'X') m = Mono{i, key.first, key.second};
        else if (v == 'Y') m = Mono{key.first, i, key.second};
        else m = Mono{key.first, key.second, i};
        next.add_term(m, q[i]);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

std::string TriPoly::render() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    if (mag != 1 || m.degree() == 0) factors.push_back(mag.str());
    auto var = [&](char name, int exp) {
      if (exp == 0) return;
      std::string f(1, name);
      if (exp > 1) f += "^" + std::to_string(exp);
      factors.push_back(f);
    };
    var('X', m.x);
    var('Y', m.y);
    var('Z', m.z);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i];
    }
  }
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("polynomial parse error at position " + std::to_string(pos) + ": " + what);
  }
  BigInt integer() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits");
    return BigInt(s.substr(start, pos - start));
  }

  // term := [integer] { '*'? variable [ '^' integer ] }
  void term(TriPoly& acc, bool negative) {
    skip_ws();
    BigInt coeff = 1;
    Mono m;
    bool saw_anything = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      coeff = integer();
      saw_anything = true;
    }
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == '*') {
        ++pos;
        skip_ws();
      }
      if (pos >= s.size()) break;
      const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
      if (c != 'X' && c != 'Y' && c != 'Z') break;
      ++pos;
      long exp = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exp = static_cast<long>(integer());
      }
      if (c == 'X') m.x += static_cast<int>(exp);
      else if (c == 'Y') m.y += static_cast<int>(exp);
      else m.z += static_cast<int>(exp);
      saw_anything = true;
    }
    if (!saw_anything) fail("expected a term");
    acc.add_term(m, negative ? -coeff : coeff);
  }
};

}  // namespace

TriPoly TriPoly::parse(const std::string& text) {
  Parser p(text);
  TriPoly acc;
  if (p.done()) p.fail("empty input");
  bool negative = false;
  p.skip_ws();
  if (p.s[p.pos] == '-') {
    negative = true;
    ++p.pos;
  } else if (p.s[p.pos] == '+') {
    ++p.pos;
  }
  p.term(acc, negative);
  while (!p.done()) {
    const char c = p.s[p.pos];
    if (c == '+') negative = false;
    else if (c == '-') negative = true;
    else p.fail("expected '+' or '-'");
    ++p.pos;
    p.term(acc, negative);
  }
  return acc;
}

TriPoly from_binomial_counts(const std::map<std::tuple<int, int, int>, BigInt>& counts) {
  std::map<int, TriPoly> bx, by, bz;
  auto cached = [](std::map<int, TriPoly>& cache, char v, int e) -> const TriPoly& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, TriPoly::binomial_power(v, e)).first;
    return it->second;
  };
  TriPoly acc;
  for (const auto& [abc, mult] : counts) {
    const auto& [a, b, c] = abc;
    TriPoly term = cached(bx, 'X', a) * cached(by, 'Y', b) * cached(bz, 'Z', c);
    acc += term.scaled(mult);
  }
  return acc;
}

}  // namespace sgt
