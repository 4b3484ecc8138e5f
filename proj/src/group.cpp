#include "sgt/group.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace sgt {

namespace {
constexpr long kMaxOrder = 1'000'000'000L;
}

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<long> moduli) {
  for (long m : moduli) {
    if (m <= 0) throw std::invalid_argument("group moduli must be positive");
    if (m == 1) continue;  // trivial factors carry nothing
    moduli_.push_back(m);
    if (order_ > kMaxOrder / m) throw std::invalid_argument("group order too large");
    order_ *= m;
    two_g_ *= m / std::gcd(2L, m);
  }
  strides_.assign(moduli_.size(), 1);
  for (int i = static_cast<int>(moduli_.size()) - 2; i >= 0; --i)
    strides_[i] = strides_[i + 1] * moduli_[i + 1];
}

FiniteAbelianGroup FiniteAbelianGroup::parse(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  std::vector<long> moduli;
  if (s.empty()) return FiniteAbelianGroup(moduli);
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'z')
      throw std::invalid_argument("malformed group spec '" + spec + "': expected 'Z<n>' at position " +
                                  std::to_string(pos));
    ++pos;
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos)
      throw std::invalid_argument("malformed group spec '" + spec + "': missing modulus");
    moduli.push_back(std::stol(s.substr(start, pos - start)));
    if (pos < s.size()) {
      if (s[pos] != 'x')
        throw std::invalid_argument("malformed group spec '" + spec + "': expected 'x' separator");
      ++pos;
      if (pos == s.size())
        throw std::invalid_argument("malformed group spec '" + spec + "': trailing separator");
    }
  }
  return FiniteAbelianGroup(moduli);
}

void FiniteAbelianGroup::check_element(const GroupElement& a) const {
  if (a.residues.size() != moduli_.size())
    throw std::invalid_argument("group element has wrong number of residues");
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (a.residues[i] < 0 || a.residues[i] >= moduli_[i])
      throw std::invalid_argument("group element residue out of range");
}

GroupElement FiniteAbelianGroup::zero() const {
  return GroupElement{std::vector<int>(moduli_.size(), 0)};
}

bool FiniteAbelianGroup::is_zero(const GroupElement& a) const {
  check_element(a);
  return std::all_of(a.residues.begin(), a.residues.end(), [](int r) { return r == 0; });
}

GroupElement FiniteAbelianGroup::add(const GroupElement& a, const GroupElement& b) const {
  check_element(a);
  check_element(b);
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out.residues[i] = static_cast<int>((a.residues[i] + static_cast<long>(b.residues[i])) % moduli_[i]);
  return out;
}

GroupElement FiniteAbelianGroup::neg(const GroupElement& a) const {
  check_element(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out.residues[i] = a.residues[i] == 0 ? 0 : static_cast<int>(moduli_[i] - a.residues[i]);
  return out;
}

GroupElement FiniteAbelianGroup::scale(long k, const GroupElement& a) const {
  check_element(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const long m = moduli_[i];
    out.residues[i] = static_cast<int>(((a.residues[i] * (k % m)) % m + m) % m);
  }
  return out;
}

bool FiniteAbelianGroup::in_two_g(const GroupElement& a) const {
  check_element(a);
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    if (moduli_[i] % 2 == 0 && a.residues[i] % 2 != 0) return false;
  return true;
}

GroupElement FiniteAbelianGroup::coset_rep_of(const GroupElement& a) const {
  check_element(a);
  GroupElement out = a;
  for (std::size_t i = 0; i < moduli_.size(); ++i)
    out.residues[i] = moduli_[i] % 2 == 0 ? a.residues[i] % 2 : 0;
  return out;
}

std::vector<GroupElement> FiniteAbelianGroup::elements() const {
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(order_));
  for (long i = 0; i < order_; ++i) out.push_back(element_at(i));
  return out;
}

std::vector<GroupElement> FiniteAbelianGroup::coset_reps() const {
  std::vector<GroupElement> out;
  GroupElement cur = zero();
  const long count = order_ / two_g_;
  out.reserve(static_cast<std::size_t>(count));
  // Odometer over {0} (odd factor) or {0,1} (even factor), lexicographic.
  while (true) {
    out.push_back(cur);
    int i = static_cast<int>(moduli_.size()) - 1;
    for (; i >= 0; --i) {
      const int limit = moduli_[i] % 2 == 0 ? 1 : 0;
      if (cur.residues[i] < limit) {
        ++cur.residues[i];
        break;
      }
      cur.residues[i] = 0;
    }
    if (i < 0) break;
  }
  if (static_cast<long>(out.size()) != count)
    throw std::logic_error("coset transversal has unexpected size");
  return out;
}

GroupElement FiniteAbelianGroup::element_at(long index) const {
  if (index < 0 || index >= order_) throw std::out_of_range("group element index out of range");
  GroupElement out = zero();
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    out.residues[i] = static_cast<int>(index / strides_[i]);
    index %= strides_[i];
  }
  return out;
}

long FiniteAbelianGroup::index_of(const GroupElement& a) const {
  check_element(a);
  long index = 0;
  for (std::size_t i = 0; i < moduli_.size(); ++i) index += a.residues[i] * strides_[i];
  return index;
}

std::string FiniteAbelianGroup::to_string() const {
  if (moduli_.empty()) return "Z1";
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i) out += "x";
    out += "Z" + std::to_string(moduli_[i]);
  }
  return out;
}

DenseGroup dense_tables(const FiniteAbelianGroup& g) {
  if (g.order() > 65536)
    throw std::invalid_argument("dense group tables limited to order 65536");
  const int n = static_cast<int>(g.order());
  const auto elems = g.elements();
  DenseGroup d;
  d.n = n;
  d.add.resize(static_cast<std::size_t>(n) * n);
  d.neg.resize(n);
  d.dbl.resize(n);
  d.in2g.resize(n);
  d.coset_rep.resize(n);
  for (int a = 0; a < n; ++a) {
    d.neg[a] = static_cast<int>(g.index_of(g.neg(elems[a])));
    d.in2g[a] = g.in_two_g(elems[a]) ? 1 : 0;
    d.coset_rep[a] = static_cast<int>(g.index_of(g.coset_rep_of(elems[a])));
    for (int b = 0; b < n; ++b)
      d.add[static_cast<std::size_t>(a) * n + b] = static_cast<int>(g.index_of(g.add(elems[a], elems[b])));
    d.dbl[a] = d.add[static_cast<std::size_t>(a) * n + a];
  }
  return d;
}

}  // namespace sgt
