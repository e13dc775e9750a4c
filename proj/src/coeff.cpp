#include "flagcob/coeff.hpp"

#include <algorithm>

namespace flagcob {

TheorySpec TheorySpec::infinitesimal(int n) {
  if (n < 2) throw UnsupportedTheory("infinitesimal theories start at i2");
  return {TheoryKind::infinitesimal, n};
}

std::optional<TheorySpec> TheorySpec::parse(const std::string& name) {
  if (name == "ch") return additive();
  if (name == "k") return multiplicative();
  if (name.size() >= 2 && name[0] == 'i') {
    const std::string digits = name.substr(1);
    if (!digits.empty() &&
        std::all_of(digits.begin(), digits.end(),
                    [](char ch) { return ch >= '0' && ch <= '9'; })) {
      int n = std::stoi(digits);
      if (n >= 2 && n <= 99) return infinitesimal(n);
    }
  }
  return std::nullopt;
}

std::string TheorySpec::name() const {
  switch (kind) {
    case TheoryKind::additive: return "ch";
    case TheoryKind::multiplicative: return "k";
    case TheoryKind::infinitesimal: return "i" + std::to_string(level);
  }
  return "?";
}

int dn(int n) {
  if (n < 1) throw InvalidIndex("dn: n must be >= 1");
  int m = n + 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      return m == 1 ? p : 1;
    }
  }
  return m; // m prime
}

CoeffElem::CoeffElem(TheorySpec t, Int constant) : theory(t) {
  if (constant != 0) c.push_back(std::move(constant));
}

CoeffElem CoeffElem::gen_power(TheorySpec t, int power, Int constant) {
  if (power < 0) throw InvalidIndex("gen_power: negative power");
  if (power > 0 && !t.has_generator())
    throw UnsupportedTheory("additive coefficients have no deformation generator");
  CoeffElem r(t);
  const int cap = t.max_gen_power();
  if (constant != 0 && (cap < 0 || power <= cap)) {
    r.c.assign(power + 1, Int(0));
    r.c[power] = std::move(constant);
  }
  return r;
}

void CoeffElem::normalize() {
  const int cap = theory.max_gen_power();
  if (cap >= 0 && c.size() > size_t(cap) + 1) c.resize(cap + 1);
  while (!c.empty() && c.back() == 0) c.pop_back();
}

CoeffElem CoeffElem::operator-() const {
  CoeffElem r(theory);
  r.c.reserve(c.size());
  for (const Int& x : c) r.c.push_back(-x);
  return r;
}

CoeffElem& CoeffElem::operator+=(const CoeffElem& o) {
  check_same_theory(theory, o.theory);
  if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
  for (size_t k = 0; k < o.c.size(); ++k) c[k] += o.c[k];
  normalize();
  return *this;
}

CoeffElem& CoeffElem::operator-=(const CoeffElem& o) {
  check_same_theory(theory, o.theory);
  if (o.c.size() > c.size()) c.resize(o.c.size(), Int(0));
  for (size_t k = 0; k < o.c.size(); ++k) c[k] -= o.c[k];
  normalize();
  return *this;
}

CoeffElem CoeffElem::operator*(const CoeffElem& o) const {
  check_same_theory(theory, o.theory);
  CoeffElem r(theory);
  if (is_zero() || o.is_zero()) return r;
  const int cap = theory.max_gen_power();
  size_t out = c.size() + o.c.size() - 1;
  if (cap >= 0) out = std::min(out, size_t(cap) + 1);
  r.c.assign(out, Int(0));
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    for (size_t j = 0; j < o.c.size() && i + j < out; ++j)
      if (o.c[j] != 0) r.c[i + j] += c[i] * o.c[j];
  }
  r.normalize();
  return r;
}

CoeffElem CoeffElem::divided_by(const Int& d) const {
  if (d == 0) throw InternalError("division by zero");
  CoeffElem r(theory);
  r.c.reserve(c.size());
  for (const Int& x : c) {
    if (x % d != 0) throw InternalError("non-exact integer division in coefficient");
    r.c.push_back(x / d);
  }
  r.normalize();
  return r;
}

std::vector<int> CoeffElem::graded_degrees() const {
  std::vector<int> out;
  const int g = theory.gen_degree();
  for (size_t k = 0; k < c.size(); ++k)
    if (c[k] != 0) out.push_back(int(k) * g);
  std::sort(out.begin(), out.end());
  return out;
}

void check_same_theory(const TheorySpec& a, const TheorySpec& b) {
  if (!(a == b))
    throw Mismatch("coefficient theories differ: " + a.name() + " vs " + b.name());
}

} // namespace flagcob
