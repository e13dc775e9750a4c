#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "flagcob/errors.hpp"

namespace flagcob {

using Int = boost::multiprecision::cpp_int;

// Coefficient rings of the supported theories:
//   additive        Z                  (Chow)
//   multiplicative  Z[b],  deg b = -1  (connective K; F = u+v-buv)
//   infinitesimal n Z[y]/(y^2), deg y = -n
// The deformation generator is b resp. y; additive has none.
enum class TheoryKind { additive, multiplicative, infinitesimal };

struct TheorySpec {
  TheoryKind kind = TheoryKind::additive;
  int level = 0; // n for infinitesimal(n), 0 otherwise

  static TheorySpec additive() { return {TheoryKind::additive, 0}; }
  static TheorySpec multiplicative() { return {TheoryKind::multiplicative, 0}; }
  static TheorySpec infinitesimal(int n);
  // names used on the command line and in reports: "ch", "k", "i2", "i3", ...
  static std::optional<TheorySpec> parse(const std::string& name);
  std::string name() const;

  // largest allowed power of the generator; -1 means unbounded
  int max_gen_power() const {
    switch (kind) {
      case TheoryKind::additive: return 0;
      case TheoryKind::multiplicative: return -1;
      case TheoryKind::infinitesimal: return 1;
    }
    return 0;
  }
  int gen_degree() const {
    switch (kind) {
      case TheoryKind::additive: return 0;
      case TheoryKind::multiplicative: return -1;
      case TheoryKind::infinitesimal: return -level;
    }
    return 0;
  }
  bool has_generator() const { return kind != TheoryKind::additive; }

  bool operator==(const TheorySpec&) const = default;
};

// d_n = p if n+1 is a power of the prime p, else 1
int dn(int n);

// Element of the coefficient ring: sum_k c[k] * gen^k, trailing zeros
// stripped, powers beyond max_gen_power() truncated away.
struct CoeffElem {
  TheorySpec theory;
  std::vector<Int> c;

  CoeffElem() = default;
  explicit CoeffElem(TheorySpec t) : theory(t) {}
  CoeffElem(TheorySpec t, Int constant);
  // constant * gen^power (power beyond the truncation bound yields zero)
  static CoeffElem gen_power(TheorySpec t, int power, Int constant = 1);

  bool is_zero() const { return c.empty(); }
  bool is_one() const { return c.size() == 1 && c[0] == 1; }
  // part of the given generator power
  Int at(size_t k) const { return k < c.size() ? c[k] : Int(0); }

  void normalize(); // strip/truncate

  CoeffElem operator-() const;
  CoeffElem& operator+=(const CoeffElem& o);
  CoeffElem& operator-=(const CoeffElem& o);
  CoeffElem operator*(const CoeffElem& o) const;
  CoeffElem operator+(const CoeffElem& o) const {
    CoeffElem r = *this;
    r += o;
    return r;
  }
  CoeffElem operator-(const CoeffElem& o) const {
    CoeffElem r = *this;
    r -= o;
    return r;
  }
  bool operator==(const CoeffElem&) const = default;

  // exact division by an integer (InternalError if not exact)
  CoeffElem divided_by(const Int& d) const;

  // graded degrees of the nonzero components (k * gen_degree), ascending
  std::vector<int> graded_degrees() const;
};

void check_same_theory(const TheorySpec& a, const TheorySpec& b);

} // namespace flagcob
