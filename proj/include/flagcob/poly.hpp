#pragma once

#include <map>
#include <optional>
#include <vector>

#include "flagcob/coeff.hpp"

namespace flagcob {

// Exponent vector of fixed length = ambient rank.
using Expv = std::vector<int>;

inline int expv_deg(const Expv& e) {
  int d = 0;
  for (int x : e) d += x;
  return d;
}

// x1-major lexicographic order; doubles as the canonical term order for
// iteration and serialization.
struct LexLess {
  bool operator()(const Expv& a, const Expv& b) const { return a < b; }
};

// Polynomial over the theory's coefficient ring in x1..xn.  `normalized`
// marks staircase representatives modulo the symmetric ideal S_n
// (every exponent vector satisfies e[i] <= n-1-i, 0-indexed).
struct QPoly {
  int n = 0;
  TheorySpec theory;
  std::map<Expv, CoeffElem, LexLess> terms;
  bool normalized = false;

  QPoly() = default;
  QPoly(int rank, TheorySpec t) : n(rank), theory(t) {}

  bool is_zero() const { return terms.empty(); }
  void add_term(const Expv& e, const CoeffElem& c);
  void add_term(const Expv& e, Int c);

  int total_degree() const; // max |e| over terms; -1 for zero

  bool operator==(const QPoly& o) const {
    return n == o.n && theory == o.theory && terms == o.terms;
  }
};

QPoly qp_zero(int n, TheorySpec t);
QPoly qp_const(int n, TheorySpec t, Int c);
QPoly qp_const(int n, TheorySpec t, const CoeffElem& c);
QPoly qp_var(int n, TheorySpec t, int i); // x_i, 1-indexed
QPoly qp_monomial(int n, TheorySpec t, const Expv& e, Int c = 1);

QPoly add(const QPoly& f, const QPoly& g);
QPoly sub(const QPoly& f, const QPoly& g);
QPoly neg(const QPoly& f);
QPoly mul(const QPoly& f, const QPoly& g);
QPoly scale(const QPoly& f, const CoeffElem& c);

// exchange the variables x_i, x_j (1-indexed)
QPoly swap_vars(const QPoly& f, int i, int j);

// elementary / complete homogeneous symmetric polynomials in x_a..x_b
QPoly elem_sym(int k, int a, int b, int n, TheorySpec t);
QPoly complete_hom(int k, int a, int b, int n, TheorySpec t);

// Staircase normal form modulo S_n = (e_1,...,e_n): rewrites x_i^{n-i+1}
// via h_{n-i+1}(x_1,...,x_i) = 0, which holds in the quotient; unique
// representative supported on exponents e[i] <= n-1-i (0-indexed).
QPoly normal_form(const QPoly& f);

bool equal_mod(const QPoly& f, const QPoly& g);

// pullback along Fl_n -> Fl_{n+1}: kill x_{n+1}=x_n... the top variable,
// reinterpret at rank n-1 and normalize there
QPoly set_top_var_zero(const QPoly& f);

// exact division by (x_i - x_j); InternalError if the division leaves a
// remainder (valid inputs are antisymmetric under i<->j)
QPoly divide_by_var_diff(const QPoly& f, int i, int j);

// substitute (u,v) -> (x_i, x_j) in a rank-2 template polynomial
QPoly subst_bivariate(const QPoly& tmpl, int i, int j, int n);

// multiset of graded degrees |e| + k*deg(gen) across all terms; a
// homogeneous polynomial has exactly one (zero has none)
std::optional<int> homogeneous_degree(const QPoly& f); // nullopt if mixed or zero

void check_rank_theory(const QPoly& f, const QPoly& g);

} // namespace flagcob
