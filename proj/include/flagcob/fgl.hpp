#pragma once

#include "flagcob/poly.hpp"

namespace flagcob {

// Bivariate data of a formal group law, truncated to the theory's
// coefficient ring so that everything is an honest polynomial:
//   F(u,v)      the group law
//   chi(u)      the formal inverse, when polynomial (absent for k-theory)
//   qinv(u,v)   exact cofactor with F(u, chi(v)) * qinv(u,v) = u - v;
//               for k-theory qinv = 1 - b*v plays that role directly.
// Stored as QPoly values of rank 2 (u = x1, v = x2; chi is rank 1).
struct BivariateFGL {
  TheorySpec theory;
  QPoly F;
  std::optional<QPoly> chi;
  QPoly qinv;
};

BivariateFGL make_fgl(TheorySpec t);

// F(a, b) for rank-1 arguments... evaluation helpers used by the tests:
// substitute two rank-m polynomials into a rank-2 template
QPoly eval_bivariate(const QPoly& tmpl, const QPoly& a, const QPoly& b);
// substitute a rank-m polynomial into a rank-1 template
QPoly eval_univariate(const QPoly& tmpl, const QPoly& a);

} // namespace flagcob
