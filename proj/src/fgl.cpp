#include "flagcob/fgl.hpp"

namespace flagcob {

namespace {

Int binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - i + 1;
    r /= i;
  }
  return r;
}

} // namespace

BivariateFGL make_fgl(TheorySpec t) {
  BivariateFGL fgl;
  fgl.theory = t;
  QPoly u = qp_var(2, t, 1);
  QPoly v = qp_var(2, t, 2);
  switch (t.kind) {
    case TheoryKind::additive: {
      fgl.F = add(u, v);
      fgl.chi = neg(qp_var(1, t, 1));
      fgl.qinv = qp_const(2, t, Int(1));
      break;
    }
    case TheoryKind::multiplicative: {
      // F = u + v - b uv; chi(u) = -u/(1-bu) is not polynomial, but
      // F(u, chi(v)) = (u-v)/(1-bv), so qinv = 1 - bv exactly.
      QPoly buv = scale(mul(u, v), CoeffElem::gen_power(t, 1));
      fgl.F = sub(add(u, v), buv);
      fgl.chi = std::nullopt;
      fgl.qinv = sub(qp_const(2, t, Int(1)),
                     scale(qp_var(2, t, 2), CoeffElem::gen_power(t, 1)));
      break;
    }
    case TheoryKind::infinitesimal: {
      const int m = t.level;
      const Int d = dn(m);
      // G(u,v) = (1/d) * sum_{j=1}^{m} C(m+1,j) u^j v^{m+1-j}
      QPoly G(2, t);
      for (int j = 1; j <= m; ++j) {
        Int c = binom(m + 1, j);
        if (c % d != 0) throw InternalError("binomial not divisible by d_n");
        G.add_term({j, m + 1 - j}, c / d);
      }
      fgl.F = add(add(u, v), scale(G, CoeffElem::gen_power(t, 1)));

      // chi(v) = -v + y c(v) with c(v) = -(1/d) sum_j C(m+1,j)(-1)^{m+1-j} v^{m+1};
      // vanishes for m even, equals (2/d) v^{m+1} for m odd
      QPoly chi = neg(qp_var(1, t, 1));
      Int csum = 0;
      for (int j = 1; j <= m; ++j) {
        Int b = binom(m + 1, j) / d;
        csum += ((m + 1 - j) % 2 == 0) ? b : -b;
      }
      if (csum != 0) {
        QPoly corr(1, t);
        corr.add_term({m + 1}, CoeffElem::gen_power(t, 1, -csum));
        chi = add(chi, corr);
      }
      fgl.chi = chi;

      // F(u, chi(v)) = (u-v)(1 + y q) using y^2 = 0, so qinv = 1 - y q with
      // q = (c(v) + G(u,-v)) / (u-v)
      QPoly h(2, t);
      if (csum != 0) h.add_term({0, m + 1}, -csum);
      for (int j = 1; j <= m; ++j) {
        Int c = binom(m + 1, j) / d;
        h.add_term({j, m + 1 - j}, ((m + 1 - j) % 2 == 0) ? c : -c);
      }
      QPoly q = divide_by_var_diff(h, 1, 2);
      fgl.qinv = sub(qp_const(2, t, Int(1)), scale(q, CoeffElem::gen_power(t, 1)));
      break;
    }
  }
  return fgl;
}

QPoly eval_bivariate(const QPoly& tmpl, const QPoly& a, const QPoly& b) {
  if (tmpl.n != 2) throw RankMismatch("eval_bivariate: template must have rank 2");
  check_rank_theory(a, b);
  QPoly r = qp_zero(a.n, a.theory);
  r.normalized = false;
  for (const auto& [e, c] : tmpl.terms) {
    QPoly t = qp_const(a.n, a.theory, c);
    for (int k = 0; k < e[0]; ++k) t = mul(t, a);
    for (int k = 0; k < e[1]; ++k) t = mul(t, b);
    r = add(r, t);
  }
  return r;
}

QPoly eval_univariate(const QPoly& tmpl, const QPoly& a) {
  if (tmpl.n != 1) throw RankMismatch("eval_univariate: template must have rank 1");
  QPoly r = qp_zero(a.n, a.theory);
  r.normalized = false;
  for (const auto& [e, c] : tmpl.terms) {
    QPoly t = qp_const(a.n, a.theory, c);
    for (int k = 0; k < e[0]; ++k) t = mul(t, a);
    r = add(r, t);
  }
  return r;
}

} // namespace flagcob
