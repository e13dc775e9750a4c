#include "flagcob/ddiff.hpp"

namespace flagcob {

QPoly ddiff_raw(int i, const QPoly& f) {
  if (i < 1 || i > f.n - 1) throw InvalidIndex("ddiff: index out of range");
  const BivariateFGL fgl = make_fgl(f.theory);
  const QPoly g = mul(f, subst_bivariate(fgl.qinv, i, i + 1, f.n));
  const QPoly h = sub(g, swap_vars(g, i, i + 1));
  return divide_by_var_diff(h, i, i + 1);
}

QPoly ddiff(int i, const QPoly& f) { return normal_form(ddiff_raw(i, f)); }

QPoly ddiff_word(const Word& v, const QPoly& f) {
  if (v.n != f.n) throw RankMismatch("ddiff_word: word and polynomial rank differ");
  QPoly r = f;
  for (int i : v.letters) r = ddiff(i, r);
  return r;
}

QPoly point_class(int n, TheorySpec t, const std::optional<QPoly>& override_top) {
  if (override_top) {
    if (override_top->n != n) throw RankMismatch("top class has wrong rank");
    check_same_theory(override_top->theory, t);
    return normal_form(*override_top);
  }
  const bool known = t.kind == TheoryKind::additive ||
                     t.kind == TheoryKind::multiplicative ||
                     (t.kind == TheoryKind::infinitesimal && t.level == 2);
  if (!known)
    throw NoPointClass("point class unavailable for this theory; supply --top-class");
  Expv e(n, 0);
  for (int i = 1; i <= n - 1; ++i) e[i - 1] = n - i;
  QPoly f = qp_monomial(n, t, e);
  f.normalized = true;
  return f;
}

QPoly bs_class(const Word& v, TheorySpec t, const std::optional<QPoly>& override_top) {
  if (!is_reduced(v)) throw NotReduced("bs_class: word is not reduced");
  return ddiff_word(v, point_class(v.n, t, override_top));
}

RestrictionReport restriction_check(const Word& v, TheorySpec t) {
  RestrictionReport rep;
  rep.v = v;
  rep.theory = t;
  const int n = v.n;
  const Word up = coxeter_word(n, n + 1).concat(v.lifted(n + 1));
  rep.lifted = set_top_var_zero(bs_class(up, t));
  rep.base = bs_class(v, t);
  rep.ok = rep.lifted == rep.base;
  return rep;
}

ProductReport product_with_divisor(const Word& w, TheorySpec t, bool mirrored) {
  ProductReport rep;
  rep.w = w;
  rep.theory = t;
  rep.mirrored = mirrored;
  const int rank = w.n;
  const int n = rank - 1;
  if (n < 1) throw RankMismatch("product_with_divisor: rank must be >= 2");

  QPoly divisor = qp_const(rank, t, Int(1));
  if (mirrored) {
    Expv e(rank, 0);
    e[0] = n;
    divisor = qp_monomial(rank, t, e);
  } else {
    Expv e(rank, 1);
    e[rank - 1] = 0;
    divisor = qp_monomial(rank, t, e);
  }

  rep.lhs = normal_form(mul(bs_class(w, t), divisor));
  rep.dec = decompose_ucv(w, mirrored);
  rep.above_coxeter = rep.dec.has_value();
  if (rep.dec) {
    rep.rhs_word = cinv_shift_concat(*rep.dec);
    if (!is_reduced(rep.rhs_word))
      throw InternalError("product_with_divisor: shifted word not reduced");
    rep.rhs = bs_class(rep.rhs_word, t);
  } else {
    rep.rhs_word = Word::empty(rank);
    rep.rhs = qp_zero(rank, t);
  }
  rep.ok = rep.lhs == rep.rhs;
  return rep;
}

} // namespace flagcob
