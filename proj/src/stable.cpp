#include "flagcob/stable.hpp"

namespace flagcob {

StableFamily stable_bs_family(const Word& v, int N_max, TheorySpec t) {
  StableFamily fam;
  fam.n = v.n;
  fam.v = v;
  fam.theory = t;
  fam.N_max = N_max;
  if (N_max < v.n) throw RankMismatch("stable_bs_family: N_max below base rank");
  if (!is_reduced(v)) throw NotReduced("stable_bs_family: word is not reduced");
  for (int N = v.n; N <= N_max; ++N) {
    const Word w = coxeter_chain(v.n, N).concat(v.lifted(N));
    fam.members.push_back(bs_class(w, t));
  }
  for (int N = v.n; N < N_max; ++N) {
    if (set_top_var_zero(fam.member(N + 1)) != fam.member(N))
      throw StabilityViolation("stable family breaks between ranks " +
                               std::to_string(N + 1) + " and " + std::to_string(N));
  }
  fam.verified = true;
  return fam;
}

QPoly calB_truncation(int n, int N) {
  if (n < 1 || N < n) throw RankMismatch("calB_truncation: need 1 <= n <= N");
  const TheorySpec t = TheorySpec::infinitesimal(2);
  QPoly acc = qp_zero(N, t);
  for (int i = n + 1; i <= N - 1; ++i)
    acc = add(acc, scale(mul(qp_var(N, t, i + 1), elem_sym(1, 1, i, N, t)),
                         CoeffElem(t, Int(i - n))));
  return normal_form(sub(qp_const(N, t, Int(1)),
                         scale(acc, CoeffElem::gen_power(t, 1))));
}

QPoly chain_truncation(int n, int N) {
  if (n < 1 || N < n) throw RankMismatch("chain_truncation: need 1 <= n <= N");
  const TheorySpec t = TheorySpec::infinitesimal(2);
  Expv e(N, 0);
  for (int i = 1; i <= n - 1; ++i) e[i - 1] = n - i;
  return normal_form(mul(qp_monomial(N, t, e), calB_truncation(n, N)));
}

QPoly dominant_closed_form(const Partition& lam, int n, int N) {
  if (N < n) throw RankMismatch("dominant_closed_form: need N >= n");
  const TheorySpec t = TheorySpec::infinitesimal(2);
  const DominantReading rd = dominant_reading(lam, n);
  Expv e(N, 0);
  for (int i = 1; i <= lam.size(); ++i) e[i - 1] = lam.part(i);
  QPoly xlam = qp_monomial(N, t, e);
  QPoly orb = qp_zero(N, t);
  for (const auto& segment : rd.orbits)
    for (const auto& [a, b] : segment)
      orb = add(orb, elem_sym(2, a, b, N, t));
  QPoly factor = add(qp_const(N, t, Int(1)), scale(orb, CoeffElem::gen_power(t, 1)));
  return normal_form(mul(mul(xlam, factor), calB_truncation(n, N)));
}

} // namespace flagcob
