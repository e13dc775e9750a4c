#include "flagcob/poly.hpp"

#include <algorithm>

namespace flagcob {

namespace {

void check_var(int n, int i) {
  if (i < 1 || i > n) throw InvalidIndex("variable index out of range");
}

void check_expv(const QPoly& f, const Expv& e) {
  if (int(e.size()) != f.n) throw RankMismatch("exponent vector length != rank");
}

} // namespace

void QPoly::add_term(const Expv& e, const CoeffElem& c) {
  check_expv(*this, e);
  if (c.is_zero()) return;
  check_same_theory(theory, c.theory);
  auto it = terms.find(e);
  if (it == terms.end()) {
    terms.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms.erase(it);
  }
}

void QPoly::add_term(const Expv& e, Int c) { add_term(e, CoeffElem(theory, std::move(c))); }

int QPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms) d = std::max(d, expv_deg(e));
  return d;
}

QPoly qp_zero(int n, TheorySpec t) {
  QPoly f(n, t);
  f.normalized = true;
  return f;
}

QPoly qp_const(int n, TheorySpec t, Int c) {
  QPoly f(n, t);
  f.add_term(Expv(n, 0), std::move(c));
  f.normalized = true;
  return f;
}

QPoly qp_const(int n, TheorySpec t, const CoeffElem& c) {
  QPoly f(n, t);
  f.add_term(Expv(n, 0), c);
  f.normalized = true;
  return f;
}

QPoly qp_var(int n, TheorySpec t, int i) {
  check_var(n, i);
  QPoly f(n, t);
  Expv e(n, 0);
  e[i - 1] = 1;
  f.add_term(e, Int(1));
  return f;
}

QPoly qp_monomial(int n, TheorySpec t, const Expv& e, Int c) {
  QPoly f(n, t);
  f.add_term(e, std::move(c));
  return f;
}

void check_rank_theory(const QPoly& f, const QPoly& g) {
  if (f.n != g.n) throw RankMismatch("polynomial ranks differ");
  check_same_theory(f.theory, g.theory);
}

QPoly add(const QPoly& f, const QPoly& g) {
  check_rank_theory(f, g);
  QPoly r = f;
  r.normalized = f.normalized && g.normalized;
  for (const auto& [e, c] : g.terms) r.add_term(e, c);
  return r;
}

QPoly sub(const QPoly& f, const QPoly& g) {
  check_rank_theory(f, g);
  QPoly r = f;
  r.normalized = f.normalized && g.normalized;
  for (const auto& [e, c] : g.terms) r.add_term(e, -c);
  return r;
}

QPoly neg(const QPoly& f) {
  QPoly r(f.n, f.theory);
  r.normalized = f.normalized;
  for (const auto& [e, c] : f.terms) r.terms.emplace(e, -c);
  return r;
}

QPoly mul(const QPoly& f, const QPoly& g) {
  check_rank_theory(f, g);
  QPoly r(f.n, f.theory);
  Expv e(f.n, 0);
  for (const auto& [ef, cf] : f.terms) {
    for (const auto& [eg, cg] : g.terms) {
      CoeffElem c = cf * cg;
      if (c.is_zero()) continue;
      for (int i = 0; i < f.n; ++i) e[i] = ef[i] + eg[i];
      r.add_term(e, c);
    }
  }
  return r;
}

QPoly scale(const QPoly& f, const CoeffElem& c) {
  check_same_theory(f.theory, c.theory);
  QPoly r(f.n, f.theory);
  r.normalized = f.normalized;
  if (c.is_zero()) {
    r.normalized = true;
    return r;
  }
  for (const auto& [e, cf] : f.terms) {
    CoeffElem x = cf * c;
    if (!x.is_zero()) r.terms.emplace(e, std::move(x));
  }
  return r;
}

QPoly swap_vars(const QPoly& f, int i, int j) {
  check_var(f.n, i);
  check_var(f.n, j);
  if (i == j) return f;
  QPoly r(f.n, f.theory);
  for (const auto& [e, c] : f.terms) {
    Expv e2 = e;
    std::swap(e2[i - 1], e2[j - 1]);
    r.add_term(e2, c);
  }
  return r;
}

namespace {

// all exponent vectors (full rank-n length) of monomials of degree k in
// variables x_a..x_b, each with coefficient 1: the support of h_k(x_a..x_b)
void monomials_in_range(int k, int a, int b, int n, Expv& cur, int var,
                        std::vector<Expv>& out) {
  if (var > b) {
    if (k == 0) out.push_back(cur);
    return;
  }
  if (var == b) {
    cur[var - 1] = k;
    out.push_back(cur);
    cur[var - 1] = 0;
    return;
  }
  for (int t = 0; t <= k; ++t) {
    cur[var - 1] = t;
    monomials_in_range(k - t, a, b, n, cur, var + 1, out);
  }
  cur[var - 1] = 0;
}

} // namespace

QPoly elem_sym(int k, int a, int b, int n, TheorySpec t) {
  if (a < 1 || b > n || a > b + 1) throw InvalidInterval("elem_sym: bad variable range");
  const int width = b - a + 1;
  if (k < 0 || k > width) {
    if (k == 0) return qp_const(n, t, Int(1));
    return qp_zero(n, t);
  }
  if (k == 0) return qp_const(n, t, Int(1));
  QPoly f(n, t);
  // iterate k-subsets of [a,b]
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = a + i;
  while (true) {
    Expv e(n, 0);
    for (int i : idx) e[i - 1] = 1;
    f.add_term(e, Int(1));
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == b - (k - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
  }
  return f;
}

QPoly complete_hom(int k, int a, int b, int n, TheorySpec t) {
  if (a < 1 || b > n || a > b) throw InvalidInterval("complete_hom: bad variable range");
  if (k < 0) return qp_zero(n, t);
  if (k == 0) return qp_const(n, t, Int(1));
  QPoly f(n, t);
  std::vector<Expv> mons;
  Expv cur(n, 0);
  monomials_in_range(k, a, b, n, cur, a, mons);
  for (const Expv& e : mons) f.add_term(e, Int(1));
  return f;
}

namespace {

// order for the rewriting worklist: compare exponents from x_n down to x_1,
// greatest first.  Each rewrite of the current maximum produces strictly
// smaller monomials, so a single sweep terminates.
struct RevTupleGreater {
  bool operator()(const Expv& a, const Expv& b) const {
    return std::lexicographical_compare(b.rbegin(), b.rend(), a.rbegin(), a.rend());
  }
};

} // namespace

QPoly normal_form(const QPoly& f) {
  const int n = f.n;
  if (f.normalized) return f;
  QPoly out(n, f.theory);
  out.normalized = true;

  // h_{n-i+1}(x_1..x_i) with the leading monomial x_i^{n-i+1} removed,
  // computed lazily per variable
  std::vector<std::optional<std::vector<Expv>>> tails(n + 1);
  auto tail_of = [&](int i) -> const std::vector<Expv>& {
    if (!tails[i]) {
      std::vector<Expv> mons;
      Expv cur(n, 0);
      monomials_in_range(n - i + 1, 1, i, n, cur, 1, mons);
      std::vector<Expv> t;
      t.reserve(mons.size() - 1);
      for (Expv& e : mons)
        if (e[i - 1] != n - i + 1) t.push_back(std::move(e));
      tails[i] = std::move(t);
    }
    return *tails[i];
  };

  std::map<Expv, CoeffElem, RevTupleGreater> work(f.terms.begin(), f.terms.end());
  while (!work.empty()) {
    auto node = work.extract(work.begin());
    const Expv& e = node.key();
    CoeffElem& c = node.mapped();
    if (c.is_zero()) continue;
    int bad = -1;
    for (int i = n; i >= 1; --i) {
      if (e[i - 1] > n - i) {
        bad = i;
        break;
      }
    }
    if (bad < 0) {
      auto it = out.terms.find(e);
      if (it == out.terms.end()) {
        out.terms.emplace(e, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.terms.erase(it);
      }
      continue;
    }
    // e = x_bad^{n-bad+1} * rest; subtract c * rest * h_{n-bad+1}(x_1..x_bad)
    Expv rest = e;
    rest[bad - 1] -= n - bad + 1;
    const CoeffElem mc = -c;
    for (const Expv& mu : tail_of(bad)) {
      Expv ne = rest;
      for (int i = 0; i < bad; ++i) ne[i] += mu[i];
      auto it = work.find(ne);
      if (it == work.end()) {
        work.emplace(std::move(ne), mc);
      } else {
        it->second += mc;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return out;
}

bool equal_mod(const QPoly& f, const QPoly& g) {
  check_rank_theory(f, g);
  const QPoly a = f.normalized ? f : normal_form(f);
  const QPoly b = g.normalized ? g : normal_form(g);
  return a.terms == b.terms;
}

QPoly set_top_var_zero(const QPoly& f) {
  if (f.n < 1) throw RankMismatch("set_top_var_zero: rank must be >= 1");
  QPoly r(f.n - 1, f.theory);
  for (const auto& [e, c] : f.terms) {
    if (e[f.n - 1] != 0) continue;
    Expv e2(e.begin(), e.end() - 1);
    r.add_term(e2, c);
  }
  return normal_form(r);
}

QPoly divide_by_var_diff(const QPoly& f, int i, int j) {
  check_var(f.n, i);
  check_var(f.n, j);
  if (i == j) throw InvalidIndex("divide_by_var_diff: equal variables");
  // order the dividend by x_i exponent (descending), peel one factor at a time
  struct ByXi {
    int i;
    bool operator()(const Expv& a, const Expv& b) const {
      if (a[i] != b[i]) return a[i] > b[i];
      return a < b;
    }
  };
  std::map<Expv, CoeffElem, ByXi> rem(ByXi{i - 1});
  for (const auto& [e, c] : f.terms) rem.emplace(e, c);
  QPoly q(f.n, f.theory);
  while (!rem.empty()) {
    auto node = rem.extract(rem.begin());
    const Expv& e = node.key();
    CoeffElem& c = node.mapped();
    if (c.is_zero()) continue;
    if (e[i - 1] == 0)
      throw InternalError("divide_by_var_diff: input not divisible by x_i - x_j");
    Expv t = e;
    t[i - 1] -= 1;
    q.add_term(t, c);
    // rem -= c * t * (x_i - x_j): the x_i part cancels the extracted term
    Expv tx = t;
    tx[j - 1] += 1;
    auto it = rem.find(tx);
    if (it == rem.end()) {
      rem.emplace(std::move(tx), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) rem.erase(it);
    }
  }
  return q;
}

QPoly subst_bivariate(const QPoly& tmpl, int i, int j, int n) {
  if (tmpl.n != 2) throw RankMismatch("subst_bivariate: template must have rank 2");
  check_var(n, i);
  check_var(n, j);
  if (i == j) throw InvalidIndex("subst_bivariate: equal variables");
  QPoly r(n, tmpl.theory);
  for (const auto& [e, c] : tmpl.terms) {
    Expv e2(n, 0);
    e2[i - 1] = e[0];
    e2[j - 1] = e[1];
    r.add_term(e2, c);
  }
  return r;
}

std::optional<int> homogeneous_degree(const QPoly& f) {
  std::optional<int> deg;
  for (const auto& [e, c] : f.terms) {
    const int xd = expv_deg(e);
    for (int gd : c.graded_degrees()) {
      const int d = xd + gd;
      if (!deg) {
        deg = d;
      } else if (*deg != d) {
        return std::nullopt;
      }
    }
  }
  return deg;
}

} // namespace flagcob
