#include "flagcob/checks.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "flagcob/ddiff.hpp"
#include "flagcob/ffmodel.hpp"
#include "flagcob/oracles.hpp"

namespace flagcob {

void parallel_for(int count, int jobs, const std::function<void(int)>& fn) {
  jobs = std::max(1, std::min(jobs, count));
  if (jobs <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(jobs);
  for (int t = 0; t < jobs; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
    });
  for (auto& th : pool) th.join();
}

int resolve_jobs(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("FLAGCOB_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

std::vector<TheorySpec> parse_theory_list(const std::string& names) {
  if (names == "all")
    return {TheorySpec::additive(), TheorySpec::multiplicative(),
            TheorySpec::infinitesimal(2)};
  std::vector<TheorySpec> out;
  std::stringstream ss(names);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    const auto t = TheorySpec::parse(tok);
    if (!t) throw UnsupportedTheory("unknown theory '" + tok + "'");
    out.push_back(*t);
  }
  if (out.empty()) throw UnsupportedTheory("empty theory list");
  return out;
}

namespace {

Json names_of(const std::vector<TheorySpec>& ts) {
  Json a = Json::array();
  for (const auto& t : ts) a.push_back(t.name());
  return a;
}

SuiteResult assemble(const std::string& name, Json params,
                     std::vector<Json> rows) {
  SuiteResult r;
  r.name = name;
  r.total = int(rows.size());
  Json cases = Json::array();
  for (auto& row : rows) {
    if (!row.value("ok", false)) ++r.failures;
    cases.push_back(std::move(row));
  }
  r.report["suite"] = name;
  r.report["params"] = std::move(params);
  r.report["total"] = r.total;
  r.report["failures"] = r.failures;
  r.report["pass"] = (r.failures == 0);
  r.report["cases"] = std::move(cases);
  return r;
}

} // namespace

SuiteResult check_restriction(int max_n, const std::vector<TheorySpec>& ts,
                              int jobs) {
  if (max_n < 2) throw InvalidIndex("restriction suite needs max-n >= 2");
  struct Case {
    TheorySpec t;
    Word v;
  };
  std::vector<Case> cases;
  for (const auto& t : ts)
    for (int n = 2; n <= max_n; ++n)
      for (const Word& v : all_reduced_words_upto(n, n * (n - 1) / 2))
        cases.push_back({t, v});
  std::vector<Json> rows(cases.size());
  parallel_for(int(cases.size()), jobs, [&](int i) {
    Json row;
    row["theory"] = cases[i].t.name();
    row["n"] = cases[i].v.n;
    row["word"] = cases[i].v.str();
    try {
      const auto rep = restriction_check(cases[i].v, cases[i].t);
      row["ok"] = rep.ok;
      if (!rep.ok) {
        row["lifted"] = qpoly_to_json(rep.lifted);
        row["base"] = qpoly_to_json(rep.base);
      }
    } catch (const std::exception& e) {
      row["ok"] = false;
      row["error"] = e.what();
    }
    rows[i] = std::move(row);
  });
  return assemble("restriction",
                  Json{{"max_n", max_n}, {"theories", names_of(ts)}},
                  std::move(rows));
}

SuiteResult check_product(int n, const std::vector<TheorySpec>& ts,
                          bool mirrored, int jobs) {
  if (n < 2) throw InvalidIndex("product suite needs n >= 2");
  for (const auto& t : ts)
    if (t.kind == TheoryKind::multiplicative)
      throw UnsupportedTheory(
          "the divisor classes are validated for ch and i2 only");
  struct Case {
    TheorySpec t;
    Word w;
  };
  std::vector<Case> cases;
  for (const auto& t : ts)
    for (const Word& w : all_reduced_words_upto(n, n * (n - 1) / 2))
      cases.push_back({t, w});
  std::vector<Json> rows(cases.size());
  parallel_for(int(cases.size()), jobs, [&](int i) {
    Json row;
    row["theory"] = cases[i].t.name();
    row["word"] = cases[i].w.str();
    row["mirrored"] = mirrored;
    try {
      const auto rep = product_with_divisor(cases[i].w, cases[i].t, mirrored);
      row["above_c"] = rep.above_coxeter;
      row["ok"] = rep.ok;
      if (!rep.ok) {
        row["lhs"] = qpoly_to_json(rep.lhs);
        row["rhs"] = qpoly_to_json(rep.rhs);
      }
    } catch (const std::exception& e) {
      row["ok"] = false;
      row["error"] = e.what();
    }
    rows[i] = std::move(row);
  });
  return assemble("product",
                  Json{{"n", n},
                       {"theories", names_of(ts)},
                       {"mirrored", mirrored}},
                  std::move(rows));
}

SuiteResult check_fiber(int n, const std::vector<int>& qs, int max_len,
                        int jobs) {
  if (n < 1) throw InvalidIndex("fiber suite needs n >= 1");
  const int rank = n + 1;
  const int len = std::min(max_len, rank * (rank - 1) / 2);
  struct Case {
    int q;
    Word w;
  };
  std::vector<Case> cases;
  for (int q : qs)
    for (const Word& w : all_reduced_words_upto(rank, len))
      cases.push_back({q, w});
  std::vector<Json> rows(cases.size());
  parallel_for(int(cases.size()), jobs, [&](int i) {
    Json row;
    row["q"] = cases[i].q;
    row["word"] = cases[i].w.str();
    try {
      const auto rep = fiber_bijection(cases[i].w, cases[i].q);
      row["above_c"] = rep.above_c;
      row["r1"] = rep.r1;
      row["r2"] = rep.r2;
      row["fiber_count"] = rep.fiber_count;
      row["expected_count"] = rep.expected_count;
      row["count_ok"] = rep.count_ok && rep.direct_count_ok;
      row["f_g_identity"] =
          rep.fg_identity && rep.gf_identity && rep.membership_ok;
      row["projection_ok"] = rep.projection_ok;
      row["ok"] = rep.ok;
    } catch (const std::exception& e) {
      row["ok"] = false;
      row["error"] = e.what();
    }
    rows[i] = std::move(row);
  });
  Json qjson = Json::array();
  for (int q : qs) qjson.push_back(q);
  return assemble("fiber",
                  Json{{"n", n}, {"q", qjson}, {"max_len", max_len}},
                  std::move(rows));
}

QPoly random_qpoly(int n, TheorySpec t, std::mt19937& rng, int terms,
                   int max_exp) {
  std::uniform_int_distribution<int> exp_d(0, max_exp);
  std::uniform_int_distribution<int> coef_d(-4, 4);
  QPoly f(n, t);
  for (int j = 0; j < terms; ++j) {
    Expv e(n);
    for (int i = 0; i < n; ++i) e[i] = exp_d(rng);
    CoeffElem c(t);
    c.c.push_back(coef_d(rng));
    if (t.has_generator()) c.c.push_back(coef_d(rng));
    if (t.kind == TheoryKind::multiplicative) c.c.push_back(coef_d(rng));
    c.normalize();
    f.add_term(e, c);
  }
  return f;
}

namespace {

// accumulate one named sub-check into a suite row
struct RowChecker {
  Json& row;
  int checks = 0;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    ++checks;
    if (cond || !ok) return; // keep the first failure only
    ok = false;
    row["first_failure"] = what;
  }
  void finish() {
    row["checks"] = checks;
    row["ok"] = ok;
  }
};

} // namespace

SuiteResult check_operators(int max_n, const std::vector<TheorySpec>& ts,
                            unsigned seed, int jobs) {
  if (max_n < 2) throw InvalidIndex("operators suite needs max-n >= 2");
  struct Case {
    TheorySpec t;
    int n;
  };
  std::vector<Case> cases;
  for (const auto& t : ts)
    for (int n = 2; n <= max_n; ++n) cases.push_back({t, n});
  std::vector<Json> rows(cases.size());
  parallel_for(int(cases.size()), jobs, [&](int ci) {
    const TheorySpec t = cases[ci].t;
    const int n = cases[ci].n;
    Json row;
    row["theory"] = t.name();
    row["n"] = n;
    RowChecker rc{row};
    try {
      std::mt19937 rng(seed + 1000003u * unsigned(ci));
      std::vector<QPoly> fs, gs;
      for (int s = 0; s < 4; ++s) {
        fs.push_back(random_qpoly(n, t, rng, 5, 3));
        gs.push_back(random_qpoly(n, t, rng, 3, 2));
      }
      const QPoly one = qp_const(n, t, 1);
      for (size_t s = 0; s < fs.size(); ++s) {
        const QPoly& f = fs[s];
        const QPoly& g = gs[s];
        for (int i = 1; i <= n - 1; ++i) {
          // distant-letter commutation
          for (int j = i + 2; j <= n - 1; ++j)
            rc.expect(ddiff(i, ddiff(j, f)) == ddiff(j, ddiff(i, f)),
                      "commutation d" + std::to_string(i) + " d" +
                          std::to_string(j));
          // s_i-symmetric factors pull out
          const QPoly fsym = add(f, swap_vars(f, i, i + 1));
          rc.expect(ddiff(i, mul(fsym, g)) ==
                        normal_form(mul(fsym, ddiff(i, g))),
                    "symmetric factor at " + std::to_string(i));
          // d_i^2 = d_i(1) d_i
          rc.expect(ddiff(i, ddiff(i, f)) ==
                        normal_form(mul(ddiff(i, one), ddiff(i, f))),
                    "square at " + std::to_string(i));
          // the operator descends to the quotient
          rc.expect(ddiff(i, f) == ddiff(i, normal_form(f)),
                    "descent to quotient at " + std::to_string(i));
          // pullback to one rank down commutes when i stays in range
          if (i <= n - 2)
            rc.expect(set_top_var_zero(ddiff(i, f)) ==
                          ddiff(i, set_top_var_zero(f)),
                      "pullback at " + std::to_string(i));
        }
      }
      // d_i(1)
      for (int i = 1; i <= n - 1; ++i) {
        const QPoly d1 = ddiff(i, one);
        if (t.kind == TheoryKind::multiplicative)
          rc.expect(d1 == qp_const(n, t, CoeffElem::gen_power(t, 1)),
                    "d_i(1) = beta");
        else
          rc.expect(d1.is_zero(), "d_i(1) = 0");
      }
      // descent recursion on small reduced words
      for (const Word& v : all_reduced_words_upto(n, 3)) {
        const QPoly bv = bs_class(v, t);
        rc.expect(homogeneous_degree(bv) ==
                      std::optional<int>(n * (n - 1) / 2 - v.size()),
                  "graded degree of " + v.str());
        for (int i = 1; i <= n - 1; ++i) {
          auto vsi = v.letters;
          vsi.push_back(i);
          const Word wext(n, vsi);
          if (is_reduced(wext))
            rc.expect(ddiff(i, bv) == bs_class(wext, t),
                      "recursion " + v.str() + " + " + std::to_string(i));
          else if (t.kind == TheoryKind::additive)
            rc.expect(ddiff(i, bv).is_zero(),
                      "vanishing " + v.str() + " + " + std::to_string(i));
          else if (!v.letters.empty() && v.letters.back() == i)
            rc.expect(ddiff(i, bv) == normal_form(mul(ddiff(i, one), bv)),
                      "repeat letter " + v.str() + " + " + std::to_string(i));
        }
      }
      // Coxeter image of the point class (square-zero theory)
      if (t == TheorySpec::infinitesimal(2) && n <= 5) {
        const QPoly pt = point_class(n + 1, t);
        const QPoly img = ddiff_word(coxeter_word(n, n + 1), pt);
        Expv d2(n + 1, 0);
        for (int i = 0; i < n - 1; ++i) d2[i] = n - 1 - i;
        const QPoly expect = normal_form(
            add(qp_monomial(n + 1, t, d2),
                scale(mul(qp_monomial(n + 1, t, d2),
                          elem_sym(2, 1, n + 1, n + 1, t)),
                      CoeffElem::gen_power(t, 1))));
        rc.expect(img == expect, "coxeter image of the point class");
      }
    } catch (const std::exception& e) {
      rc.ok = false;
      row["error"] = e.what();
    }
    rc.finish();
    rows[ci] = std::move(row);
  });
  return assemble("operators",
                  Json{{"max_n", max_n},
                       {"theories", names_of(ts)},
                       {"seed", seed}},
                  std::move(rows));
}

SuiteResult check_normalform(int max_n, int upto, unsigned seed, int jobs) {
  if (max_n < 2) throw InvalidIndex("normalform suite needs max-n >= 2");
  struct Case {
    TheorySpec t;
    int n;      // rank, 0 for congruence cases
    int cn, cN; // congruence parameters when n == 0
  };
  std::vector<Case> cases;
  const std::vector<TheorySpec> ts = {TheorySpec::additive(),
                                      TheorySpec::multiplicative(),
                                      TheorySpec::infinitesimal(2)};
  for (const auto& t : ts)
    for (int n = 2; n <= max_n; ++n) cases.push_back({t, n, 0, 0});
  for (int cn = 1; cn < upto; ++cn)
    for (int cN = cn + 1; cN <= upto; ++cN)
      cases.push_back({TheorySpec::additive(), 0, cn, cN});
  std::vector<Json> rows(cases.size());
  parallel_for(int(cases.size()), jobs, [&](int ci) {
    Json row;
    RowChecker rc{row};
    try {
      if (cases[ci].n == 0) {
        // telescoped e2 congruence: sum_{k=n+1}^{N-1} e2(x_1..x_k)
        // = - sum_{i=n+1}^{N-1} (i-n) x_{i+1} e1(x_1..x_i)  mod S_N
        const int cn = cases[ci].cn, cN = cases[ci].cN;
        row["kind"] = "e2-congruence";
        row["n"] = cn;
        row["N"] = cN;
        const TheorySpec t = TheorySpec::additive();
        QPoly lhs = qp_zero(cN, t);
        QPoly rhs = qp_zero(cN, t);
        for (int k = cn + 1; k <= cN - 1; ++k)
          lhs = add(lhs, elem_sym(2, 1, k, cN, t));
        for (int i = cn + 1; i <= cN - 1; ++i) {
          QPoly term = mul(qp_var(cN, t, i + 1), elem_sym(1, 1, i, cN, t));
          rhs = sub(rhs, scale(term, CoeffElem(t, i - cn)));
        }
        rc.expect(equal_mod(lhs, rhs), "congruence");
      } else {
        const TheorySpec t = cases[ci].t;
        const int n = cases[ci].n;
        row["kind"] = "normal-form";
        row["theory"] = t.name();
        row["n"] = n;
        std::mt19937 rng(seed + 7919u * unsigned(ci));
        // keep the rational-elimination oracle desk-scale: total degree
        // grows with n * max_exp, and the slice bases grow cubically in it
        const int max_exp = n <= 2 ? 3 : 2;
        for (int s = 0; s < 6; ++s) {
          const QPoly f = random_qpoly(n, t, rng, 6, max_exp);
          const QPoly nf = normal_form(f);
          bool staircase = true;
          for (const auto& [e, c] : nf.terms)
            for (int i = 0; i < n; ++i)
              if (e[i] > n - 1 - i) staircase = false;
          rc.expect(staircase, "staircase support");
          rc.expect(normal_form(nf) == nf, "idempotence");
          rc.expect(equal_mod(f, nf), "equal_mod consistency");
          rc.expect(oracles::in_relation_ideal(sub(f, nf)),
                    "difference in the ideal");
          if (!nf.is_zero())
            rc.expect(!oracles::in_relation_ideal(f),
                      "nonzero normal form outside the ideal");
          // multiples of the generators die
          const QPoly g = random_qpoly(n, t, rng, 3, 2);
          for (int k = 1; k <= n; ++k)
            rc.expect(normal_form(mul(elem_sym(k, 1, n, n, t), g)).is_zero(),
                      "e_" + std::to_string(k) + " multiple");
        }
      }
    } catch (const std::exception& e) {
      rc.ok = false;
      row["error"] = e.what();
    }
    rc.finish();
    rows[ci] = std::move(row);
  });
  return assemble("normalform",
                  Json{{"max_n", max_n}, {"upto", upto}, {"seed", seed}},
                  std::move(rows));
}

} // namespace flagcob
