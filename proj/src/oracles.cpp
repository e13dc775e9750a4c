#include "flagcob/oracles.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "flagcob/errors.hpp"

namespace flagcob::oracles {

namespace {

using Rat = boost::multiprecision::cpp_rational;

void bjs_rec(const std::vector<int>& a, size_t j, int prev_b, Expv& acc,
             QPoly& out) {
  if (j == a.size()) {
    out.add_term(acc, 1);
    return;
  }
  const int lo = (j == 0) ? 1 : (a[j - 1] < a[j] ? prev_b + 1 : prev_b);
  for (int b = lo; b <= a[j]; ++b) {
    ++acc[b - 1];
    bjs_rec(a, j + 1, b, acc, out);
    --acc[b - 1];
  }
}

} // namespace

QPoly schubert_polynomial(const Permutation& w) {
  const int n = w.rank();
  QPoly out(n, TheorySpec::additive());
  for (const Word& rw : reduced_words(w)) {
    Expv acc(n, 0);
    bjs_rec(rw.letters, 0, 0, acc, out);
  }
  return out;
}

namespace {

// (x^a y^b - x^b y^a)/(x - y) dropped into slots i, i+1 of e
void add_geom(QPoly& out, const CoeffElem& c, const Expv& e, int i, int a,
              int b) {
  if (a == b) return;
  const int m = std::min(a, b), d = std::abs(a - b);
  const CoeffElem cc = (a > b) ? c : -c;
  Expv t = e;
  for (int s = 0; s < d; ++s) {
    t[i - 1] = m + s;
    t[i] = m + d - 1 - s;
    out.add_term(t, cc);
  }
}

// isobaric operator in the plain ring, monomial by monomial:
// pi_i(x^a y^b) = geom(a, b) - beta * geom(a, b + 1)
QPoly isobaric_plain(int i, const QPoly& f) {
  QPoly out(f.n, f.theory);
  const CoeffElem mb = CoeffElem::gen_power(f.theory, 1, -1); // -beta
  for (const auto& [e, c] : f.terms) {
    const int a = e[i - 1], b = e[i];
    add_geom(out, c, e, i, a, b);
    add_geom(out, mb * c, e, i, a, b + 1);
  }
  return out;
}

} // namespace

QPoly grothendieck_polynomial(const Permutation& w) {
  const int n = w.rank();
  const TheorySpec t = TheorySpec::multiplicative();
  static std::map<std::vector<int>, QPoly> memo_store;
  // memo keyed by one-line notation, shared across calls of equal rank
  std::map<std::vector<int>, QPoly>& memo = memo_store;
  const auto key = w.oneline;
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // seed the longest element of this rank
  Expv delta(n);
  for (int i = 0; i < n; ++i) delta[i] = n - 1 - i;
  memo[Permutation::longest(n).oneline] = qp_monomial(n, t, delta);

  // descend length by length from the top
  std::vector<Permutation> all = all_permutations(n);
  std::sort(all.begin(), all.end(),
            [](const Permutation& a, const Permutation& b) {
              return a.length() > b.length();
            });
  for (const Permutation& v : all) {
    auto vit = memo.find(v.oneline);
    if (vit == memo.end())
      throw InternalError("grothendieck recursion missed an element");
    for (int i = 1; i < n; ++i) {
      if (v(i) < v(i + 1)) continue; // ascent: v s_i is longer
      std::vector<int> u = v.oneline;
      std::swap(u[i - 1], u[i]);
      QPoly g = isobaric_plain(i, vit->second);
      if (auto uit = memo.find(u); uit != memo.end()) {
        if (!(uit->second == g))
          throw InternalError("grothendieck recursion is path dependent");
      } else {
        memo[u] = std::move(g);
      }
    }
  }
  return memo.at(key);
}

bool bruhat_leq_subword(const Permutation& u, const Permutation& w) {
  if (u.rank() != w.rank()) throw RankMismatch("bruhat oracle rank mismatch");
  const auto rws = reduced_words(w);
  if (rws.empty()) throw InternalError("no reduced word");
  const std::vector<int>& a = rws.front().letters;
  const int l = int(a.size());
  for (int mask = 0; mask < (1 << l); ++mask) {
    std::vector<int> sub;
    for (int j = 0; j < l; ++j)
      if (mask & (1 << j)) sub.push_back(a[j]);
    const Word cand(w.rank(), sub);
    if (is_reduced(cand) && word_to_perm(cand) == u) return true;
  }
  return false;
}

namespace {

void monomials_of_degree(int n, int d, Expv& acc, int pos,
                         std::vector<Expv>& out) {
  if (pos == n - 1) {
    acc[pos] = d;
    out.push_back(acc);
    return;
  }
  for (int k = 0; k <= d; ++k) {
    acc[pos] = k;
    monomials_of_degree(n, d - k, acc, pos + 1, out);
  }
}

std::vector<Expv> monomials_of_degree(int n, int d) {
  std::vector<Expv> out;
  Expv acc(n, 0);
  monomials_of_degree(n, d, acc, 0, out);
  return out;
}

// solvability of A x = rhs over the rationals (A given column-wise)
bool solvable(std::vector<std::vector<Rat>> cols, std::vector<Rat> rhs) {
  const size_t rows = rhs.size();
  size_t r = 0;
  for (size_t c = 0; c < cols.size() && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && cols[c][sel] == 0) ++sel;
    if (sel == rows) continue;
    for (auto& col : cols) std::swap(col[r], col[sel]);
    std::swap(rhs[r], rhs[sel]);
    const Rat piv = cols[c][r];
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || cols[c][i] == 0) continue;
      const Rat f = cols[c][i] / piv;
      for (size_t cc = c; cc < cols.size(); ++cc) cols[cc][i] -= f * cols[cc][r];
      rhs[i] -= f * rhs[r];
    }
    ++r;
  }
  // any leftover nonzero rhs entry in a zero row is an inconsistency
  for (size_t i = 0; i < rows; ++i) {
    if (rhs[i] == 0) continue;
    bool zero_row = true;
    for (const auto& col : cols)
      if (col[i] != 0) { zero_row = false; break; }
    if (zero_row) return false;
  }
  return true;
}

// one integer-polynomial slice (fixed generator power), split into
// homogeneous components and tested against m * e_k column spans
bool slice_in_ideal(int n, const std::map<Expv, Int, LexLess>& slice,
                    const std::vector<QPoly>& gens) {
  std::map<int, std::map<Expv, Int, LexLess>> by_deg;
  for (const auto& [e, v] : slice)
    if (v != 0) by_deg[expv_deg(e)][e] = v;
  for (const auto& [d, part] : by_deg) {
    const auto basis = monomials_of_degree(n, d);
    std::map<Expv, size_t, LexLess> row_of;
    for (size_t i = 0; i < basis.size(); ++i) row_of[basis[i]] = i;
    std::vector<std::vector<Rat>> cols;
    for (int k = 1; k <= n; ++k) {
      if (k > d) break;
      for (const Expv& m : monomials_of_degree(n, d - k)) {
        std::vector<Rat> col(basis.size(), 0);
        for (const auto& [ge, gc] : gens[k - 1].terms) {
          Expv e = ge;
          for (int j = 0; j < n; ++j) e[j] += m[j];
          col[row_of.at(e)] += Rat(gc.at(0));
        }
        cols.push_back(std::move(col));
      }
    }
    std::vector<Rat> rhs(basis.size(), 0);
    for (const auto& [e, v] : part) rhs[row_of.at(e)] = Rat(v);
    if (!solvable(std::move(cols), std::move(rhs))) return false;
  }
  return true;
}

} // namespace

bool in_relation_ideal(const QPoly& f) {
  const int n = f.n;
  std::vector<QPoly> gens;
  for (int k = 1; k <= n; ++k)
    gens.push_back(elem_sym(k, 1, n, n, TheorySpec::additive()));
  // slice by generator power; each slice is an integer polynomial and the
  // generators have integer coefficients, so membership tests decouple
  std::map<int, std::map<Expv, Int, LexLess>> slices;
  for (const auto& [e, c] : f.terms)
    for (size_t k = 0; k < c.c.size(); ++k)
      if (c.c[k] != 0) slices[int(k)][e] = c.c[k];
  for (const auto& [k, slice] : slices)
    if (!slice_in_ideal(n, slice, gens)) return false;
  return true;
}

std::vector<ConfigPoint> enumerate_config_brute(const Word& w, int q) {
  std::vector<std::vector<Subspace>> choices;
  long long total = 1;
  for (int a : w.letters) {
    choices.push_back(all_subspaces(q, w.n, a));
    total *= (long long)choices.back().size();
    if (total > 200000) throw TooLarge("brute-force configuration bound");
  }
  std::vector<ConfigPoint> out;
  ConfigPoint acc;
  auto rec = [&](auto&& self, size_t k) -> void {
    if (k == choices.size()) {
      if (in_config(w, acc)) out.push_back(acc);
      return;
    }
    for (const auto& s : choices[k]) {
      acc.spaces.push_back(s);
      self(self, k + 1);
      acc.spaces.pop_back();
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

long long gaussian_binomial(int q, int m, int d) {
  if (d < 0 || d > m) return 0;
  // [i j]_q = [i-1 j-1]_q + q^j [i-1 j]_q
  std::vector<std::vector<long long>> g(m + 1, std::vector<long long>(m + 2, 0));
  g[0][0] = 1;
  for (int i = 1; i <= m; ++i) {
    g[i][0] = 1;
    long long qj = 1;
    for (int j = 1; j <= i; ++j) {
      qj *= q;
      g[i][j] = g[i - 1][j - 1] + qj * g[i - 1][j];
    }
  }
  return g[m][d];
}

Permutation flag_bruhat_position(const FlagPoint& fl) {
  if (fl.steps.empty()) throw InvalidIndex("empty flag");
  const int amb = fl.steps[0].amb, q = fl.steps[0].q;
  std::vector<Subspace> U;
  U.push_back(zero_subspace(q, amb));
  for (const auto& s : fl.steps) U.push_back(s);
  U.push_back(full_subspace(q, amb));
  std::vector<int> oneline(amb);
  for (int a = 1; a <= amb; ++a) {
    int pos = -1;
    for (int b = 1; b <= amb; ++b) {
      const Subspace Eb = standard_span(q, amb, b);
      const int now = subspace_intersect(U[a], Eb).dim();
      const int before = subspace_intersect(U[a - 1], Eb).dim();
      if (now > before) {
        pos = b;
        break;
      }
    }
    if (pos < 0) throw InternalError("flag position: no rank jump");
    oneline[a - 1] = pos;
  }
  return Permutation(oneline);
}

} // namespace flagcob::oracles
