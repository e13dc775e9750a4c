#include "flagcob/ffmodel.hpp"

#include <algorithm>
#include <set>

#include "flagcob/errors.hpp"

namespace flagcob {

namespace {

int mod_pos(long long x, int q) { return int(((x % q) + q) % q); }

int mod_inv(int a, int q) {
  a = mod_pos(a, q);
  for (int b = 1; b < q; ++b)
    if (a * b % q == 1) return b;
  throw InternalError("mod_inv: not invertible");
}

// in-place RREF; returns the number of pivot rows (which end up on top,
// in pivot-column order)
int rref_inplace(std::vector<std::vector<int>>& m, int q) {
  if (m.empty()) return 0;
  const int cols = int(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < int(m.size()); ++c) {
    int sel = -1;
    for (int i = r; i < int(m.size()); ++i)
      if (m[i][c] % q != 0) { sel = i; break; }
    if (sel < 0) continue;
    std::swap(m[r], m[sel]);
    const int inv = mod_inv(m[r][c], q);
    for (int j = 0; j < cols; ++j) m[r][j] = mod_pos(1LL * m[r][j] * inv, q);
    for (int i = 0; i < int(m.size()); ++i) {
      if (i == r || m[i][c] % q == 0) continue;
      const int f = mod_pos(m[i][c], q);
      for (int j = 0; j < cols; ++j)
        m[i][j] = mod_pos(m[i][j] - 1LL * f * m[r][j], q);
    }
    ++r;
  }
  return r;
}

long long ipow(long long b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void check_same_space(const Subspace& a, const Subspace& b) {
  if (a.q != b.q || a.amb != b.amb)
    throw Mismatch("subspace operands live in different ambient spaces");
}

} // namespace

bool Subspace::operator<(const Subspace& o) const {
  if (amb != o.amb) return amb < o.amb;
  if (rows.size() != o.rows.size()) return rows.size() < o.rows.size();
  return rows < o.rows;
}

Subspace rref_span(int q, int amb, std::vector<std::vector<int>> vectors) {
  for (auto& v : vectors) {
    if (int(v.size()) != amb) throw InternalError("rref_span: bad vector size");
    for (auto& x : v) x = mod_pos(x, q);
  }
  const int r = rref_inplace(vectors, q);
  vectors.resize(r);
  return Subspace{q, amb, std::move(vectors)};
}

Subspace zero_subspace(int q, int amb) { return Subspace{q, amb, {}}; }

Subspace full_subspace(int q, int amb) { return standard_span(q, amb, amb); }

Subspace coordinate_span(int q, int amb, int lo, int hi) {
  if (lo < 1 || hi > amb) throw InvalidIndex("coordinate_span out of range");
  std::vector<std::vector<int>> rows;
  for (int i = lo; i <= hi; ++i) {
    std::vector<int> v(amb, 0);
    v[i - 1] = 1;
    rows.push_back(std::move(v));
  }
  return Subspace{q, amb, std::move(rows)};
}

Subspace standard_span(int q, int amb, int k) {
  return coordinate_span(q, amb, 1, k);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  auto rows = a.rows;
  rows.insert(rows.end(), b.rows.begin(), b.rows.end());
  return rref_span(a.q, a.amb, std::move(rows));
}

// Zassenhaus: row reduce [A|A; B|0]; rows with zero left half carry a
// basis of the intersection in their right half.
Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  check_same_space(a, b);
  const int amb = a.amb, q = a.q;
  std::vector<std::vector<int>> m;
  for (const auto& v : a.rows) {
    std::vector<int> row(2 * amb, 0);
    for (int j = 0; j < amb; ++j) row[j] = row[amb + j] = v[j];
    m.push_back(std::move(row));
  }
  for (const auto& v : b.rows) {
    std::vector<int> row(2 * amb, 0);
    for (int j = 0; j < amb; ++j) row[j] = v[j];
    m.push_back(std::move(row));
  }
  const int r = rref_inplace(m, q);
  std::vector<std::vector<int>> inter;
  for (int i = 0; i < r; ++i) {
    bool left_zero = true;
    for (int j = 0; j < amb; ++j)
      if (m[i][j] != 0) { left_zero = false; break; }
    if (left_zero)
      inter.emplace_back(m[i].begin() + amb, m[i].end());
  }
  return rref_span(q, amb, std::move(inter));
}

bool subspace_member(const Subspace& s, const std::vector<int>& v) {
  std::vector<int> w = v;
  for (auto& x : w) x = mod_pos(x, s.q);
  for (const auto& row : s.rows) {
    int piv = 0;
    while (piv < s.amb && row[piv] == 0) ++piv;
    if (piv == s.amb) continue;
    const int f = w[piv];
    if (f == 0) continue;
    for (int j = 0; j < s.amb; ++j) w[j] = mod_pos(w[j] - 1LL * f * row[j], s.q);
  }
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  check_same_space(big, small);
  for (const auto& v : small.rows)
    if (!subspace_member(big, v)) return false;
  return true;
}

std::vector<Subspace> intermediate_subspaces(const Subspace& lower,
                                             const Subspace& upper) {
  check_same_space(lower, upper);
  if (upper.dim() != lower.dim() + 2 || !subspace_contains(upper, lower))
    throw InternalError("intermediate_subspaces: not a codimension-2 pair");
  const int q = lower.q, amb = lower.amb;
  // two vectors completing lower inside upper
  std::vector<std::vector<int>> work = lower.rows;
  std::vector<std::vector<int>> gap;
  for (const auto& v : upper.rows) {
    auto trial = work;
    trial.push_back(v);
    if (rref_inplace(trial, q) > int(work.size())) {
      work.push_back(v);
      rref_inplace(work, q);
      gap.push_back(v);
      if (gap.size() == 2) break;
    }
  }
  if (gap.size() != 2) throw InternalError("intermediate_subspaces: gap basis");
  std::vector<Subspace> out;
  for (int t = 0; t < q; ++t) {
    std::vector<int> v(amb);
    for (int j = 0; j < amb; ++j)
      v[j] = mod_pos(gap[0][j] + 1LL * t * gap[1][j], q);
    auto rows = lower.rows;
    rows.push_back(std::move(v));
    out.push_back(rref_span(q, amb, std::move(rows)));
  }
  {
    auto rows = lower.rows;
    rows.push_back(gap[1]);
    out.push_back(rref_span(q, amb, std::move(rows)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subspace> all_subspaces(int q, int amb, int d) {
  if (d < 0 || d > amb) return {};
  if (d == 0) return {zero_subspace(q, amb)};
  std::vector<Subspace> out;
  // choose pivot columns, then run over the free entries of the RREF shape
  std::vector<int> piv(d);
  for (int i = 0; i < d; ++i) piv[i] = i;
  while (true) {
    std::vector<std::pair<int, int>> free_pos; // (row, col)
    for (int i = 0; i < d; ++i)
      for (int c = piv[i] + 1; c < amb; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end())
          free_pos.emplace_back(i, c);
    const long long total = ipow(q, int(free_pos.size()));
    for (long long code = 0; code < total; ++code) {
      std::vector<std::vector<int>> rows(d, std::vector<int>(amb, 0));
      for (int i = 0; i < d; ++i) rows[i][piv[i]] = 1;
      long long c = code;
      for (const auto& [i, col] : free_pos) {
        rows[i][col] = int(c % q);
        c /= q;
      }
      out.push_back(Subspace{q, amb, std::move(rows)});
    }
    // next pivot combination
    int i = d - 1;
    while (i >= 0 && piv[i] == amb - d + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (int j = i + 1; j < d; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Subspace permute_basis(const Permutation& p, const Subspace& s) {
  if (p.rank() != s.amb) throw RankMismatch("permute_basis rank mismatch");
  std::vector<std::vector<int>> rows;
  for (const auto& v : s.rows) {
    std::vector<int> w(s.amb, 0);
    for (int j = 1; j <= s.amb; ++j) w[p(j) - 1] = v[j - 1];
    rows.push_back(std::move(w));
  }
  return rref_span(s.q, s.amb, std::move(rows));
}

bool in_config(const Word& w, const ConfigPoint& p) {
  if (int(p.spaces.size()) != w.size()) return false;
  if (w.size() == 0) return true;
  const int q = p.spaces[0].q, amb = w.n;
  const auto pred = predecessor_table(w);
  for (int k = 1; k <= w.size(); ++k) {
    const auto& V = p.spaces[k - 1];
    const int a = w.letters[k - 1];
    if (V.q != q || V.amb != amb || V.dim() != a) return false;
    const Subspace L = pred.lp[k] ? p.spaces[*pred.lp[k] - 1]
                                  : standard_span(q, amb, a - 1);
    const Subspace R = pred.rp[k] ? p.spaces[*pred.rp[k] - 1]
                                  : standard_span(q, amb, a + 1);
    if (!subspace_contains(V, L) || !subspace_contains(R, V)) return false;
  }
  return true;
}

std::vector<ConfigPoint> enumerate_config(const Word& w, int q) {
  if (q != 2 && q != 3 && q != 5)
    throw InvalidField("q must be one of 2, 3, 5");
  if (w.size() > 8 || ipow(q + 1, w.size()) > 70000)
    throw TooLarge("configuration enumeration bound exceeded");
  const int amb = w.n;
  std::vector<ConfigPoint> out;
  // current flag: cur[b] = space of the last occurrence of letter b so far
  std::vector<Subspace> cur;
  for (int b = 0; b <= amb; ++b) cur.push_back(standard_span(q, amb, b));
  ConfigPoint acc;
  auto rec = [&](auto&& self, int k) -> void {
    if (k > w.size()) {
      out.push_back(acc);
      return;
    }
    const int a = w.letters[k - 1];
    const Subspace saved = cur[a];
    for (const auto& V : intermediate_subspaces(cur[a - 1], cur[a + 1])) {
      cur[a] = V;
      acc.spaces.push_back(V);
      self(self, k + 1);
      acc.spaces.pop_back();
    }
    cur[a] = saved;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

FlagPoint project_flag(const ConfigPoint& p, const Word& w, int q_default) {
  const int amb = w.n;
  const int q = p.spaces.empty() ? q_default : p.spaces[0].q;
  const auto pred = predecessor_table(w);
  FlagPoint fl;
  for (int a = 1; a <= amb - 1; ++a)
    fl.steps.push_back(pred.lo[a] ? p.spaces[*pred.lo[a] - 1]
                                  : standard_span(q, amb, a));
  for (int a = 1; a <= amb - 1; ++a) {
    if (fl.steps[a - 1].dim() != a)
      throw InternalError("project_flag: wrong step dimension");
    if (a >= 2 && !subspace_contains(fl.steps[a - 1], fl.steps[a - 2]))
      throw InternalError("project_flag: flag not nested");
  }
  return fl;
}

ConfigPoint commuting_iso(const ConfigPoint& p, const Word& w1, const Word& w2) {
  if (w1.n != w2.n || w1.size() != w2.size())
    throw InvalidMove("words are not the same shape");
  int at = -1;
  for (int k = 0; k + 1 < w1.size(); ++k) {
    if (w1.letters[k] == w2.letters[k]) continue;
    if (at >= 0) throw InvalidMove("words differ in more than one place");
    if (w1.letters[k] != w2.letters[k + 1] || w1.letters[k + 1] != w2.letters[k] ||
        std::abs(w1.letters[k] - w1.letters[k + 1]) < 2)
      throw InvalidMove("not a single swap of distant letters");
    at = k;
    ++k; // the pair is consumed
  }
  if (at < 0) throw InvalidMove("words are identical");
  for (int k = at + 2; k < w1.size(); ++k)
    if (w1.letters[k] != w2.letters[k])
      throw InvalidMove("words differ in more than one place");
  if (!in_config(w1, p))
    throw InternalError("commuting_iso: point not in the source configuration");
  ConfigPoint out = p;
  std::swap(out.spaces[at], out.spaces[at + 1]);
  return out;
}

FiberReport fiber_bijection(const Word& w, int q) {
  if (w.n < 2) throw InvalidIndex("fiber_bijection needs rank >= 2");
  if (!is_reduced(w)) throw NotReduced("fiber_bijection needs a reduced word");
  FiberReport rep;
  rep.w = w;
  rep.q = q;
  const int rank = w.n, n = rank - 1;
  const Permutation c = word_to_perm(coxeter_word(n, rank));
  const Permutation cinv = c.inverse();
  rep.bruhat_above = bruhat_leq(c, word_to_perm(w));
  const Subspace En1 = coordinate_span(q, rank, 2, rank);

  auto dec = decompose_ucv(w, false);
  rep.above_c = dec.has_value();
  if (rep.above_c != rep.bruhat_above)
    throw InternalError("decomposition disagrees with Bruhat order");

  // fiber of the word itself, by direct enumeration
  long long direct = 0;
  for (const auto& p : enumerate_config(w, q))
    if (project_flag(p, w, q).steps[n - 1] == En1) ++direct;

  if (!dec) {
    rep.fiber_count = direct;
    rep.expected_count = 0;
    rep.count_ok = rep.direct_count_ok = (direct == 0);
    rep.membership_ok = rep.gf_identity = rep.fg_identity = rep.projection_ok =
        true; // vacuous
    rep.ok = rep.count_ok;
    return rep;
  }

  const int r1 = dec->r1(), r2 = dec->r2();
  rep.r1 = r1;
  rep.r2 = r2;
  rep.normal_word = dec->normal_word;
  rep.wprime = cinv_shift_concat(*dec);
  if (!is_reduced(rep.wprime))
    throw InternalError("c^{-1}(u) v is not reduced");
  const Word& nw = rep.normal_word;
  const int r = nw.size();
  rep.expected_count = ipow(q + 1, r1 + r2);
  rep.direct_count_ok = (direct == rep.expected_count);

  std::vector<ConfigPoint> fiber;
  for (const auto& p : enumerate_config(nw, q))
    if (p.spaces[r1 + n - 1] == En1) fiber.push_back(p);
  rep.fiber_count = int(fiber.size());
  rep.count_ok = (rep.fiber_count == rep.expected_count);

  const auto pred_nw = predecessor_table(nw);
  auto fmap = [&](const ConfigPoint& p) {
    ConfigPoint h;
    for (int a = 1; a <= r1; ++a)
      h.spaces.push_back(subspace_intersect(p.spaces[a - 1], En1));
    for (int a = r1 + 1; a <= r1 + r2; ++a)
      h.spaces.push_back(p.spaces[a + n - 1]);
    return h;
  };
  const Subspace e1 = standard_span(q, rank, 1);
  auto gmap = [&](const ConfigPoint& h) {
    ConfigPoint p;
    p.spaces.resize(r);
    for (int k = 1; k <= r1; ++k)
      p.spaces[k - 1] = subspace_sum(h.spaces[k - 1], e1);
    for (int k = r1 + 1; k <= r1 + n; ++k) {
      const Subspace R = pred_nw.rp[k]
                             ? p.spaces[*pred_nw.rp[k] - 1]
                             : standard_span(q, rank, nw.letters[k - 1] + 1);
      p.spaces[k - 1] = subspace_intersect(R, En1);
    }
    for (int k = r1 + n + 1; k <= r; ++k) p.spaces[k - 1] = h.spaces[k - n - 1];
    return p;
  };
  auto relabel = [&](const Permutation& g, const ConfigPoint& pt) {
    ConfigPoint out;
    for (const auto& s : pt.spaces) out.spaces.push_back(permute_basis(g, s));
    return out;
  };

  const auto pts_wp = enumerate_config(rep.wprime, q);
  const std::set<ConfigPoint> wp_set(pts_wp.begin(), pts_wp.end());
  const std::set<ConfigPoint> fiber_set(fiber.begin(), fiber.end());

  bool memb = true, gf = true, proj = true;
  for (const auto& p : fiber) {
    const ConfigPoint h = fmap(p);
    const ConfigPoint h_std = relabel(cinv, h);
    memb = memb && in_config(rep.wprime, h_std) && wp_set.count(h_std) > 0;
    gf = gf && (gmap(h) == p);
    FlagPoint rhs = project_flag(h_std, rep.wprime, q);
    for (auto& s : rhs.steps) s = permute_basis(c, s);
    proj = proj && (project_flag(p, nw, q) == rhs);
  }
  bool fg = true;
  for (const auto& pstd : pts_wp) {
    const ConfigPoint h = relabel(c, pstd);
    const ConfigPoint v = gmap(h);
    fg = fg && fiber_set.count(v) > 0 && (fmap(v) == h);
  }
  rep.membership_ok = memb;
  rep.gf_identity = gf;
  rep.fg_identity = fg;
  rep.projection_ok = proj;
  rep.ok = rep.count_ok && rep.direct_count_ok && memb && gf && fg && proj;
  return rep;
}

} // namespace flagcob
