#include "flagcob/word.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace flagcob {

Permutation::Permutation(std::vector<int> v) : oneline(std::move(v)) {
  std::vector<bool> seen(oneline.size(), false);
  for (int x : oneline) {
    if (x < 1 || x > int(oneline.size()) || seen[x - 1])
      throw InvalidIndex("not a permutation of [1..n]");
    seen[x - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  Permutation p;
  p.oneline = std::move(v);
  return p;
}

Permutation Permutation::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  Permutation p;
  p.oneline = std::move(v);
  return p;
}

Permutation Permutation::from_lehmer(const std::vector<int>& code, int n) {
  std::vector<int> avail(n);
  for (int i = 0; i < n; ++i) avail[i] = i + 1;
  std::vector<int> v;
  v.reserve(n);
  for (int i = 0; i < n; ++i) {
    int c = i < int(code.size()) ? code[i] : 0;
    if (c < 0 || c >= int(avail.size()))
      throw InvalidPartition("Lehmer code entry out of range");
    v.push_back(avail[c]);
    avail.erase(avail.begin() + c);
  }
  Permutation p;
  p.oneline = std::move(v);
  return p;
}

int Permutation::length() const {
  int inv = 0;
  const int n = rank();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (oneline[i] > oneline[j]) ++inv;
  return inv;
}

Permutation Permutation::inverse() const {
  std::vector<int> v(rank());
  for (int i = 1; i <= rank(); ++i) v[oneline[i - 1] - 1] = i;
  Permutation p;
  p.oneline = std::move(v);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (oneline[i] != i + 1) return false;
  return true;
}

Permutation compose(const Permutation& u, const Permutation& v) {
  if (u.rank() != v.rank()) throw RankMismatch("composing permutations of different rank");
  std::vector<int> w(u.rank());
  for (int i = 1; i <= u.rank(); ++i) w[i - 1] = u(v(i));
  Permutation p;
  p.oneline = std::move(w);
  return p;
}

Word::Word(int rank, std::vector<int> ls) : n(rank), letters(std::move(ls)) {
  if (n < 1) throw RankMismatch("word rank must be >= 1");
  for (int i : letters)
    if (i < 1 || i > n - 1)
      throw InvalidLetter("letter " + std::to_string(i) + " out of range for W_" +
                          std::to_string(n));
}

Word Word::concat(const Word& o) const {
  if (n != o.n) throw RankMismatch("concatenating words of different rank");
  std::vector<int> ls = letters;
  ls.insert(ls.end(), o.letters.begin(), o.letters.end());
  return Word(n, std::move(ls));
}

Word Word::lifted(int new_rank) const {
  if (new_rank < n) throw RankMismatch("lifted: rank may only grow");
  return Word(new_rank, letters);
}

std::string Word::str() const {
  std::ostringstream os;
  for (size_t k = 0; k < letters.size(); ++k) {
    if (k) os << ',';
    os << letters[k];
  }
  return os.str();
}

Word parse_word(const std::string& csv, int rank) {
  std::vector<int> ls;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      ls.push_back(v);
    } catch (const std::exception&) {
      throw Error("bad word letter '" + item + "' in '" + csv + "'");
    }
  }
  return Word(rank, std::move(ls));
}

Permutation word_to_perm(const Word& w) {
  std::vector<int> v(w.n);
  for (int i = 0; i < w.n; ++i) v[i] = i + 1;
  for (int s : w.letters) std::swap(v[s - 1], v[s]);
  Permutation p;
  p.oneline = std::move(v);
  return p;
}

bool is_reduced(const Word& w) {
  return word_to_perm(w).length() == w.size();
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  if (u.rank() != w.rank()) throw RankMismatch("Bruhat comparison across ranks");
  const int n = u.rank();
  std::vector<int> a, b;
  a.reserve(n);
  b.reserve(n);
  for (int k = 1; k <= n; ++k) {
    a.push_back(u(k));
    b.push_back(w(k));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int j = 0; j < k; ++j)
      if (b[j] < a[j]) return false;
  }
  return true;
}

Word coxeter_word(int m, int rank) {
  if (m < 0 || m > rank - 1) throw InvalidLetter("coxeter_word: m out of range");
  std::vector<int> ls(m);
  for (int i = 0; i < m; ++i) ls[i] = i + 1;
  return Word(rank, std::move(ls));
}

Word coxeter_chain(int n, int N) {
  if (n < 1 || N < n) throw RankMismatch("coxeter_chain: need 1 <= n <= N");
  Word w = Word::empty(N);
  for (int m = N - 1; m >= n; --m) w = w.concat(coxeter_word(m, N));
  return w;
}

Word commutation_normal_form(const Word& w) {
  std::vector<int> rest = w.letters;
  std::vector<int> out;
  out.reserve(rest.size());
  while (!rest.empty()) {
    // frontable: every earlier letter commutes with it
    int best = -1, best_pos = -1;
    for (size_t p = 0; p < rest.size(); ++p) {
      bool ok = true;
      for (size_t q = 0; q < p && ok; ++q)
        if (std::abs(rest[q] - rest[p]) < 2) ok = false;
      if (ok && (best < 0 || rest[p] < best)) {
        best = rest[p];
        best_pos = int(p);
      }
    }
    out.push_back(best);
    rest.erase(rest.begin() + best_pos);
  }
  return Word(w.n, std::move(out));
}

bool commuting_equivalent(const Word& a, const Word& b) {
  if (a.n != b.n || a.size() != b.size()) return false;
  return commutation_normal_form(a).letters == commutation_normal_form(b).letters;
}

std::optional<UcvDecomposition> decompose_ucv(const Word& w, bool mirrored) {
  const int rank = w.n;
  const int n = rank - 1;
  if (n < 1) throw RankMismatch("decompose_ucv: rank must be >= 2");
  if (!is_reduced(w)) throw NotReduced("decompose_ucv: word is not reduced");

  if (mirrored) {
    // conjugate by w0: letter i <-> n+1-i, c <-> c'
    std::vector<int> ml(w.letters.size());
    for (size_t k = 0; k < w.letters.size(); ++k) ml[k] = n + 1 - w.letters[k];
    auto dec = decompose_ucv(Word(rank, std::move(ml)), false);
    if (!dec) return std::nullopt;
    auto back = [&](const Word& x) {
      std::vector<int> ls(x.letters.size());
      for (size_t k = 0; k < x.letters.size(); ++k) ls[k] = n + 1 - x.letters[k];
      return Word(rank, std::move(ls));
    };
    UcvDecomposition out;
    out.u = back(dec->u);
    out.v = back(dec->v);
    out.mirrored = true;
    std::vector<int> cprime(n);
    for (int i = 0; i < n; ++i) cprime[i] = n - i;
    out.normal_word = out.u.concat(Word(rank, std::move(cprime))).concat(out.v);
    return out;
  }

  // greedily select the first s1, then the first s2 after it, ...
  std::vector<int> pos(n + 1, -1);
  int from = 0;
  for (int a = 1; a <= n; ++a) {
    int p = -1;
    for (int k = from; k < w.size(); ++k) {
      if (w.letters[k] == a) {
        p = k;
        break;
      }
    }
    if (p < 0) return std::nullopt; // no s1...sn subword <=> w not above c
    pos[a] = p;
    from = p + 1;
  }

  // segment before the chosen s_a contributes letters > a to u and
  // letters < a to v; everything after the chosen s_n goes to v
  std::vector<int> ul, vl;
  int seg_start = 0;
  for (int a = 1; a <= n; ++a) {
    for (int k = seg_start; k < pos[a]; ++k) {
      const int x = w.letters[k];
      if (x > a) {
        ul.push_back(x);
      } else {
        // reducedness rules out x == a (it would have been chosen) and
        // x == a-1 (an earlier braid argument); both mean invalid input
        if (x >= a - 1) throw InternalError("decompose_ucv: segment letter clash");
        vl.push_back(x);
      }
    }
    seg_start = pos[a] + 1;
  }
  for (int k = seg_start; k < w.size(); ++k) {
    const int x = w.letters[k];
    if (x == n) throw InternalError("decompose_ucv: trailing letter n in v part");
    vl.push_back(x);
  }

  UcvDecomposition out;
  out.u = Word(rank, std::move(ul));
  out.v = Word(rank, std::move(vl));
  out.mirrored = false;
  out.normal_word = out.u.concat(coxeter_word(n, rank)).concat(out.v);
  if (!commuting_equivalent(out.normal_word, w))
    throw InternalError("decompose_ucv: u c v not commutation-equivalent to input");
  return out;
}

Word cinv_shift_concat(const UcvDecomposition& dec) {
  const int rank = dec.u.n;
  std::vector<int> ls;
  ls.reserve(dec.u.letters.size() + dec.v.letters.size());
  for (int x : dec.u.letters) ls.push_back(dec.mirrored ? x + 1 : x - 1);
  for (int x : dec.v.letters) ls.push_back(x);
  return Word(rank, std::move(ls));
}

std::optional<int> last_occurrence(const Word& w, int a, int prefix_len) {
  if (prefix_len < 0 || prefix_len > w.size())
    throw InvalidIndex("last_occurrence: bad prefix length");
  if (a < 1 || a > w.n - 1) return std::nullopt; // letters outside the alphabet never occur
  for (int k = prefix_len; k >= 1; --k)
    if (w.letters[k - 1] == a) return k;
  return std::nullopt;
}

PredecessorTable predecessor_table(const Word& w) {
  PredecessorTable t;
  const int len = w.size();
  t.lp.resize(len + 1);
  t.rp.resize(len + 1);
  t.lo.assign(std::max(w.n, 1), std::nullopt);
  for (int k = 1; k <= len; ++k) {
    const int a = w.letters[k - 1];
    t.lp[k] = last_occurrence(w, a - 1, k);
    t.rp[k] = last_occurrence(w, a + 1, k);
  }
  for (int a = 1; a <= w.n - 1; ++a) t.lo[a] = last_occurrence(w, a, len);
  return t;
}

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw InvalidPartition("partition parts must be positive");
    if (i && parts[i] > parts[i - 1])
      throw InvalidPartition("partition parts must be weakly decreasing");
  }
}

Partition parse_partition(const std::string& csv) {
  std::vector<int> p;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    p.push_back(std::stoi(item));
  }
  return Partition(std::move(p));
}

bool fits_staircase(const Partition& lam, int n) {
  for (int i = 1; i <= lam.size(); ++i)
    if (lam.part(i) > n - i) return false;
  return true;
}

Permutation dominant_perm(const Partition& lam, int n) {
  if (!fits_staircase(lam, n))
    throw InvalidPartition("partition does not fit inside the staircase");
  return Permutation::from_lehmer(lam.parts, n);
}

DominantReading dominant_reading(const Partition& lam, int n) {
  if (!fits_staircase(lam, n))
    throw InvalidPartition("partition does not fit inside the staircase");
  DominantReading out;
  std::vector<int> all;
  // anti-diagonal i: staircase boxes (a, b) with a+b = n+1-i, row a unshaded
  // iff b > lam_a; stop after the last diagonal containing an unshaded box
  std::vector<std::vector<int>> diag_rows(n + 1);
  int m = 0;
  for (int i = 1; i <= n - 1; ++i) {
    for (int a = 1; a <= n - i; ++a) {
      const int b = n + 1 - i - a;
      if (b >= 1 && b > lam.part(a)) diag_rows[i].push_back(a);
    }
    if (!diag_rows[i].empty()) m = i;
  }
  for (int i = 1; i <= m; ++i) {
    if (diag_rows[i].empty())
      throw InternalError("dominant reading: empty intermediate anti-diagonal");
    Word seg(n, diag_rows[i]);
    // orbits of the segment permutation; rows in a diagonal are distinct,
    // so each run of consecutive letters [a..b] gives the cycle [a, b+1]
    std::vector<std::pair<int, int>> orbs;
    const Permutation p = word_to_perm(seg);
    std::vector<bool> used(n + 1, false);
    for (int s = 1; s <= n; ++s) {
      if (used[s]) continue;
      int lo = s, hi = s, cur = s;
      used[s] = true;
      do {
        cur = p(cur);
        used[cur] = true;
        lo = std::min(lo, cur);
        hi = std::max(hi, cur);
      } while (cur != s);
      if (hi > lo) orbs.emplace_back(lo, hi);
    }
    std::sort(orbs.begin(), orbs.end());
    out.segments.push_back(seg);
    out.orbits.push_back(std::move(orbs));
    all.insert(all.end(), diag_rows[i].begin(), diag_rows[i].end());
  }
  out.reading_word = Word(n, std::move(all));
  return out;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::vector<Permutation> out;
  do {
    Permutation p;
    p.oneline = v;
    out.push_back(std::move(p));
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

namespace {

void reduced_words_rec(const Permutation& w, std::vector<int>& acc,
                       std::vector<Word>& out) {
  const int n = w.rank();
  bool any = false;
  for (int i = 1; i <= n - 1; ++i) {
    if (w(i) > w(i + 1)) { // right descent: w s_i shorter
      any = true;
      Permutation ws = w;
      std::swap(ws.oneline[i - 1], ws.oneline[i]);
      acc.push_back(i);
      reduced_words_rec(ws, acc, out);
      acc.pop_back();
    }
  }
  if (!any) {
    // reached the identity; letters were collected from the right end
    std::vector<int> ls(acc.rbegin(), acc.rend());
    out.push_back(Word(n, std::move(ls)));
  }
}

} // namespace

std::vector<Word> reduced_words(const Permutation& w) {
  std::vector<Word> out;
  std::vector<int> acc;
  reduced_words_rec(w, acc, out);
  return out;
}

std::vector<Word> all_reduced_words_upto(int rank, int max_len) {
  std::vector<Word> out;
  for (const Permutation& p : all_permutations(rank)) {
    if (p.length() > max_len) continue;
    for (Word& w : reduced_words(p)) out.push_back(std::move(w));
  }
  // deterministic order: by length, then lexicographically
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.letters < b.letters;
  });
  return out;
}

} // namespace flagcob
