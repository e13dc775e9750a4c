#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagcob/errors.hpp"

namespace flagcob {

// Permutation of [1..n], one-line notation.
struct Permutation {
  std::vector<int> oneline; // oneline[i-1] = w(i), values 1..n

  Permutation() = default;
  explicit Permutation(std::vector<int> v);
  static Permutation identity(int n);
  static Permutation longest(int n); // w0
  static Permutation from_lehmer(const std::vector<int>& code, int n);

  int rank() const { return int(oneline.size()); }
  int operator()(int i) const { return oneline[i - 1]; }
  int length() const; // inversion count
  Permutation inverse() const;
  bool is_identity() const;

  bool operator==(const Permutation&) const = default;
};

// (uv)(i) = u(v(i))
Permutation compose(const Permutation& u, const Permutation& v);

// Word in the simple reflections s_1..s_{n-1} of W_n.  Letters act on
// one-line notation left to right as position swaps (i.e. right
// multiplication by s_i): s1 s2 ... s_k sends [1..n] to [2,...,k+1,1,...].
struct Word {
  int n = 0; // rank of the ambient group W_n
  std::vector<int> letters;

  Word() = default;
  Word(int rank, std::vector<int> ls);
  static Word empty(int rank) { return Word(rank, {}); }

  int size() const { return int(letters.size()); }
  Word concat(const Word& o) const;          // same rank
  Word lifted(int new_rank) const;           // same letters, bigger group
  std::string str() const;                   // "2,3,4,3"

  bool operator==(const Word&) const = default;
};

Word parse_word(const std::string& csv, int rank);

Permutation word_to_perm(const Word& w);
bool is_reduced(const Word& w);

// Bruhat order via the sorted-prefix dominance criterion
bool bruhat_leq(const Permutation& u, const Permutation& w);

// the Coxeter word c^(m) = s1 s2 ... s_m, living in W_{rank}
Word coxeter_word(int m, int rank);
// c^[N] = c^(N-1) c^(N-2) ... c^(n) at rank N (empty for N == n)
Word coxeter_chain(int n, int N);

// Lexicographically least representative of the commutation class
// (greedy: repeatedly front the smallest currently frontable letter).
Word commutation_normal_form(const Word& w);
bool commuting_equivalent(const Word& a, const Word& b);

// For a reduced word w in W_{n+1} lying Bruhat-above the Coxeter element
// c = s1...sn, produce u (no letter 1) and v (no letter n) with
// u c v ~ w modulo commuting moves; nullopt when w is not above c.
// Mirrored variant uses c' = sn...s1 (u avoids letter n, v avoids 1).
struct UcvDecomposition {
  Word u, v;
  Word normal_word; // u c v (or u c' v), same rank as input
  bool mirrored = false;
  int r1() const { return u.size(); }
  int r2() const { return v.size(); }
};
std::optional<UcvDecomposition> decompose_ucv(const Word& w, bool mirrored = false);

// letters of u shifted down by one (or up, mirrored), then v appended:
// the right-hand-side word of the divisor product identity
Word cinv_shift_concat(const UcvDecomposition& dec);

// -infinity is std::nullopt; positions are 1-based
struct PredecessorTable {
  std::vector<std::optional<int>> lp, rp;       // per position 1..len
  std::vector<std::optional<int>> lo;           // per letter 1..n-1, whole word
};
PredecessorTable predecessor_table(const Word& w);
// last occurrence of letter a within the prefix w[1..k]
std::optional<int> last_occurrence(const Word& w, int a, int prefix_len);

// Partitions and the dominant reading.
struct Partition {
  std::vector<int> parts; // weakly decreasing, positive

  Partition() = default;
  explicit Partition(std::vector<int> p);
  int size() const { return int(parts.size()); }
  int part(int i) const { return i <= size() ? parts[i - 1] : 0; } // 1-based
  bool operator==(const Partition&) const = default;
};

Partition parse_partition(const std::string& csv);
bool fits_staircase(const Partition& lam, int n); // lam_i <= n-i

// dominant permutation with Lehmer code lam, in S_n
Permutation dominant_perm(const Partition& lam, int n);

struct DominantReading {
  std::vector<Word> segments;                        // rank n each
  std::vector<std::vector<std::pair<int, int>>> orbits; // per segment: [a,b]
  Word reading_word;                                 // concatenation
};
// Anti-diagonal reading of the complement of lam in the staircase:
// anti-diagonal i holds boxes (a,b) with a+b = n+1-i; unshaded boxes are
// read by increasing row index; orbits are the size->=2 cycles of each
// segment, which are intervals.
DominantReading dominant_reading(const Partition& lam, int n);

// enumeration helpers
std::vector<Permutation> all_permutations(int n);
std::vector<Word> reduced_words(const Permutation& w);
// all reduced words of all elements of W_rank with length <= max_len
std::vector<Word> all_reduced_words_upto(int rank, int max_len);

} // namespace flagcob
