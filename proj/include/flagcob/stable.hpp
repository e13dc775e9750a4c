#pragma once

#include "flagcob/ddiff.hpp"

namespace flagcob {

// classes of Y_{c^[N] v} -> Fl_N for N = n..N_max, checked to be
// compatible under killing the top variable
struct StableFamily {
  int n = 0;
  Word v;
  TheorySpec theory;
  int N_max = 0;
  std::vector<QPoly> members; // members[k] lives at rank n+k
  bool verified = false;

  const QPoly& member(int N) const { return members.at(N - n); }
};

StableFamily stable_bs_family(const Word& v, int N_max, TheorySpec t);

// truncation of the stable class of the point (infinitesimal(2) only):
// (prod_{i<n} x_i^{n-i}) * (1 - y sum_{i=n+1}^{N-1} (i-n) x_{i+1} e_1(x_1..x_i))
QPoly chain_truncation(int n, int N);

// multiplier B_n(x) truncated to rank N:
// 1 - y sum_{i=n+1}^{N-1} (i-n) x_{i+1} e_1(x_1..x_i)
QPoly calB_truncation(int n, int N);

// stable class of the dominant Bott-Samelson cell attached to lam inside
// the rank-n staircase, truncated to rank N:
// x^lam (1 + y sum over segment orbits e_2(x_a..x_b)) * B_n
QPoly dominant_closed_form(const Partition& lam, int n, int N);

} // namespace flagcob
