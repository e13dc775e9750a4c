#pragma once

#include <vector>

#include "flagcob/word.hpp"

namespace flagcob {

// Subspace of F_q^amb, q prime, stored as its reduced row echelon basis.
// RREF is the unique canonical representative, so equality and ordering
// are plain vector comparisons.
struct Subspace {
  int q = 2;
  int amb = 0;
  std::vector<std::vector<int>> rows; // RREF, entries in [0,q)

  int dim() const { return int(rows.size()); }

  bool operator==(const Subspace&) const = default;
  bool operator<(const Subspace& o) const;
};

// span of the given vectors, canonicalized
Subspace rref_span(int q, int amb, std::vector<std::vector<int>> vectors);

Subspace zero_subspace(int q, int amb);
Subspace full_subspace(int q, int amb);
// <e_lo, ..., e_hi> (1-based, inclusive; empty when lo > hi)
Subspace coordinate_span(int q, int amb, int lo, int hi);
// <e_1, ..., e_k>
Subspace standard_span(int q, int amb, int k);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& big, const Subspace& small);
bool subspace_member(const Subspace& s, const std::vector<int>& v);

// the q+1 subspaces V with lower < V < upper when dim upper = dim lower + 2
std::vector<Subspace> intermediate_subspaces(const Subspace& lower,
                                             const Subspace& upper);

// every dim-d subspace of F_q^amb (by RREF shape enumeration)
std::vector<Subspace> all_subspaces(int q, int amb, int d);

// image of s under the basis permutation e_j -> e_{p(j)}
Subspace permute_basis(const Permutation& p, const Subspace& s);

// One point of the configuration space of a word: spaces[k-1] is the
// subspace attached to position k.
struct ConfigPoint {
  std::vector<Subspace> spaces;

  bool operator==(const ConfigPoint&) const = default;
  bool operator<(const ConfigPoint& o) const { return spaces < o.spaces; }
};

// Partial flag U_1 < ... < U_{n} in F_q^{n+1}.
struct FlagPoint {
  std::vector<Subspace> steps;

  bool operator==(const FlagPoint&) const = default;
  bool operator<(const FlagPoint& o) const { return steps < o.steps; }
};

// dimension and pinching conditions at every position, with the standard
// sentinel spaces <e_1..e_{a-1}> / <e_1..e_{a+1}> for missing predecessors
bool in_config(const Word& w, const ConfigPoint& p);

// all points of the configuration space of w over F_q: position by
// position, each space is one of the q+1 subspaces pinched between the
// current flag's neighbours.  |result| = (q+1)^{len(w)}.
std::vector<ConfigPoint> enumerate_config(const Word& w, int q);

// the flag of last-occurrence spaces (standard spaces where a letter is
// missing); throws InternalError if the result fails to be nested.  The
// field is read off the point; q_default covers the empty point, which
// carries none.
FlagPoint project_flag(const ConfigPoint& p, const Word& w, int q_default = 2);

// transport a point across a single commuting move w1 -> w2 (swap of two
// adjacent distant letters): transposes the two spaces
ConfigPoint commuting_iso(const ConfigPoint& p, const Word& w1, const Word& w2);

// Point-level verification of the fiber-product isomorphism
//   X_w x_{Fl_{n+1}} F_n  ~  c(X_{c^{-1}(u) v})
// over F_q, on the u c v normal form of w.
struct FiberReport {
  Word w;
  int q = 2;
  bool reduced = true;
  bool above_c = false;      // decomposition succeeded
  bool bruhat_above = false; // c <= w in Bruhat order (independent check)
  int r1 = 0, r2 = 0;
  Word normal_word; // u c v, commutation-equivalent to w
  Word wprime;      // c^{-1}(u) v
  long long fiber_count = 0;
  long long expected_count = 0; // (q+1)^{r1+r2}, or 0 when w is not above c
  bool count_ok = false;
  bool direct_count_ok = false; // fiber of w itself, before commuting moves
  bool membership_ok = false;   // c^{-1}(f(point)) lands in X_{w'}
  bool gf_identity = false;     // g(f(p)) = p on the fiber
  bool fg_identity = false;     // f(g(h)) = h on all of c(X_{w'})
  bool projection_ok = false;   // pi_w = c . pi_{w'} . c^{-1} . f
  bool ok = false;
};

FiberReport fiber_bijection(const Word& w, int q);

} // namespace flagcob
