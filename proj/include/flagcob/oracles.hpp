#pragma once

#include "flagcob/ffmodel.hpp"
#include "flagcob/poly.hpp"
#include "flagcob/word.hpp"

// Independent re-implementations used only by the test fixtures: each one
// computes a quantity the library also produces, but along a different
// algorithmic route, so agreement is meaningful.
namespace flagcob::oracles {

// classical Schubert polynomial of w in S_n via the compatible-sequence
// formula (sum over all reduced words of monomials x_{b_1}...x_{b_l} with
// b weakly increasing, b_j <= a_j, strictly increasing across ascents);
// plain integer polynomial at rank n, additive coefficients
QPoly schubert_polynomial(const Permutation& w);

// beta-Grothendieck polynomial of w in S_n, by the descent recursion from
// the staircase monomial of the longest element, with the isobaric
// operator evaluated monomial-by-monomial as a closed-form geometric sum;
// plain polynomial at rank n, multiplicative coefficients
QPoly grothendieck_polynomial(const Permutation& w);

// Bruhat order by the subword definition: some subsequence of one fixed
// reduced word of w is a reduced word of u
bool bruhat_leq_subword(const Permutation& u, const Permutation& w);

// membership of f in the ideal generated by e_1..e_n of all variables,
// decided by rational linear algebra, degree by degree and coefficient
// slice by coefficient slice
bool in_relation_ideal(const QPoly& f);

// configuration points by unfiltered brute force over all tuples of
// subspaces of the right dimensions (cap: <= 200000 tuples)
std::vector<ConfigPoint> enumerate_config_brute(const Word& w, int q);

// number of d-dimensional subspaces of F_q^m
long long gaussian_binomial(int q, int m, int d);

// Bruhat position of a flag relative to the standard flag, read off the
// jumps of the rank matrix dim(U_a n E_b)
Permutation flag_bruhat_position(const FlagPoint& fl);

} // namespace flagcob::oracles
