#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "flagcob/jsonio.hpp"
#include "flagcob/stable.hpp"

namespace flagcob {

// Deterministic fan-out: fn(i) for i in [0, count), spread over `jobs`
// threads by index stride.  Callers collect results into preallocated
// slots, so the aggregate never depends on scheduling.
void parallel_for(int count, int jobs, const std::function<void(int)>& fn);

// --jobs resolution: explicit flag, else FLAGCOB_JOBS, else 1
int resolve_jobs(int flag_value);

struct SuiteResult {
  std::string name;
  int total = 0;
  int failures = 0;
  Json report;
  bool pass() const { return failures == 0; }
};

// "all" -> ch, k, i2; otherwise a comma list of theory names
std::vector<TheorySpec> parse_theory_list(const std::string& names);

// pullback stability of every reduced word at ranks 2..max_n
SuiteResult check_restriction(int max_n, const std::vector<TheorySpec>& ts,
                              int jobs);

// divisor product formula for every reduced word at rank n
// (theories restricted to ch and i2, where the divisor classes are
// validated)
SuiteResult check_product(int n, const std::vector<TheorySpec>& ts,
                          bool mirrored, int jobs);

// fiber-product bijection over F_q for every reduced word of length
// <= max_len at rank n+1
SuiteResult check_fiber(int n, const std::vector<int>& qs, int max_len,
                        int jobs);

// operator identities (commutation, symmetric factor, square, pullback,
// descent recursion, the Coxeter point-class identity) on seeded inputs
SuiteResult check_operators(int max_n, const std::vector<TheorySpec>& ts,
                            unsigned seed, int jobs);

// normal-form contracts: idempotence, staircase support, difference in
// the relation ideal (rational-linear-algebra oracle), killed generators,
// and the telescoping e2/e1 congruence for n < N <= upto
SuiteResult check_normalform(int max_n, int upto, unsigned seed, int jobs);

// seeded random polynomial with exponents below bound and small mixed
// coefficients
QPoly random_qpoly(int n, TheorySpec t, std::mt19937& rng, int terms,
                   int max_exp);

} // namespace flagcob
