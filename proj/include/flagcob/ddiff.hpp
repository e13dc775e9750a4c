#pragma once

#include "flagcob/fgl.hpp"
#include "flagcob/word.hpp"

namespace flagcob {

// Demazure-type operator of the theory:
//   ddiff(i, f) = normal_form( (g - s_i g) / (x_i - x_{i+1}) ),
//   g = f * qinv(x_i, x_{i+1}).
// The raw variant skips the final normalization (it is symmetric in
// x_i, x_{i+1}, which the tests exploit).
QPoly ddiff(int i, const QPoly& f);
QPoly ddiff_raw(int i, const QPoly& f);

// apply ddiff for letters i1, i2, ... in word order (composite
// d_{i_r} ... d_{i_1})
QPoly ddiff_word(const Word& v, const QPoly& f);

// class of a point in Fl_n: x1^{n-1} x2^{n-2} ... x_{n-1} for the shipped
// theories with a known top class; others must pass an override
QPoly point_class(int n, TheorySpec t,
                  const std::optional<QPoly>& override_top = std::nullopt);

// [Y_v] = ddiff_word(v, point class) for a reduced word v in W_n
QPoly bs_class(const Word& v, TheorySpec t,
               const std::optional<QPoly>& override_top = std::nullopt);

struct RestrictionReport {
  Word v;
  TheorySpec theory;
  QPoly lifted;     // class of c^(n) v at rank n+1, top variable killed
  QPoly base;       // class of v at rank n
  bool ok = false;
};
// pullback stability: i^* [Y_{c^(n) v}] = [Y_v]
RestrictionReport restriction_check(const Word& v, TheorySpec t);

struct ProductReport {
  Word w;
  TheorySpec theory;
  bool mirrored = false;
  bool above_coxeter = false;
  std::optional<UcvDecomposition> dec;
  Word rhs_word;    // c^{-1}(u) v when decomposable
  QPoly lhs;        // [Y_w] * divisor, normalized
  QPoly rhs;        // [Y_{c^{-1}(u) v}] or 0
  bool ok = false;
};
// multiply [Y_w] (w reduced in W_{n+1}) by the divisor class
// x1...xn (mirrored: x1^n) and compare against the decomposition
// prediction; rhs = 0 when w is not above the Coxeter element
ProductReport product_with_divisor(const Word& w, TheorySpec t, bool mirrored = false);

} // namespace flagcob
