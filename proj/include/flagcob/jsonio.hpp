#pragma once

#include <string>

#include "json.hpp"

#include "flagcob/poly.hpp"
#include "flagcob/word.hpp"

namespace flagcob {

using Json = nlohmann::ordered_json;

// Serialization is canonical: terms in ascending lexicographic exponent
// order, coefficients as
//   additive        {"int": a}
//   multiplicative  {"beta": [a0, a1, ...]}
//   infinitesimal   {"const": a, "gamma": b}
// Integers that fit in 64 bits are JSON numbers, larger ones decimal
// strings.
Json coeff_to_json(const CoeffElem& c);
Json qpoly_to_json(const QPoly& f);

CoeffElem coeff_from_json(TheorySpec t, const Json& j);
QPoly qpoly_from_json(const Json& j);

std::string qpoly_to_latex(const QPoly& f);

Json word_to_json(const Word& w);
Json partition_to_json(const Partition& p);

} // namespace flagcob
