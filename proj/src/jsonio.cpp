#include "flagcob/jsonio.hpp"

#include <sstream>

#include "flagcob/errors.hpp"

namespace flagcob {

namespace {

constexpr long long kJsonIntMax = 9007199254740991LL; // 2^53 - 1

Json int_to_json(const Int& v) {
  if (v <= kJsonIntMax && v >= -kJsonIntMax)
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw InvalidIndex("expected an integer or a decimal string");
}

} // namespace

Json coeff_to_json(const CoeffElem& c) {
  Json j;
  switch (c.theory.kind) {
    case TheoryKind::additive:
      j["int"] = int_to_json(c.at(0));
      break;
    case TheoryKind::multiplicative: {
      Json arr = Json::array();
      for (const Int& v : c.c) arr.push_back(int_to_json(v));
      if (arr.empty()) arr.push_back(0);
      j["beta"] = std::move(arr);
      break;
    }
    case TheoryKind::infinitesimal:
      j["const"] = int_to_json(c.at(0));
      j["gamma"] = int_to_json(c.at(1));
      break;
  }
  return j;
}

CoeffElem coeff_from_json(TheorySpec t, const Json& j) {
  CoeffElem c(t);
  switch (t.kind) {
    case TheoryKind::additive:
      c.c = {int_from_json(j.at("int"))};
      break;
    case TheoryKind::multiplicative:
      for (const Json& v : j.at("beta")) c.c.push_back(int_from_json(v));
      break;
    case TheoryKind::infinitesimal:
      c.c = {int_from_json(j.at("const")), int_from_json(j.at("gamma"))};
      break;
  }
  c.normalize();
  return c;
}

Json qpoly_to_json(const QPoly& f) {
  Json j;
  j["n"] = f.n;
  j["theory"] = f.theory.name();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms) {
    Json t;
    t["exps"] = e;
    t["coeff"] = coeff_to_json(c);
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

QPoly qpoly_from_json(const Json& j) {
  const auto t = TheorySpec::parse(j.at("theory").get<std::string>());
  if (!t) throw UnsupportedTheory("unknown theory in polynomial JSON");
  QPoly f(j.at("n").get<int>(), *t);
  if (f.n < 1) throw InvalidIndex("polynomial rank must be positive");
  for (const Json& term : j.at("terms")) {
    const Expv e = term.at("exps").get<Expv>();
    if (int(e.size()) != f.n)
      throw RankMismatch("exponent vector length differs from n");
    for (int x : e)
      if (x < 0) throw InvalidIndex("negative exponent");
    f.add_term(e, coeff_from_json(*t, term.at("coeff")));
  }
  return f;
}

namespace {

std::string gen_symbol(TheorySpec t) {
  return t.kind == TheoryKind::multiplicative ? "\\beta" : "\\gamma";
}

// one coefficient, parenthesized when it would not bind as a factor
std::string coeff_latex(const CoeffElem& c) {
  std::ostringstream os;
  int written = 0;
  for (size_t k = 0; k < c.c.size(); ++k) {
    const Int& v = c.c[k];
    if (v == 0) continue;
    if (written && v > 0) os << "+";
    if (k == 0) {
      os << v.str();
    } else {
      if (v == -1)
        os << "-";
      else if (v != 1)
        os << v.str();
      os << gen_symbol(c.theory);
      if (k > 1) os << "^{" << k << "}";
    }
    ++written;
  }
  if (written == 0) return "0";
  std::string body = os.str();
  if (written > 1) return "\\left(" + body + "\\right)";
  return body;
}

std::string monomial_latex(const Expv& e) {
  std::ostringstream os;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    os << "x_{" << i + 1 << "}";
    if (e[i] > 1) os << "^{" << e[i] << "}";
  }
  return os.str();
}

} // namespace

std::string qpoly_to_latex(const QPoly& f) {
  if (f.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    std::string cs = coeff_latex(c);
    const std::string ms = monomial_latex(e);
    if (!first && cs[0] != '-') os << "+";
    if (ms.empty()) {
      os << cs;
    } else {
      if (cs == "1")
        os << ms;
      else if (cs == "-1")
        os << "-" << ms;
      else
        os << cs << " " << ms;
    }
    first = false;
  }
  return os.str();
}

Json word_to_json(const Word& w) {
  Json j;
  j["rank"] = w.n;
  j["letters"] = w.letters;
  return j;
}

Json partition_to_json(const Partition& p) { return Json(p.parts); }

} // namespace flagcob
