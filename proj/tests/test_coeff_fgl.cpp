#include "doctest.h"

#include "flagcob/coeff.hpp"
#include "flagcob/fgl.hpp"
#include "flagcob/poly.hpp"

using namespace flagcob;

TEST_CASE("theory parsing and naming") {
  CHECK(TheorySpec::parse("ch") == TheorySpec::additive());
  CHECK(TheorySpec::parse("k") == TheorySpec::multiplicative());
  CHECK(TheorySpec::parse("i2") == TheorySpec::infinitesimal(2));
  CHECK(TheorySpec::parse("i7") == TheorySpec::infinitesimal(7));
  CHECK(!TheorySpec::parse("i1"));
  CHECK(!TheorySpec::parse("i"));
  CHECK(!TheorySpec::parse("ch2"));
  CHECK(!TheorySpec::parse("I2"));
  CHECK(!TheorySpec::parse(""));
  CHECK(TheorySpec::additive().name() == "ch");
  CHECK(TheorySpec::multiplicative().name() == "k");
  CHECK(TheorySpec::infinitesimal(3).name() == "i3");
}

TEST_CASE("generator bookkeeping per theory") {
  CHECK(TheorySpec::additive().gen_degree() == 0);
  CHECK(TheorySpec::multiplicative().gen_degree() == -1);
  CHECK(TheorySpec::infinitesimal(2).gen_degree() == -2);
  CHECK(TheorySpec::infinitesimal(5).gen_degree() == -5);
  CHECK(!TheorySpec::additive().has_generator());
  CHECK(TheorySpec::multiplicative().has_generator());
  CHECK(TheorySpec::infinitesimal(2).has_generator());
}

TEST_CASE("denominators d_n (p when n+1 is a prime power, else 1)") {
  CHECK(dn(1) == 2);
  CHECK(dn(2) == 3);
  CHECK(dn(3) == 2);
  CHECK(dn(4) == 5);
  CHECK(dn(5) == 1);  // 6 = 2*3
  CHECK(dn(6) == 7);
  CHECK(dn(7) == 2);  // 8 = 2^3
  CHECK(dn(8) == 3);  // 9 = 3^2
  CHECK(dn(9) == 1);  // 10 = 2*5
  CHECK(dn(10) == 11);
  CHECK(dn(15) == 2); // 16 = 2^4
  CHECK_THROWS_AS(dn(0), InvalidIndex);
}

TEST_CASE("coefficient arithmetic truncates the generator correctly") {
  const auto ch = TheorySpec::additive();
  const auto k = TheorySpec::multiplicative();
  const auto i2 = TheorySpec::infinitesimal(2);

  // additive: the generator does not exist
  CHECK_THROWS_AS(CoeffElem::gen_power(ch, 1), UnsupportedTheory);
  CHECK(CoeffElem(ch, 3).at(0) == 3);

  // multiplicative: free polynomial ring in beta
  const CoeffElem a = CoeffElem(k, 2) + CoeffElem::gen_power(k, 1, 3); // 2+3b
  const CoeffElem b = CoeffElem(k, 1) - CoeffElem::gen_power(k, 1);    // 1-b
  const CoeffElem ab = a * b; // 2 + b - 3 b^2
  CHECK(ab.at(0) == 2);
  CHECK(ab.at(1) == 1);
  CHECK(ab.at(2) == -3);
  CHECK(ab.at(3) == 0);

  // square-zero: gamma^2 = 0
  const CoeffElem c = CoeffElem(i2, 2) + CoeffElem::gen_power(i2, 1, 3);
  const CoeffElem d = CoeffElem(i2, 1) + CoeffElem::gen_power(i2, 1, 1);
  const CoeffElem cd = c * d; // 2 + 5 gamma
  CHECK(cd.at(0) == 2);
  CHECK(cd.at(1) == 5);
  CHECK(CoeffElem::gen_power(i2, 2).is_zero());

  CHECK((c - c).is_zero());
  CHECK((-c + c).is_zero());
  CHECK(CoeffElem(i2, 1).is_one());
}

TEST_CASE("coefficient exact division and graded degrees") {
  const auto i2 = TheorySpec::infinitesimal(2);
  const CoeffElem e = CoeffElem(i2, 2) + CoeffElem::gen_power(i2, 1, 4);
  const CoeffElem half = e.divided_by(2);
  CHECK(half.at(0) == 1);
  CHECK(half.at(1) == 2);
  CHECK_THROWS_AS(e.divided_by(3), InternalError);

  const auto degs = e.graded_degrees();
  REQUIRE(degs.size() == 2);
  CHECK(degs[0] == -2);
  CHECK(degs[1] == 0);

  const auto k = TheorySpec::multiplicative();
  const CoeffElem f = CoeffElem(k, 1) + CoeffElem::gen_power(k, 2, 5);
  const auto degs2 = f.graded_degrees();
  REQUIRE(degs2.size() == 2);
  CHECK(degs2[0] == -2);
  CHECK(degs2[1] == 0);
}

namespace {

QPoly biv(int i, int j, TheorySpec t, Int c = 1) {
  Expv e(2, 0);
  e[0] = i;
  e[1] = j;
  return qp_monomial(2, t, e, c);
}

} // namespace

TEST_CASE("formal group law of each shipped theory") {
  SUBCASE("additive") {
    const auto g = make_fgl(TheorySpec::additive());
    CHECK(g.F == add(qp_var(2, g.theory, 1), qp_var(2, g.theory, 2)));
    REQUIRE(g.chi);
    CHECK(*g.chi == neg(qp_var(1, g.theory, 1)));
    CHECK(g.qinv == qp_const(2, g.theory, 1));
  }
  SUBCASE("multiplicative: F = u + v - b uv, qinv = 1 - b v") {
    const auto t = TheorySpec::multiplicative();
    const auto g = make_fgl(t);
    QPoly expect = add(qp_var(2, t, 1), qp_var(2, t, 2));
    expect = add(expect, scale(biv(1, 1, t), -CoeffElem::gen_power(t, 1)));
    CHECK(g.F == expect);
    CHECK(!g.chi);
    QPoly qexp = qp_const(2, t, 1);
    qexp = add(qexp, scale(qp_var(2, t, 2), -CoeffElem::gen_power(t, 1)));
    CHECK(g.qinv == qexp);
  }
  SUBCASE("i2: F = (u+v)(1 + gamma uv), chi = -u, qinv = 1 + gamma uv") {
    const auto t = TheorySpec::infinitesimal(2);
    const auto g = make_fgl(t);
    const CoeffElem gam = CoeffElem::gen_power(t, 1);
    QPoly expect = add(qp_var(2, t, 1), qp_var(2, t, 2));
    expect = add(expect, scale(add(biv(2, 1, t), biv(1, 2, t)), gam));
    CHECK(g.F == expect);
    REQUIRE(g.chi);
    CHECK(*g.chi == neg(qp_var(1, t, 1)));
    CHECK(g.qinv == add(qp_const(2, t, 1), scale(biv(1, 1, t), gam)));
  }
  SUBCASE("i3: binomial coefficients of (u+v)^4 over d_3 = 2") {
    const auto t = TheorySpec::infinitesimal(3);
    const auto g = make_fgl(t);
    const CoeffElem y = CoeffElem::gen_power(t, 1);
    QPoly corr = add(scale(biv(1, 3, t, 2), y), scale(biv(2, 2, t, 3), y));
    corr = add(corr, scale(biv(3, 1, t, 2), y));
    CHECK(g.F == add(add(qp_var(2, t, 1), qp_var(2, t, 2)), corr));
  }
  SUBCASE("i4: coefficients C(5,j)/5") {
    const auto t = TheorySpec::infinitesimal(4);
    const auto g = make_fgl(t);
    const CoeffElem y = CoeffElem::gen_power(t, 1);
    // (5,10,10,5)/5 = (1,2,2,1)
    QPoly corr = add(scale(biv(1, 4, t, 1), y), scale(biv(2, 3, t, 2), y));
    corr = add(corr, add(scale(biv(3, 2, t, 2), y), scale(biv(4, 1, t, 1), y)));
    CHECK(g.F == add(add(qp_var(2, t, 1), qp_var(2, t, 2)), corr));
  }
}

TEST_CASE("group law axioms hold exactly after truncation") {
  for (const auto& t :
       {TheorySpec::additive(), TheorySpec::multiplicative(),
        TheorySpec::infinitesimal(2), TheorySpec::infinitesimal(3)}) {
    CAPTURE(t.name());
    const auto g = make_fgl(t);
    const QPoly u = qp_var(3, t, 1), v = qp_var(3, t, 2), w = qp_var(3, t, 3);
    const QPoly zero = qp_zero(3, t);

    // unit and commutativity
    CHECK(eval_bivariate(g.F, u, zero) == u);
    CHECK(eval_bivariate(g.F, zero, v) == v);
    CHECK(eval_bivariate(g.F, u, v) == eval_bivariate(g.F, v, u));

    // associativity
    const QPoly lhs = eval_bivariate(g.F, eval_bivariate(g.F, u, v), w);
    const QPoly rhs = eval_bivariate(g.F, u, eval_bivariate(g.F, v, w));
    CHECK(lhs == rhs);

    // inverse and the exact cofactor identity F(u, chi(v)) qinv(u,v) = u - v
    if (g.chi) {
      CHECK(eval_bivariate(g.F, u, eval_univariate(*g.chi, u)) == zero);
      const QPoly diff = eval_bivariate(g.F, u, eval_univariate(*g.chi, v));
      CHECK(mul(diff, eval_bivariate(g.qinv, u, v)) == sub(u, v));
    }
  }
}
