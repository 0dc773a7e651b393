#include <random>

#include "doctest.h"
#include "qts/gcd.hpp"
#include "qts/rational_function.hpp"

using namespace qts;

namespace {

RationalFn P(const char* s) { return RationalFn::parse(s); }
const RationalFn q = RationalFn::q();
const RationalFn t = RationalFn::t();
const RationalFn X = RationalFn::X();

IntPolynomial random_poly(std::mt19937& rng, int max_deg, int max_terms) {
  std::uniform_int_distribution<int> deg(0, max_deg), coeff(-4, 4), count(1, max_terms);
  std::vector<IntPolynomial::Term> terms;
  const int n = count(rng);
  for (int i = 0; i < n; ++i) {
    terms.emplace_back(Monomial(deg(rng), deg(rng), deg(rng)), BigInt(coeff(rng)));
  }
  return IntPolynomial::from_terms(std::move(terms));
}

RationalFn random_fn(std::mt19937& rng) {
  IntPolynomial den;
  while (den.is_zero()) den = random_poly(rng, 2, 3);
  return RationalFn(random_poly(rng, 2, 4), den);
}

}  // namespace

TEST_CASE("field operations reduce to canonical form") {
  CHECK(P("(1-q^2)/(1-q)") == P("1+q"));
  CHECK(P("(1-q^2)/(1-q)").str() == "q + 1");
  RationalFn f = P("(1-q*t)/(1-t)");
  CHECK((f * f.inverse()).is_one());
  CHECK((P("1-q") + P("q-1")).is_zero());
  CHECK(f.pow(-2) == (f * f).inverse());
  CHECK(f.pow(0).is_one());
  CHECK_THROWS_AS(f / RationalFn(0), std::domain_error);
}

TEST_CASE("denominator sign and content are normalized") {
  RationalFn f = P("(2*q - 2)/(4 - 4*t)");
  CHECK(f.den().leading_coeff() > 0);
  CHECK(f == P("(1-q)/(2*t-2)"));
  CHECK(f.str() == "(-q + 1)/(2*t - 2)");
  CHECK(P("6/4").str() == "3/2");
  CHECK(P("q^-2*t").str() == "t/q^2");
}

TEST_CASE("flip_qt") {
  CHECK(q.flip_qt() == P("1/q"));
  CHECK(P("1-q*t").flip_qt() == P("(q*t-1)/(q*t)"));
  RationalFn f = P("(1+q)/(1-t)");
  CHECK(f.flip_qt().flip_qt() == f);
  CHECK((X * q).flip_qt() == X / q);
}

TEST_CASE("evaluate") {
  CHECK(P("1+q").evaluate(BigRational(1, 2), 0) == BigRational(3, 2));
  CHECK_THROWS_AS(P("1/(1-q)").evaluate(1, 0), PoleError);
  CHECK(P("(1-q^2)/(1-q)").evaluate(1, 0) == 2);
  CHECK(P("X*t + q").evaluate(2, 3, 5) == 17);
}

TEST_CASE("limit_q_to_1") {
  CHECK(P("(1-q)*(1-t)").limit_q_to_1(1) == P("1-t"));
  CHECK(P("1-q^2").limit_q_to_1(1) == 2);
  CHECK_THROWS_AS(P("(1-t*q)/(1-q)").limit_q_to_1(0), PoleError);
  CHECK_THROWS_AS(P("1-q").limit_q_to_1(-1), std::invalid_argument);
  CHECK(!P("(1-q^3)*X/(1-q*t)").limit_q_to_1(1).involves(Var::q));
}

TEST_CASE("substitute_t_eq_q_pow") {
  CHECK(P("1-q*t").substitute_t_eq_q_pow(1) == P("1-q^2"));
  CHECK(P("1-t").substitute_t_eq_q_pow(2) == P("1-q^2"));
  CHECK(P("t/(1-q*t)").substitute_t_eq_q_pow(1) == P("q/(1-q^2)"));
  CHECK_THROWS_AS(P("t").substitute_t_eq_q_pow(0), std::invalid_argument);
  CHECK_THROWS_AS(P("1/(1-t)").substitute(Var::t, RationalFn(1)), PoleError);
}

TEST_CASE("string round trip and parse errors") {
  for (const char* s : {"(q^2*t - 1)/(q - 1)", "0", "-3/7", "t/q^2", "(X + 1)/(q*t)"}) {
    RationalFn f = P(s);
    CHECK(P(f.str().c_str()) == f);
  }
  CHECK(P("(q^2*t - 1)/(q - 1)").str() == "(q^2*t - 1)/(q - 1)");
  CHECK_THROWS_AS(P("q +"), ParseError);
  CHECK_THROWS_AS(P("q)"), ParseError);
  CHECK_THROWS_AS(P("y"), ParseError);
  CHECK_THROWS_AS(P("1/0"), ParseError);
  CHECK(P("x") == X);
  CHECK(P("q^(-1)") == P("1/q"));
}

TEST_CASE("property: canonical form is unique") {
  std::mt19937 rng(1234);
  for (int i = 0; i < 60; ++i) {
    RationalFn f = random_fn(rng), g = random_fn(rng), h = random_fn(rng);
    CHECK((f + g) - g == f);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    if (!g.is_zero()) CHECK((f / g) * g == f);
    CHECK(f.flip_qt().flip_qt() == f);
  }
}

TEST_CASE("property: limit is insensitive to extra (1-q) factors") {
  std::mt19937 rng(99);
  const RationalFn one_minus_q = RationalFn(1) - q;
  int checked = 0;
  for (int i = 0; i < 60; ++i) {
    RationalFn f = random_fn(rng);
    RationalFn base;
    try {
      base = f.limit_q_to_1(0);
    } catch (const PoleError&) {
      continue;
    }
    ++checked;
    for (int k = 1; k <= 3; ++k) CHECK((f * one_minus_q.pow(k)).limit_q_to_1(k) == base);
  }
  CHECK(checked > 20);
}

TEST_CASE("property: evaluation commutes with field operations") {
  std::mt19937 rng(7);
  const BigRational q0(2, 3), t0(-5, 7), x0(3, 11);
  for (int i = 0; i < 60; ++i) {
    RationalFn f = random_fn(rng), g = random_fn(rng);
    try {
      const BigRational fv = f.evaluate(q0, t0, x0), gv = g.evaluate(q0, t0, x0);
      CHECK((f + g).evaluate(q0, t0, x0) == fv + gv);
      CHECK((f - g).evaluate(q0, t0, x0) == fv - gv);
      CHECK((f * g).evaluate(q0, t0, x0) == fv * gv);
      if (gv != 0) CHECK((f / g).evaluate(q0, t0, x0) == fv / gv);
    } catch (const PoleError&) {
    }
  }
}

TEST_CASE("property: heuristic and PRS gcd agree") {
  std::mt19937 rng(4321);
  for (int i = 0; i < 400; ++i) {
    const int deg = 1 + i % 3;
    IntPolynomial g = random_poly(rng, deg, 4);
    IntPolynomial a = random_poly(rng, deg, 4) * g, b = random_poly(rng, deg, 4) * g;
    if (a.is_zero() || b.is_zero()) continue;
    IntPolynomial prs = gcd_prs(a, b);
    CHECK(exact_quotient(a, prs).has_value());
    CHECK(exact_quotient(b, prs).has_value());
    CHECK(exact_quotient(prs, primitive_part(g)).has_value());
    auto heu = gcd_heuristic(a, b);
    if (heu) CHECK(*heu == prs);
    CHECK(gcd(a, b) == prs);
  }
}
