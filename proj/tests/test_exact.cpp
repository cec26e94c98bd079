#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jacklr/exact.hpp"
#include "jacklr/report.hpp"

using namespace jacklr;

namespace {

MultiPoly P(const char* s) { return parse_poly(s); }

// random dense univariate polynomial in a, small integer coefficients
MultiPoly random_poly(Lcg64& g, int deg) {
  MultiPoly p;
  for (int k = 0; k <= deg; ++k) p += MultiPoly::from_int(draw(g, 11) - 5) * alpha().pow(k);
  return p;
}

}  // namespace

TEST_CASE("parse and canonical text round trip") {
  CHECK(P("0").to_string() == "0");
  CHECK(P("1").to_string() == "1");
  CHECK(P("(1+a)^2") == P("a^2+2*a+1"));
  CHECK(P("2*a^4*(1+2*a)*(-4+6*a+a^2)").to_string() == "4*a^7 + 26*a^6 - 4*a^5 - 8*a^4");
  for (const char* s : {"3/2*a^2 - a + 7", "x*y - 2*y^2 + 1/3", "-a"}) CHECK(P(P(s).to_string().c_str()) == P(s));
  CHECK(P("a/2") == P("1/2*a"));
}

TEST_CASE("parse errors carry a position") {
  try {
    P("1+*a");
    FAIL("no throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
  CHECK_THROWS(P("a/b"));
  CHECK_THROWS(P("a^-1"));
}

TEST_CASE("ring arithmetic") {
  MultiPoly a = P("1+x"), b = P("1-x");
  CHECK(a * b == P("1-x^2"));
  CHECK(a - a == MultiPoly());
  CHECK((a * b).total_degree() == 2);
  CHECK(P("x^2*y").degree_in("y") == 1);
  CHECK(P("3*x^2*y + x").coeff(std::map<std::string, int>{{"x", 2}, {"y", 1}}) == 3);
  CHECK(P("x + y").pow(3) == P("x^3 + 3*x^2*y + 3*x*y^2 + y^3"));
}

TEST_CASE("divrem on the root pivot pair") {
  MultiPoly diff = P("6*a^4*(1+2*a)*(2+a)*(2+11*a+2*a^2)") - P("4*a^4*(1+2*a)^2*(3+a)*(4+a)");
  auto [q, r] = divrem(diff, P("3+2*a"));
  CHECK(r.is_zero());
  CHECK(q == P("2*a^4*(1+2*a)*(-4+6*a+a^2)"));
  auto [q2, r2] = divrem(P("a^2+1"), P("a-1"));
  CHECK(q2 == P("a+1"));
  CHECK(r2 == P("2"));
}

TEST_CASE("divrem property: q*b + r = a, deg r < deg b") {
  Lcg64 g(7);
  for (int i = 0; i < 200; ++i) {
    MultiPoly a = random_poly(g, draw(g, 8)), b = random_poly(g, 1 + draw(g, 4));
    if (b.is_zero() || b.is_constant()) continue;
    auto [q, r] = divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.total_degree() < b.total_degree());
    auto [q3, r3] = divrem(a * b, b);
    CHECK(r3.is_zero());
    CHECK(q3 == a);
  }
}

TEST_CASE("substitute and evaluate") {
  MultiPoly p = P("x^2 + y");
  CHECK(substitute(p, {{"x", P("a+1")}, {"y", P("-2*a")}}) == P("a^2 + 1"));
  CHECK(evaluate(P("6*a*(2+11*a+2*a^2)"), {{"a", Rational(1)}}) == 90);
  CHECK(evaluate(P("a^2"), {{"a", Rational(-3, 2)}}) == Rational(9, 4));
}

TEST_CASE("rational functions compare by cross multiplication") {
  RatFunc f(P("a^2-1"), P("a-1"));
  CHECK(f == RatFunc(P("a+1")));
  CHECK(f.is_polynomial());
  RatFunc g(P("1"), P("a"));
  CHECK(g * RatFunc(P("a")) == RatFunc(P("1")));
  CHECK((g + g) == RatFunc(P("2"), P("a")));
  CHECK(RatFunc(P("6*a"), P("(1+2*a)")).evaluate({{"a", Rational(1)}}) == 2);
}

TEST_CASE("elementary expansion modulo e1") {
  std::vector<std::string> xs = {"x1", "x2", "x3", "x4", "x5", "x6"};
  // p2 = e1^2 - 2 e2 = -2 e2 on e1 = 0
  MultiPoly p2;
  for (const auto& x : xs) p2 += MultiPoly::var(x).pow(2);
  CHECK(expand_in_elementary(p2, xs) == P("-2*e2"));
  // p3 = 3 e3 on e1 = 0
  MultiPoly p3;
  for (const auto& x : xs) p3 += MultiPoly::var(x).pow(3);
  CHECK(expand_in_elementary(p3, xs) == P("3*e3"));
  CHECK_THROWS(expand_in_elementary(P("x1"), xs));
}

TEST_CASE("rational rank") {
  auto r = [](std::vector<std::vector<long>> m) {
    std::vector<std::vector<Rational>> q;
    for (auto& row : m) {
      q.emplace_back();
      for (long v : row) q.back().push_back(Rational(v));
    }
    return rational_rank(q);
  };
  CHECK(r({{1, 2}, {2, 4}}) == 1);
  CHECK(r({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
  CHECK(r({{0, 0}, {0, 0}}) == 0);
}
