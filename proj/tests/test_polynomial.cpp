#include <doctest.h>

#include <random>

#include "zgrass/errors.hpp"
#include "zgrass/rational_function.hpp"

using namespace zgr;

namespace {

const std::vector<std::string> names{"x", "y", "z"};

Polynomial var(std::size_t v) { return Polynomial::variable(3, v); }
Polynomial c(long p, long q = 1) { return Polynomial(3, make_rational(p, q)); }

Polynomial random_poly(std::mt19937_64& rng, unsigned terms, unsigned max_exp) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> exp(0, max_exp);
  std::vector<PolyTerm> out;
  for (unsigned t = 0; t < terms; ++t) {
    int a = coeff(rng);
    if (a == 0) a = 1;
    out.push_back({Exponents{static_cast<std::uint16_t>(exp(rng)), static_cast<std::uint16_t>(exp(rng)),
                             static_cast<std::uint16_t>(exp(rng))},
                   make_rational(a, 1 + static_cast<long>(rng() % 3))});
  }
  return Polynomial::from_terms(3, std::move(out));
}

std::vector<Rational> random_point(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-7, 7);
  std::uniform_int_distribution<int> den(1, 5);
  return {make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng))};
}

}  // namespace

TEST_CASE("polynomial printing and basic arithmetic") {
  const Polynomial p = var(0) * var(0) - c(1);
  CHECK(p.to_string(names) == "x^2 - 1");
  CHECK((p + c(1)).to_string(names) == "x^2");
  CHECK((p - p).is_zero());
  CHECK((var(0) * c(3, 2) + var(1)).to_string(names) == "3/2*x + y");
  CHECK(p.total_degree() == 2);
  CHECK(p.degree_in(1) == 0);
  CHECK(Polynomial(0, Rational(5)).promoted(3) == c(5));
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng, 4, 3);
    const Polynomial b = random_poly(rng, 3, 2);
    const auto pt = random_point(rng);
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a - b).evaluate(pt) == a.evaluate(pt) - b.evaluate(pt));
  }
}

TEST_CASE("exact division recovers factors") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial a = random_poly(rng, 3, 2);
    const Polynomial b = random_poly(rng, 3, 2);
    if (b.is_zero()) continue;
    const auto q = exact_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
  }
  CHECK_FALSE(exact_divide(var(0) + c(1), var(1)).has_value());
  CHECK_THROWS_AS(divide_exact(var(0) + c(1), var(1)), Error);
}

TEST_CASE("gcd of products with a planted common factor") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial f = random_poly(rng, 2, 2);
    const Polynomial g = random_poly(rng, 2, 2);
    const Polynomial h = random_poly(rng, 2, 2);
    if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
    const Polynomial d = gcd(f * g, f * h);
    // d divides both products and f divides d.
    CHECK(exact_divide(f * g, d).has_value());
    CHECK(exact_divide(f * h, d).has_value());
    CHECK(exact_divide(d, f).has_value());
    CHECK(d.leading_coefficient() == 1);
  }
}

TEST_CASE("gcd small cases") {
  const Polynomial x = var(0);
  const Polynomial y = var(1);
  CHECK(gcd(x * x - c(1), x - c(1)) == x - c(1));
  CHECK(gcd(c(6) * x * y, c(4) * x * x) == x);
  CHECK(gcd(x + y, x - y) == c(1));
  CHECK(gcd(Polynomial(3), x + c(2)) == x + c(2));
}

TEST_CASE("rational functions reduce to a canonical form") {
  const Polynomial x = var(0);
  const RationalFunction f(x * x - c(1), c(2) * x - c(2));
  CHECK(f == RationalFunction(x * c(1, 2) + c(1, 2)));
  CHECK(f.denominator() == c(1));
  const RationalFunction g(c(1), c(3) * x);
  CHECK(g.denominator() == x);
  CHECK(g.numerator() == c(1, 3));
  CHECK(g.to_string(names) == "1/3/x");
  CHECK(RationalFunction(3, Rational(0)).is_zero());
  CHECK_THROWS_AS(RationalFunction(3).inverse(), ZeroBody);
}

TEST_CASE("rational function arithmetic matches pointwise rational arithmetic") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const Polynomial p1 = random_poly(rng, 2, 2), q1 = random_poly(rng, 2, 1);
    const Polynomial p2 = random_poly(rng, 2, 2), q2 = random_poly(rng, 2, 1);
    if (q1.is_zero() || q2.is_zero()) continue;
    const RationalFunction a(p1, q1), b(p2, q2);
    const auto pt = random_point(rng);
    const Rational d1 = q1.evaluate(pt), d2 = q2.evaluate(pt);
    if (d1 == 0 || d2 == 0) continue;
    const Rational va = p1.evaluate(pt) / d1, vb = p2.evaluate(pt) / d2;
    CHECK((a + b).evaluate(pt) == va + vb);
    CHECK((a * b).evaluate(pt) == va * vb);
    CHECK((a - b).evaluate(pt) == va - vb);
    if (vb != 0 && !b.is_zero()) {
      const auto quotient = (a / b).evaluate(pt);
      if (quotient) CHECK(*quotient == va / vb);
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
  CHECK(rational_to_string(make_rational(-2, 4)) == "-1/2");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}
