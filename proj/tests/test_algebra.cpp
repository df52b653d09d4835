#include <doctest.h>

#include <functional>

#include "zgrass/algebra.hpp"
#include "zgrass/checks.hpp"
#include "zgrass/errors.hpp"
#include "zgrass/random.hpp"

using namespace zgr;

namespace {

// n = 2: central x, even e of degree (1,1), a and a2 of degree (0,1), b of
// degree (1,0).
Algebra mixed_algebra(unsigned truncation = 3) {
  auto d = make_degree_system(2);
  std::vector<Generator> g{{"x", Degree{0, 0}}, {"e", Degree{1, 1}}, {"a", Degree{0, 1}},
                           {"a2", Degree{0, 1}}, {"b", Degree{1, 0}}};
  return Algebra(std::make_shared<const GeneratorTable>(d, g), truncation);
}

RationalFunction rf(const Algebra& alg, long p, long q = 1) { return RationalFunction(alg.central_count(), Rational(p, q)); }

// Sign of sorting the word m1 m2 into canonical order by adjacent swaps,
// each swap of generators s > t contributing <deg s, deg t>.
int brute_force_sign(const GeneratorTable& table, const GradedMonomial& m1, const GradedMonomial& m2) {
  std::vector<std::size_t> word;
  for (const auto* m : {&m1, &m2}) {
    for (std::size_t s = 0; s < m->exponents().size(); ++s) {
      for (unsigned e = 0; e < m->exponents()[s]; ++e) word.push_back(s);
    }
  }
  int parity = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j + 1 < word.size() - i; ++j) {
      if (word[j] > word[j + 1]) {
        parity ^= pairing(table.graded_degree(word[j]), table.graded_degree(word[j + 1]));
        std::swap(word[j], word[j + 1]);
      }
    }
  }
  return parity ? -1 : 1;
}

}  // namespace

TEST_CASE("generators follow the sign rule") {
  const Algebra alg = mixed_algebra();
  const auto e = alg.generator("e"), a = alg.generator("a"), a2 = alg.generator("a2"), b = alg.generator("b");
  CHECK(a * a2 == -(a2 * a));
  CHECK((a * a).is_zero());
  CHECK(a * b == b * a);  // <(0,1),(1,0)> = 0
  CHECK(e * a == -(a * e));  // even degree, still anticommutes with a
  CHECK(e * b == -(b * e));
  CHECK_FALSE((e * e).is_zero());
  CHECK(e * e == e * e);
  CHECK(a.to_string() == "a");
  CHECK((a2 * a).to_string() == "(-1)*a*a2");
}

TEST_CASE("koszul_sign agrees with brute-force reordering") {
  const Algebra alg = mixed_algebra(6);
  const GeneratorTable& table = *alg.table();
  SeededStream rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<std::uint8_t> e1(table.graded_count()), e2(table.graded_count());
    for (std::size_t s = 0; s < e1.size(); ++s) {
      e1[s] = static_cast<std::uint8_t>(rng.below(3));
      e2[s] = static_cast<std::uint8_t>(rng.below(3));
    }
    const GradedMonomial m1(e1), m2(e2);
    CHECK(koszul_sign(table, m1, m2) == brute_force_sign(table, m1, m2));
  }
}

TEST_CASE("truncation drops high orders") {
  const Algebra alg = mixed_algebra(3);
  const auto e = alg.generator("e");
  CHECK_FALSE((e * e * e).is_zero());
  CHECK((e * e * e * e).is_zero());
  const auto f = alg.one() + e + e * e + e * e * e;
  CHECK(truncate(f, 1) == GradedSeries::from_terms(alg.with_truncation(1), (alg.one() + e).terms()));
  CHECK_THROWS_AS(truncate(f, 0), InvalidTruncation);
  CHECK_THROWS_AS(truncate(f, 4), InvalidTruncation);
}

TEST_CASE("geometric inverse") {
  const Algebra alg = mixed_algebra(3);
  const auto x = alg.generator("x"), e = alg.generator("e"), a = alg.generator("a"), a2 = alg.generator("a2");
  CHECK(invert(alg.one() + e) == alg.one() - e + e * e - e * e * e);
  const auto y = alg.constant(RationalFunction::variable(1, 0));
  CHECK(y == x);
  const auto inv = invert(x + a * a2);
  const RationalFunction t = RationalFunction::variable(1, 0);
  CHECK(inv == alg.constant(t.inverse()) - (a * a2) * (t * t).inverse());
  CHECK((x + a * a2) * inv == alg.one());
  CHECK_THROWS_AS(invert(a * a2), ZeroBody);
  CHECK_THROWS_AS(invert(alg.zero()), ZeroBody);
}

TEST_CASE("degrees of series") {
  const Algebra alg = mixed_algebra();
  const auto e = alg.generator("e"), a = alg.generator("a"), b = alg.generator("b");
  CHECK(degree_of(a * b) == Degree{1, 1});
  CHECK(degree_of(a * b + e) == Degree{1, 1});
  CHECK_FALSE(degree_of(a + b).has_value());
  CHECK(degree_of(alg.zero()) == Degree{0, 0});
  CHECK(body(alg.constant(Rational(3)) + e) == rf(alg, 3));
}

TEST_CASE("mixing algebras is rejected") {
  const Algebra a3 = mixed_algebra(3);
  const Algebra a4 = mixed_algebra(4);
  CHECK_THROWS_AS(a3.one() + a4.one(), ConfigurationError);
  CHECK_THROWS_AS(a3.generator("nope"), IndexOutOfRange);
}

TEST_CASE("substitution is a ring homomorphism") {
  const Algebra src = mixed_algebra(3);
  auto d = make_degree_system(2);
  const Algebra dst(std::make_shared<const GeneratorTable>(
                        d, std::vector<Generator>{{"t", Degree{0, 0}}, {"p", Degree{0, 1}}, {"q", Degree{1, 0}},
                                                  {"r", Degree{1, 1}}}),
                    3);
  SeededStream rng(17);
  int applied = 0;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<GradedSeries> images;
    for (const auto& g : src.table()->generators()) images.push_back(random_series(dst, g.degree, rng));
    Substitution subst(src, images, dst);
    const auto f = random_series(src, Degree{0, 1}, rng, {3, true}) + random_series(src, Degree{0, 0}, rng);
    const auto g = random_series(src, Degree{1, 1}, rng) + random_series(src, Degree{1, 0}, rng);
    // A constant image of x can cancel a denominator 1 + c x.
    try {
      subst.apply(f);
    } catch (const ZeroBody&) {
      continue;
    }
    ++applied;
    CHECK(subst.apply(f * g) == subst.apply(f) * subst.apply(g));
    CHECK(subst.apply(f + g) == subst.apply(f) + subst.apply(g));
    CHECK(subst.apply(f * g) == substitute(f * g, images, dst));
  }
  CHECK(applied > 40);
}

TEST_CASE("identity substitution") {
  const Algebra alg = mixed_algebra(3);
  std::vector<GradedSeries> images;
  for (std::size_t i = 0; i < alg.table()->size(); ++i) images.push_back(alg.generator(i));
  SeededStream rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = random_series(alg, Degree{1, 1}, rng, {4, true});
    CHECK(substitute(f, images, alg) == f);
  }
}

TEST_CASE("substitution checks image degrees") {
  const Algebra alg = mixed_algebra(3);
  std::vector<GradedSeries> images;
  for (std::size_t i = 0; i < alg.table()->size(); ++i) images.push_back(alg.generator(i));
  std::swap(images[2], images[4]);  // a <-> b
  CHECK_THROWS_AS(Substitution(alg, images, alg), DegreeMismatch);
  images.pop_back();
  CHECK_THROWS_AS(Substitution(alg, images, alg), ConfigurationError);
}

TEST_CASE("substituting into a denominator with zero body fails") {
  const Algebra alg = mixed_algebra(3);
  std::vector<GradedSeries> images;
  for (std::size_t i = 0; i < alg.table()->size(); ++i) images.push_back(alg.generator(i));
  images[0] = alg.generator("e");  // wrong degree is caught first
  CHECK_THROWS_AS(Substitution(alg, images, alg), DegreeMismatch);
  images[0] = alg.generator("a") * alg.generator("a2");
  Substitution subst(alg, images, alg);
  const auto one_over_x = alg.constant(RationalFunction::variable(1, 0).inverse());
  CHECK_THROWS_AS(subst.apply(one_over_x), ZeroBody);
}

TEST_CASE("randomized ring laws") {
  const Algebra alg = mixed_algebra(3);
  const CheckReport report = verify_algebra_laws(alg, 150, {8, 50, 1});
  CHECK(report.checked() == 600);
  CHECK(report.failures() == 0);
}
