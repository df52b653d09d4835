#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "zgrass/errors.hpp"
#include "zgrass/random.hpp"
#include "zgrass/supermatrix.hpp"

using namespace zgr;

namespace {

// Leibniz expansion over all permutations.
Rational leibniz(const DenseMatrix<Rational>& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

DenseMatrix<Rational> random_rational_matrix(std::size_t n, SeededStream& rng, double zero_chance) {
  DenseMatrix<Rational> m(n, n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = rng.chance(zero_chance) ? Rational(0) : rng.coefficient();
  }
  return m;
}

Algebra t_algebra(unsigned n, unsigned truncation) {
  auto d = make_degree_system(n);
  std::vector<Generator> g{{"t", d->zero()}};
  for (std::size_t i = 1; i < d->size(); ++i) {
    g.push_back({"s" + std::to_string(i), (*d)[i]});
    g.push_back({"u" + std::to_string(i), (*d)[i]});
  }
  return Algebra(std::make_shared<const GeneratorTable>(d, g), truncation);
}

}  // namespace

TEST_CASE("Bareiss and Gauss-Jordan determinants match the Leibniz formula") {
  SeededStream rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(5);
    const auto m = random_rational_matrix(n, rng, 0.3);
    const Rational expected = leibniz(m);
    CHECK(fraction_free_determinant(m, Rational(0), Rational(1)) == expected);
    const auto inv = field_inverse(m, Rational(0), Rational(1));
    if (expected == 0) {
      CHECK_FALSE(inv.has_value());
    } else {
      REQUIRE(inv.has_value());
      CHECK(inv->determinant == expected);
      CHECK(multiply(m, inv->inverse, Rational(0)) == identity_matrix(n, Rational(0), Rational(1)));
    }
  }
}

TEST_CASE("determinant over rational functions") {
  const std::size_t c = 1;
  const RationalFunction t = RationalFunction::variable(c, 0);
  const RationalFunction one(c, Rational(1)), zero(c);
  DenseMatrix<RationalFunction> m(2, 2, zero);
  m(0, 0) = t;
  m(0, 1) = one;
  m(1, 0) = one;
  m(1, 1) = t;
  CHECK(fraction_free_determinant(m, zero, one) == t * t - one);
  const auto inv = field_inverse(m, zero, one);
  REQUIRE(inv.has_value());
  CHECK(inv->determinant == t * t - one);
  CHECK(inv->inverse(0, 1) == -(t * t - one).inverse());
}

TEST_CASE("Newton-Schulz round count") {
  CHECK(newton_schulz_rounds(1) == 2);
  CHECK(newton_schulz_rounds(3) == 3);
  CHECK(newton_schulz_rounds(4) == 4);
  CHECK(newton_schulz_rounds(7) == 4);
}

TEST_CASE("inverse of random zero-weight supermatrices") {
  for (unsigned n : {1u, 2u}) {
    for (unsigned trunc : {1u, 3u, 4u}) {
      const Algebra alg = t_algebra(n, trunc);
      const std::vector<int> sizes = n == 1 ? std::vector<int>{2, 1} : std::vector<int>{1, 1, 1, 1};
      const BlockDims dims(sizes);
      SeededStream rng(n * 10 + trunc);
      int inverted = 0;
      for (int trial = 0; trial < 15; ++trial) {
        const SuperMatrix a = random_zero_weight(alg, dims, dims, rng);
        CHECK(is_zero_weight(a));
        if (body_determinant(a).is_zero()) {
          CHECK_THROWS_AS(invert(a), SingularBody);
          continue;
        }
        const SuperMatrix x = invert(a);
        CHECK(is_zero_weight(x));
        CHECK(is_identity(a * x));
        CHECK(is_identity(x * a));
        ++inverted;
      }
      CHECK(inverted > 5);
    }
  }
}

TEST_CASE("Bareiss body determinant agrees with the Gauss-Jordan one") {
  const Algebra alg = t_algebra(1, 2);
  const BlockDims dims({2, 2});
  SeededStream rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    const SuperMatrix a = random_zero_weight(alg, dims, dims, rng);
    const BodyMatrix b = a.body();
    const RationalFunction zero(1), one(1, Rational(1));
    const auto gj = field_inverse(b, zero, one);
    const RationalFunction det = body_determinant(a);
    if (gj) {
      CHECK(gj->determinant == det);
    } else {
      CHECK(det.is_zero());
    }
  }
}

TEST_CASE("products add weights and check shapes") {
  const Algebra alg = t_algebra(1, 3);
  const BlockDims dims({1, 1});
  SuperMatrix a(alg, dims, dims, Degree{1});
  a.set(0, 0, alg.generator("s1"));
  a.set(1, 1, alg.generator("u1"));
  a.set(0, 1, alg.one());
  a.set(1, 0, alg.one());
  CHECK(is_homogeneous(a));
  CHECK_FALSE(is_zero_weight(a));
  const SuperMatrix sq = a * a;
  CHECK(sq.weight().is_zero());
  CHECK(is_zero_weight(sq));
  CHECK_THROWS_AS(invert(a), ConfigurationError);
  CHECK_THROWS_AS(a + sq, ShapeMismatch);
  CHECK_THROWS_AS(a * SuperMatrix(alg, BlockDims({2, 1}), dims), ShapeMismatch);
  CHECK(a.cell_degree(0, 0) == Degree{1});
  CHECK(a.cell_degree(0, 1) == Degree{0});
}

TEST_CASE("a singular body is reported") {
  const Algebra alg = t_algebra(1, 3);
  const BlockDims dims({1, 1});
  SuperMatrix a(alg, dims, dims);
  a.set(0, 0, alg.one());
  a.set(0, 1, alg.generator("s1"));
  a.set(1, 0, alg.generator("u1"));
  CHECK_THROWS_AS(invert(a), SingularBody);
}

TEST_CASE("minor extraction and deletion") {
  const Algebra alg = t_algebra(1, 3);
  const BlockDims rows({1, 1});
  const BlockDims cols({2, 2});
  SuperMatrix a(alg, rows, cols);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const Degree d = a.cell_degree(r, c);
      a.set(r, c, alg.constant(Rational(static_cast<long>(10 * r + c + 1))) * (d.is_zero() ? alg.one() : alg.generator("s1")));
    }
  }
  const KIndex index({{2}, {1}});
  const SuperMatrix m = extract_minor(a, index);
  CHECK(m.col_dims() == BlockDims({1, 1}));
  CHECK(m(0, 0) == a(0, 1));
  CHECK(m(1, 1) == a(1, 2));
  const SuperMatrix d = delete_minor(a, index);
  CHECK(d.col_dims() == BlockDims({1, 1}));
  CHECK(d(0, 0) == a(0, 0));
  CHECK(d(1, 1) == a(1, 3));
}
