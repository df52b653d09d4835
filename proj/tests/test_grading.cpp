#include <doctest.h>

#include <algorithm>
#include <set>

#include "zgrass/errors.hpp"
#include "zgrass/grading.hpp"

using namespace zgr;

namespace {

// Brute-force order: all 0/1 vectors, even (sum of squares = sum of bits
// mod 2) first, then lexicographic.
std::vector<std::vector<int>> reference_order(unsigned n) {
  std::vector<std::vector<int>> all;
  for (unsigned code = 0; code < (1u << n); ++code) {
    std::vector<int> v(n);
    for (unsigned i = 0; i < n; ++i) v[i] = (code >> (n - 1 - i)) & 1u;
    all.push_back(v);
  }
  std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
    int pa = 0, pb = 0;
    for (int x : a) pa += x * x;
    for (int x : b) pb += x * x;
    if (pa % 2 != pb % 2) return pa % 2 < pb % 2;
    return a < b;
  });
  return all;
}

}  // namespace

TEST_CASE("degree chain for n = 3") {
  std::string chain;
  for (const Degree& d : enumerate_degrees(3)) chain += (chain.empty() ? "" : " < ") + d.to_string();
  CHECK(chain ==
        "(0,0,0) < (0,1,1) < (1,0,1) < (1,1,0) < (0,0,1) < (0,1,0) < (1,0,0) < (1,1,1)");
}

TEST_CASE("enumerate_degrees agrees with a brute-force sort") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto expected = reference_order(n);
    const auto actual = enumerate_degrees(n);
    REQUIRE(actual.size() == expected.size());
    for (std::size_t i = 0; i < actual.size(); ++i) CHECK(actual[i].components() == expected[i]);
  }
}

TEST_CASE("small chains") {
  auto one = enumerate_degrees(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == Degree{0});
  CHECK(one[1] == Degree{1});
  auto two = enumerate_degrees(2);
  CHECK(two == std::vector<Degree>{Degree{0, 0}, Degree{1, 1}, Degree{0, 1}, Degree{1, 0}});
}

TEST_CASE("pairing, parity and sign") {
  const Degree a{0, 1, 1};
  const Degree b{1, 0, 1};
  CHECK(pairing(a, b) == 1);
  CHECK(sign(a, b) == -1);
  CHECK(parity(a) == Parity::even);
  CHECK(parity(Degree{1, 1, 1}) == Parity::odd);
  CHECK(parity(Degree{0, 0, 0}) == Parity::even);
  // Two even degrees may still anticommute.
  CHECK(sign(Degree{1, 1}, Degree{0, 1}) == -1);
  CHECK(sign(Degree{1, 1}, Degree{1, 1}) == 1);
}

TEST_CASE("pairing is bilinear and symmetric") {
  const auto all = enumerate_degrees(4);
  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(pairing(a, b) == pairing(b, a));
      for (const auto& c : all) CHECK(pairing(a + b, c) == (pairing(a, c) + pairing(b, c)) % 2);
    }
  }
}

TEST_CASE("degree addition is componentwise mod 2") {
  const Degree a{1, 0, 1};
  const Degree b{1, 1, 0};
  CHECK((a + b).components() == std::vector<int>{0, 1, 1});
  CHECK((a + a).is_zero());
  CHECK(Degree{0, 1, 1}.component(0) == 0);
  CHECK(Degree{0, 1, 1}.component(2) == 1);
}

TEST_CASE("degree errors") {
  CHECK_THROWS_AS(Degree({0, 2}), ConfigurationError);
  CHECK_THROWS_AS((void)pairing(Degree{0, 1}, Degree{0, 1, 1}), ConfigurationError);
  CHECK_THROWS_AS((void)(Degree{1} + Degree{1, 0}), ConfigurationError);
}

TEST_CASE("degree system lookups") {
  const DegreeSystem d(3);
  CHECK(d.size() == 8);
  CHECK(d.q() == 7);
  CHECK(d.zero().is_zero());
  std::set<std::size_t> seen;
  for (std::size_t i = 0; i < d.size(); ++i) {
    CHECK(d.index_of(d[i]) == i);
    for (std::size_t j = 0; j < d.size(); ++j) {
      CHECK(d[d.sum_index(i, j)] == d[i] + d[j]);
    }
  }
  CHECK_THROWS_AS(d.check(Degree{0, 1}), ConfigurationError);
}
