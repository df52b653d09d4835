#include "zgrass/random.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace zgr {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SeededStream SeededStream::split(const std::vector<std::size_t>& key) const {
  std::uint64_t h = 0x51ed270b27aa3f1dULL;
  for (std::size_t k : key) h = splitmix64(h ^ k);
  return split(h);
}

std::size_t SeededStream::below(std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_);
}

bool SeededStream::chance(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational SeededStream::coefficient() {
  static const std::array<std::pair<int, int>, 14> pool{{{1, 1},  {-1, 1}, {2, 1},  {-2, 1}, {3, 1},
                                                         {-3, 1}, {5, 1},  {1, 2},  {-1, 2}, {1, 3},
                                                         {-2, 3}, {3, 2},  {-5, 4}, {7, 3}}};
  const auto [p, q] = pool[below(pool.size())];
  return Rational(p, q);
}

std::vector<GradedMonomial> monomials_of_degree(const Algebra& algebra, const Degree& degree) {
  const GeneratorTable& table = *algebra.table();
  const std::size_t g = table.graded_count();
  const unsigned n = algebra.truncation();
  std::vector<GradedMonomial> out;
  std::vector<std::uint8_t> exps(g, 0);
  std::function<void(std::size_t, unsigned, Degree)> rec = [&](std::size_t s, unsigned order, Degree d) {
    if (s == g) {
      if (d == degree) out.emplace_back(exps);
      return;
    }
    const bool odd = (table.odd_mask() >> s) & 1U;
    const unsigned limit = odd ? std::min(1U, n - order) : n - order;
    Degree current = d;
    for (unsigned e = 0; e <= limit; ++e) {
      exps[s] = static_cast<std::uint8_t>(e);
      rec(s + 1, order + e, current);
      current += table.graded_degree(s);
    }
    exps[s] = 0;
  };
  rec(0, 0, table.degrees().zero());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

RationalFunction random_coefficient(const Algebra& algebra, SeededStream& rng, const SeriesDraw& draw) {
  const std::size_t c = algebra.central_count();
  RationalFunction value(c, rng.coefficient());
  if (c == 0 || rng.chance(0.4)) return value;
  const std::size_t v = rng.below(c);
  const RationalFunction t = RationalFunction::variable(c, v);
  value += t * rng.coefficient();
  if (draw.rational_coefficients && rng.chance(0.5)) {
    value *= (RationalFunction(c, Rational(1)) + t * rng.coefficient()).inverse();
  }
  return value;
}

}  // namespace

GradedSeries random_series(const Algebra& algebra, const Degree& degree, SeededStream& rng, const SeriesDraw& draw) {
  std::vector<GradedMonomial> pool = monomials_of_degree(algebra, degree);
  std::vector<GradedSeries::Term> terms;
  if (draw.with_body && degree.is_zero()) {
    // The unit monomial sorts first.
    terms.emplace_back(pool.front(), random_coefficient(algebra, rng, draw));
    pool.erase(pool.begin());
  }
  const std::size_t count = std::min(pool.size(), 1 + rng.below(std::max<std::size_t>(draw.max_terms, 1)));
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t pick = i + rng.below(pool.size() - i);
    std::swap(pool[i], pool[pick]);
    terms.emplace_back(pool[i], random_coefficient(algebra, rng, draw));
  }
  return GradedSeries::from_terms(algebra, std::move(terms));
}

SuperMatrix random_zero_weight(const Algebra& algebra, const BlockDims& rows, const BlockDims& cols,
                               SeededStream& rng, const SeriesDraw& draw) {
  SuperMatrix out(algebra, rows, cols);
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) out.set(r, c, random_series(algebra, out.cell_degree(r, c), rng, draw));
  }
  return out;
}

}  // namespace zgr
