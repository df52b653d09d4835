#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zgrass/supermatrix.hpp"

namespace zgr {

std::uint64_t splitmix64(std::uint64_t x);

/// Seeded pseudo-random stream. split() derives an independent stream from
/// a key, so per-item draws do not depend on evaluation order.
class SeededStream {
 public:
  explicit SeededStream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }
  SeededStream split(std::uint64_t key) const { return SeededStream(splitmix64(seed_ ^ splitmix64(key + 1))); }
  SeededStream split(const std::vector<std::size_t>& key) const;

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n).
  std::size_t below(std::size_t n);
  bool chance(double p);
  /// Draw from a fixed pool of small nonzero integers and fractions.
  Rational coefficient();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct SeriesDraw {
  std::size_t max_terms = 3;
  /// Allow coefficients of the form (a + b t) / (1 + c t) in a central t.
  bool rational_coefficients = false;
  /// Degree-zero draws always carry a body term.
  bool with_body = true;
};

/// Every monomial of the algebra (order <= N, odd exponents <= 1) of the
/// given degree, in canonical order.
std::vector<GradedMonomial> monomials_of_degree(const Algebra& algebra, const Degree& degree);

/// Random homogeneous series of the given degree; may be zero only if the
/// degree has no monomials.
GradedSeries random_series(const Algebra& algebra, const Degree& degree, SeededStream& rng,
                           const SeriesDraw& draw = {});

/// Random matrix of weight zero.
SuperMatrix random_zero_weight(const Algebra& algebra, const BlockDims& rows, const BlockDims& cols,
                               SeededStream& rng, const SeriesDraw& draw = {});

}  // namespace zgr
