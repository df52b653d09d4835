#include "zgrass/checks.hpp"

#include <algorithm>

namespace zgr {

std::size_t CheckReport::checked() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.skipped; }));
}

std::size_t CheckReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return !e.skipped && !e.pass; }));
}

std::size_t CheckReport::skipped() const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [](const CheckEntry& e) { return e.skipped; }));
}

std::optional<GradedSeries> matrix_residual(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("residual of differently sized matrices");
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!(a(r, c) == b(r, c))) return a(r, c) - b(r, c);
    }
  }
  return std::nullopt;
}

void compare(CheckEntry& entry, const GradedSeries& lhs, const GradedSeries& rhs) {
  entry.pass = lhs == rhs;
  if (!entry.pass) {
    entry.residual = lhs - rhs;
    entry.note = "sides differ";
  }
}

void compare(CheckEntry& entry, const SuperMatrix& lhs, const SuperMatrix& rhs) {
  entry.residual = matrix_residual(lhs, rhs);
  entry.pass = !entry.residual.has_value();
  if (!entry.pass) entry.note = "sides differ";
}

void skip(CheckEntry& entry, const std::string& why) {
  entry.skipped = true;
  entry.pass = false;
  entry.note = why;
}

std::string to_string(AlgebraLaw law) {
  switch (law) {
    case AlgebraLaw::associativity: return "associativity";
    case AlgebraLaw::graded_commutativity: return "graded commutativity";
    case AlgebraLaw::body_homomorphism: return "body homomorphism";
    case AlgebraLaw::inverse: return "inverse";
  }
  return "?";
}

namespace {

const Degree& random_degree(const Algebra& algebra, SeededStream& rng) {
  const DegreeSystem& d = algebra.table()->degrees();
  return d[rng.below(d.size())];
}

/// Sum of homogeneous pieces of random degrees, so inhomogeneous elements
/// are exercised too.
GradedSeries random_element(const Algebra& algebra, SeededStream& rng, const SeriesDraw& draw) {
  GradedSeries f = random_series(algebra, random_degree(algebra, rng), rng, draw);
  if (rng.chance(0.5)) f += random_series(algebra, random_degree(algebra, rng), rng, draw);
  return f;
}

}  // namespace

CheckReport verify_algebra_laws(const Algebra& algebra, std::size_t count, const SweepOptions& options) {
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t law = 0; law < 4; ++law) {
    for (std::size_t trial = 0; trial < count; ++trial) tuples.push_back({law, trial});
  }
  const SeriesDraw draw{3, true};
  const Degree& zero = algebra.table()->degrees().zero();
  return sweep(tuples, options, [&](CheckEntry& entry, SeededStream& rng) {
    switch (static_cast<AlgebraLaw>(entry.tuple[0])) {
      case AlgebraLaw::associativity: {
        const GradedSeries f = random_element(algebra, rng, draw);
        const GradedSeries g = random_element(algebra, rng, draw);
        const GradedSeries h = random_element(algebra, rng, draw);
        compare(entry, (f * g) * h, f * (g * h));
        break;
      }
      case AlgebraLaw::graded_commutativity: {
        const Degree& a = random_degree(algebra, rng);
        const Degree& b = random_degree(algebra, rng);
        const GradedSeries f = random_series(algebra, a, rng, draw);
        const GradedSeries g = random_series(algebra, b, rng, draw);
        const GradedSeries swapped = g * f;
        compare(entry, f * g, sign(a, b) > 0 ? swapped : -swapped);
        break;
      }
      case AlgebraLaw::body_homomorphism: {
        const GradedSeries f = random_element(algebra, rng, draw);
        const GradedSeries g = random_element(algebra, rng, draw);
        const RationalFunction bf = body(f);
        const RationalFunction bg = body(g);
        entry.pass = body(f * g) == bf * bg && body(f + g) == bf + bg;
        if (!entry.pass) {
          entry.residual = algebra.constant(body(f * g) - bf * bg);
          entry.note = "body is not multiplicative or not additive";
        }
        break;
      }
      case AlgebraLaw::inverse: {
        GradedSeries f = random_series(algebra, zero, rng, draw) + random_element(algebra, rng, draw);
        if (body(f).is_zero()) f += algebra.constant(rng.coefficient());
        const GradedSeries inv = invert(f);
        compare(entry, f * inv, algebra.one());
        if (entry.pass) compare(entry, inv * f, algebra.one());
        break;
      }
    }
  });
}

}  // namespace zgr
