#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "zgrass/grading.hpp"
#include "zgrass/rational_function.hpp"

namespace zgr {

struct Generator {
  std::string name;
  Degree degree;

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Ordered generators of a function algebra. Degree-zero generators are
/// central and appear only inside rational-function coefficients; the rest
/// are graded and appear in monomials. Table order is the canonical order
/// for sign normalization.
class GeneratorTable {
 public:
  static constexpr std::size_t max_graded = 64;

  GeneratorTable(DegreeSystemPtr degrees, std::vector<Generator> generators);

  const DegreeSystem& degrees() const { return *degrees_; }
  const DegreeSystemPtr& degree_system() const { return degrees_; }

  std::size_t size() const { return generators_.size(); }
  const Generator& operator[](std::size_t i) const { return generators_[i]; }
  const std::vector<Generator>& generators() const { return generators_; }
  std::optional<std::size_t> find(const std::string& name) const;

  bool is_central(std::size_t i) const { return generators_[i].degree.is_zero(); }
  /// Position among the central (resp. graded) generators.
  std::size_t slot(std::size_t i) const { return slot_[i]; }

  std::size_t central_count() const { return central_.size(); }
  std::size_t graded_count() const { return graded_.size(); }
  std::size_t central_generator(std::size_t s) const { return central_[s]; }
  std::size_t graded_generator(std::size_t s) const { return graded_[s]; }
  const Degree& graded_degree(std::size_t s) const { return generators_[graded_[s]].degree; }
  const std::vector<std::string>& central_names() const { return central_names_; }

  /// Bit s set iff graded generator s has odd degree.
  std::uint64_t odd_mask() const { return odd_mask_; }
  /// Bit t set iff <deg s, deg t> = 1.
  std::uint64_t pairing_mask(std::size_t s) const { return pairing_mask_[s]; }

  friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) {
    return a.degrees_->n() == b.degrees_->n() && a.generators_ == b.generators_;
  }

 private:
  DegreeSystemPtr degrees_;
  std::vector<Generator> generators_;
  std::vector<std::size_t> slot_;
  std::vector<std::size_t> central_;
  std::vector<std::size_t> graded_;
  std::vector<std::string> central_names_;
  std::uint64_t odd_mask_ = 0;
  std::vector<std::uint64_t> pairing_mask_;
};

using TablePtr = std::shared_ptr<const GeneratorTable>;

/// Product of graded generators in canonical order, as exponents over the
/// graded generators of a table.
class GradedMonomial {
 public:
  GradedMonomial() = default;
  explicit GradedMonomial(std::vector<std::uint8_t> exps);

  static GradedMonomial unit(std::size_t graded_count) {
    return GradedMonomial(std::vector<std::uint8_t>(graded_count, 0));
  }

  const std::vector<std::uint8_t>& exponents() const { return exps_; }
  unsigned order() const { return order_; }
  bool is_unit() const { return order_ == 0; }
  /// Bit s set iff the exponent of graded generator s is odd.
  std::uint64_t parity_mask() const { return parity_; }

  /// Exponent-wise sum (no sign, no truncation).
  GradedMonomial operator*(const GradedMonomial& o) const;

  friend bool operator==(const GradedMonomial& a, const GradedMonomial& b) { return a.exps_ == b.exps_; }
  friend std::strong_ordering operator<=>(const GradedMonomial& a, const GradedMonomial& b) {
    if (auto c = a.order_ <=> b.order_; c != 0) return c;
    return b.exps_ <=> a.exps_;
  }

 private:
  std::vector<std::uint8_t> exps_;
  unsigned order_ = 0;
  std::uint64_t parity_ = 0;
};

Degree monomial_degree(const GeneratorTable& table, const GradedMonomial& m);

/// Koszul sign of reordering m1 * m2 into canonical order: +1 or -1.
int koszul_sign(const GeneratorTable& table, const GradedMonomial& m1, const GradedMonomial& m2);

class GradedSeries;

/// A generator table together with a truncation order N: the quotient of
/// the formal series ring by all monomials of total graded exponent > N.
class Algebra {
 public:
  Algebra(TablePtr table, unsigned truncation);

  const TablePtr& table() const { return table_; }
  unsigned truncation() const { return truncation_; }
  std::size_t central_count() const { return table_->central_count(); }
  std::size_t graded_count() const { return table_->graded_count(); }

  Algebra with_truncation(unsigned m) const { return Algebra(table_, m); }

  GradedSeries zero() const;
  GradedSeries one() const;
  GradedSeries constant(const Rational& c) const;
  GradedSeries constant(const RationalFunction& c) const;
  /// The generator at table position i as a series.
  GradedSeries generator(std::size_t i) const;
  GradedSeries generator(const std::string& name) const;

  /// Throws ConfigurationError unless both algebras share table and truncation.
  void check_compatible(const Algebra& other) const;

  friend bool operator==(const Algebra& a, const Algebra& b);

 private:
  TablePtr table_;
  unsigned truncation_;
};

/// Truncated formal series in the graded generators with rational-function
/// coefficients in the central generators. Terms are sorted by monomial
/// and never carry zero coefficients, so equality is structural.
class GradedSeries {
 public:
  using Term = std::pair<GradedMonomial, RationalFunction>;

  explicit GradedSeries(Algebra algebra) : algebra_(std::move(algebra)) {}
  /// Combines like terms, drops zero coefficients and terms above N.
  static GradedSeries from_terms(Algebra algebra, std::vector<Term> terms);

  const Algebra& algebra() const { return algebra_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  /// Lowest total graded exponent among the terms (0 for zero).
  unsigned min_order() const;

  GradedSeries operator-() const;
  GradedSeries& operator+=(const GradedSeries& o) { return *this = *this + o; }
  GradedSeries& operator-=(const GradedSeries& o) { return *this = *this - o; }
  GradedSeries& operator*=(const GradedSeries& o) { return *this = *this * o; }

  friend GradedSeries operator+(const GradedSeries& f, const GradedSeries& g);
  friend GradedSeries operator-(const GradedSeries& f, const GradedSeries& g);
  friend GradedSeries operator*(const GradedSeries& f, const GradedSeries& g);
  /// Multiplication by a central coefficient.
  friend GradedSeries operator*(const GradedSeries& f, const RationalFunction& c);
  friend GradedSeries operator*(const GradedSeries& f, const Rational& c) {
    return f * RationalFunction(f.algebra_.central_count(), c);
  }

  friend bool operator==(const GradedSeries& f, const GradedSeries& g) {
    return f.algebra_ == g.algebra_ && f.terms_ == g.terms_;
  }

  std::string to_string() const;

 private:
  Algebra algebra_;
  std::vector<Term> terms_;
};

GradedSeries add(const GradedSeries& f, const GradedSeries& g);
GradedSeries mul(const GradedSeries& f, const GradedSeries& g);

/// Coefficient of the empty monomial.
RationalFunction body(const GradedSeries& f);

/// Inverse in the truncated ring; throws ZeroBody if the body vanishes.
GradedSeries invert(const GradedSeries& f);

/// Projection onto the quotient with truncation m <= N.
GradedSeries truncate(const GradedSeries& f, unsigned m);

/// Common degree of all terms, nullopt if inhomogeneous; zero has degree 0.
std::optional<Degree> degree_of(const GradedSeries& f);

/// Ring homomorphism determined by generator images. Caches powers,
/// monomial images and coefficient images, so one instance should be reused
/// for every series pushed through the same images. Not thread-safe.
class Substitution {
 public:
  /// `images[i]` is the image of source generator i, a series over `target`.
  Substitution(Algebra source, std::vector<GradedSeries> images, Algebra target);

  const Algebra& source() const { return source_; }
  const Algebra& target() const { return target_; }
  const std::vector<GradedSeries>& images() const { return images_; }

  GradedSeries apply(const GradedSeries& f);
  GradedSeries apply(const Polynomial& p);
  GradedSeries apply(const RationalFunction& c);

 private:
  const GradedSeries& central_power(std::size_t slot, unsigned k);
  const GradedSeries& monomial_image(const GradedMonomial& m);

  Algebra source_;
  std::vector<GradedSeries> images_;
  Algebra target_;
  std::vector<std::vector<GradedSeries>> central_powers_;
  std::map<GradedMonomial, GradedSeries> monomials_;
  std::map<RationalFunction, GradedSeries> coefficients_;
};

GradedSeries substitute(const GradedSeries& f, const std::vector<GradedSeries>& images, const Algebra& target);

std::string monomial_to_string(const GeneratorTable& table, const GradedMonomial& m);

}  // namespace zgr
