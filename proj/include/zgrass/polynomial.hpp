#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace zgr {

using Rational = mpq_class;

/// Exponent vector over the central variables of a table.
using Exponents = std::vector<std::uint16_t>;

struct PolyTerm {
  Exponents exps;
  Rational coeff;
};

/// Sparse multivariate polynomial over Q. Terms are kept sorted in
/// descending lexicographic order (variable 0 most significant) with no
/// zero coefficients, so structural equality is mathematical equality.
///
/// A polynomial in zero variables is a constant and silently promotes to
/// any variable count when combined with another polynomial.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c);

  static Polynomial variable(std::size_t nvars, std::size_t v, unsigned exponent = 1);
  static Polynomial monomial(Exponents exps, const Rational& c);
  /// Combines like terms and sorts.
  static Polynomial from_terms(std::size_t nvars, std::vector<PolyTerm> terms);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  /// Value of a constant polynomial (0 for zero); throws if not constant.
  Rational constant_value() const;

  const PolyTerm& leading_term() const { return terms_.front(); }
  const Rational& leading_coefficient() const { return terms_.front().coeff; }

  unsigned degree_in(std::size_t v) const;
  unsigned total_degree() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Total order used for caching; not a mathematical order.
  friend std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b);

  /// Returns a copy with `n` variables. Only constants may change count.
  Polynomial promoted(std::size_t n) const;

  Rational evaluate(std::span<const Rational> point) const;

  /// Human-readable form using the supplied variable names.
  std::string to_string(std::span<const std::string> names) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<PolyTerm> terms_;
};

/// Exact quotient a / b, or nullopt if b does not divide a.
std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b);
/// Exact quotient; throws if the division leaves a remainder.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Scales so the leading coefficient is 1 (zero stays zero).
Polynomial make_monic(const Polynomial& p);

/// Monic greatest common divisor; gcd(0, 0) = 0.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// p/q in lowest terms. mpq_class(p, q) alone does not reduce.
Rational make_rational(long p, long q);
std::string rational_to_string(const Rational& q);
/// Parses "p", "p/q" or "-p/q"; throws ParseError.
Rational parse_rational(const std::string& text);

}  // namespace zgr
