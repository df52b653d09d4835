#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>

#include "zgrass/polynomial.hpp"

namespace zgr {

/// Element of Q(x_1, ..., x_k) in canonical form: numerator and denominator
/// coprime, denominator monic. Zero is 0/1.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(0, Rational(1)) {}
  explicit RationalFunction(std::size_t nvars) : num_(nvars), den_(nvars, Rational(1)) {}
  RationalFunction(std::size_t nvars, const Rational& c) : num_(nvars, c), den_(nvars, Rational(1)) {}
  explicit RationalFunction(Polynomial num);
  /// Throws ZeroBody when `den` is the zero polynomial.
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction variable(std::size_t nvars, std::size_t v) {
    return RationalFunction(Polynomial::variable(nvars, v));
  }

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  std::size_t num_vars() const { return std::max(num_.num_vars(), den_.num_vars()); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    return a * b.inverse();
  }
  friend RationalFunction operator*(const RationalFunction& a, const Rational& c);

  /// Multiplicative inverse; throws ZeroBody on zero.
  RationalFunction inverse() const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
  }

  /// Value at a rational point; nullopt where the denominator vanishes.
  std::optional<Rational> evaluate(std::span<const Rational> point) const;

  std::string to_string(std::span<const std::string> names) const;

 private:
  struct Normalized {};
  RationalFunction(Polynomial num, Polynomial den, Normalized) : num_(std::move(num)), den_(std::move(den)) {}
  static RationalFunction reduce(Polynomial num, Polynomial den);

  Polynomial num_;
  Polynomial den_;
};

}  // namespace zgr
