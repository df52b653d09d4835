#include "zgrass/rational_function.hpp"

#include "zgrass/errors.hpp"

namespace zgr {

namespace {

std::size_t vars_of(const Polynomial& a, const Polynomial& b) { return std::max(a.num_vars(), b.num_vars()); }

}  // namespace

RationalFunction::RationalFunction(Polynomial num) : num_(std::move(num)), den_(num_.num_vars(), Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw ZeroBody("rational function with zero denominator");
  *this = reduce(std::move(num), std::move(den));
}

RationalFunction RationalFunction::reduce(Polynomial num, Polynomial den) {
  const std::size_t n = vars_of(num, den);
  num = num.promoted(n);
  den = den.promoted(n);
  if (num.is_zero()) return RationalFunction(Polynomial(n), Polynomial(n, Rational(1)), Normalized{});
  if (!den.is_constant()) {
    Polynomial g = gcd(num, den);
    if (!g.is_constant()) {
      num = divide_exact(num, g);
      den = divide_exact(den, g);
    }
  }
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    const Rational scale = 1 / lc;
    num *= scale;
    den *= scale;
  }
  return RationalFunction(std::move(num), std::move(den), Normalized{});
}

bool RationalFunction::is_one() const {
  return num_.is_constant() && den_.is_constant() && num_.constant_value() == 1;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, Normalized{}); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.is_constant()) {
      const std::size_t n = vars_of(a.num_, b.num_);
      return RationalFunction(a.num_ + b.num_, Polynomial(n, Rational(1)), RationalFunction::Normalized{});
    }
    return RationalFunction::reduce(a.num_ + b.num_, a.den_);
  }
  // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, (b/g) d) = gcd(a d/g + c b/g, g).
  const Polynomial g = gcd(a.den_, b.den_);
  const Polynomial bg = divide_exact(a.den_, g);
  const Polynomial dg = divide_exact(b.den_, g);
  Polynomial num = a.num_ * dg + b.num_ * bg;
  Polynomial den = bg * b.den_;
  if (num.is_zero()) return RationalFunction(vars_of(a.num_, b.num_));
  if (!g.is_constant()) {
    const Polynomial h = gcd(num, g);
    if (!h.is_constant()) {
      num = divide_exact(num, h);
      den = divide_exact(den, h);
    }
  }
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    num *= 1 / lc;
    den *= 1 / lc;
  }
  return RationalFunction(std::move(num), std::move(den), RationalFunction::Normalized{});
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  const std::size_t n = std::max(a.num_vars(), b.num_vars());
  if (a.is_zero() || b.is_zero()) return RationalFunction(n);
  if (a.is_constant()) return b * a.num_.constant_value();
  if (b.is_constant()) return a * b.num_.constant_value();
  // Cross-cancel: both operands are already reduced.
  Polynomial an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_constant()) {
    const Polynomial g = gcd(an, bd);
    if (!g.is_constant()) {
      an = divide_exact(an, g);
      bd = divide_exact(bd, g);
    }
  }
  if (!ad.is_constant()) {
    const Polynomial g = gcd(bn, ad);
    if (!g.is_constant()) {
      bn = divide_exact(bn, g);
      ad = divide_exact(ad, g);
    }
  }
  Polynomial num = an * bn;
  Polynomial den = ad * bd;
  const Rational lc = den.leading_coefficient();
  if (lc != 1) {
    num *= 1 / lc;
    den *= 1 / lc;
  }
  return RationalFunction(std::move(num).promoted(n), std::move(den).promoted(n), RationalFunction::Normalized{});
}

RationalFunction operator*(const RationalFunction& a, const Rational& c) {
  if (c == 0) return RationalFunction(a.num_vars());
  return RationalFunction(a.num_ * c, a.den_, RationalFunction::Normalized{});
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw ZeroBody("inverse of the zero rational function");
  return reduce(den_, num_);
}

std::optional<Rational> RationalFunction::evaluate(std::span<const Rational> point) const {
  const Rational d = den_.evaluate(point);
  if (d == 0) return std::nullopt;
  return num_.evaluate(point) / d;
}

std::string RationalFunction::to_string(std::span<const std::string> names) const {
  if (den_.is_constant()) return num_.to_string(names);
  auto wrap = [&](const Polynomial& p) {
    std::string s = p.to_string(names);
    return p.size() > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace zgr
