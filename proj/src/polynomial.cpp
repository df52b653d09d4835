#include "zgrass/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "zgrass/errors.hpp"

namespace zgr {

namespace {

// Descending lexicographic order on exponent vectors.
bool term_before(const Exponents& a, const Exponents& b) { return b < a; }

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > e[i]) return false;
  }
  return true;
}

Exponents difference(const Exponents& e, const Exponents& d) {
  Exponents out(e.size());
  for (std::size_t i = 0; i < e.size(); ++i) out[i] = static_cast<std::uint16_t>(e[i] - d[i]);
  return out;
}

Exponents sum(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return out;
}

std::size_t common_vars(const Polynomial& a, const Polynomial& b) {
  if (a.num_vars() == b.num_vars()) return a.num_vars();
  if (a.num_vars() == 0 && a.is_constant()) return b.num_vars();
  if (b.num_vars() == 0 && b.is_constant()) return a.num_vars();
  throw ConfigurationError("polynomials over different variable counts: " + std::to_string(a.num_vars()) +
                           " vs " + std::to_string(b.num_vars()));
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
  if (c != 0) terms_.push_back({Exponents(nvars, 0), c});
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t v, unsigned exponent) {
  if (v >= nvars) throw IndexOutOfRange("polynomial variable index out of range");
  Exponents e(nvars, 0);
  e[v] = static_cast<std::uint16_t>(exponent);
  return monomial(std::move(e), Rational(1));
}

Polynomial Polynomial::monomial(Exponents exps, const Rational& c) {
  Polynomial p(exps.size());
  if (c != 0) p.terms_.push_back({std::move(exps), c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<PolyTerm> terms) {
  Polynomial p(nvars);
  for (auto& t : terms) {
    if (t.exps.size() != nvars) throw ConfigurationError("term has wrong variable count");
  }
  std::sort(terms.begin(), terms.end(),
            [](const PolyTerm& a, const PolyTerm& b) { return term_before(a.exps, b.exps); });
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().exps == t.exps) {
      p.terms_.back().coeff += t.coeff;
    } else {
      p.terms_.push_back(std::move(t));
    }
  }
  std::erase_if(p.terms_, [](const PolyTerm& t) { return t.coeff == 0; });
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  return std::all_of(terms_[0].exps.begin(), terms_[0].exps.end(), [](auto e) { return e == 0; });
}

Rational Polynomial::constant_value() const {
  if (!is_constant()) throw ConfigurationError("polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

unsigned Polynomial::degree_in(std::size_t v) const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max<unsigned>(d, t.exps[v]);
  return d;
}

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) {
    unsigned s = 0;
    for (auto e : t.exps) s += e;
    d = std::max(d, s);
  }
  return d;
}

Polynomial Polynomial::promoted(std::size_t n) const {
  if (n == nvars_) return *this;
  if (nvars_ != 0) throw ConfigurationError("cannot change the variable count of a non-constant polynomial");
  return Polynomial(n, constant_value());
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  const std::size_t n = common_vars(*this, o);
  if (o.terms_.empty()) return *this = promoted(n);
  if (terms_.empty()) return *this = o.promoted(n);
  const Polynomial a = promoted(n);
  const Polynomial b = o.promoted(n);
  std::vector<PolyTerm> merged;
  merged.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && term_before(a.terms_[i].exps, b.terms_[j].exps))) {
      merged.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || term_before(b.terms_[j].exps, a.terms_[i].exps)) {
      merged.push_back(b.terms_[j++]);
    } else {
      Rational c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (c != 0) merged.push_back({a.terms_[i].exps, std::move(c)});
      ++i;
      ++j;
    }
  }
  nvars_ = n;
  terms_ = std::move(merged);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = common_vars(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(n);
  if (a.is_constant()) return b.promoted(n) * a.constant_value();
  if (b.is_constant()) return a.promoted(n) * b.constant_value();
  std::vector<PolyTerm> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({sum(s.exps, t.exps), s.coeff * t.coeff});
  }
  return Polynomial::from_terms(n, std::move(products));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.nvars_ != b.nvars_ && !(a.is_constant() && b.is_constant())) return false;
  if (a.nvars_ != b.nvars_) return a.constant_value() == b.constant_value();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exps != b.terms_[i].exps || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Polynomial& a, const Polynomial& b) {
  if (auto c = a.nvars_ <=> b.nvars_; c != 0) return c;
  if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (auto c = a.terms_[i].exps <=> b.terms_[i].exps; c != 0) return c;
    int q = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != nvars_ && !is_constant()) {
    throw ConfigurationError("evaluation point has wrong dimension");
  }
  Rational total = 0;
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      for (unsigned k = 0; k < t.exps[i]; ++k) v *= point[i];
    }
    total += v;
  }
  return total;
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

Rational make_rational(long p, long q) {
  if (q == 0) throw ConfigurationError("zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational parse_rational(const std::string& text) {
  Rational q;
  std::string s = text;
  std::erase_if(s, [](char c) { return c == ' '; });
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool has_vars = false;
    std::ostringstream vars;
    for (std::size_t i = 0; i < t.exps.size(); ++i) {
      if (t.exps[i] == 0) continue;
      if (has_vars) vars << '*';
      vars << (i < names.size() ? names[i] : "v" + std::to_string(i));
      if (t.exps[i] > 1) vars << '^' << t.exps[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << c.get_str();
    } else if (c == 1) {
      os << vars.str();
    } else {
      os << c.get_str() << '*' << vars.str();
    }
  }
  return os.str();
}

std::optional<Polynomial> exact_divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw ZeroBody("division by the zero polynomial");
  const std::size_t n = common_vars(a, b);
  if (a.is_zero()) return Polynomial(n);
  if (b.is_constant()) return a.promoted(n) * (1 / b.constant_value());
  Polynomial rem = a.promoted(n);
  const Polynomial div = b.promoted(n);
  const PolyTerm& lead = div.leading_term();
  if (div.is_monomial()) {
    std::vector<PolyTerm> out;
    out.reserve(rem.size());
    for (const auto& t : rem.terms()) {
      if (!divides(lead.exps, t.exps)) return std::nullopt;
      out.push_back({difference(t.exps, lead.exps), t.coeff / lead.coeff});
    }
    return Polynomial::from_terms(n, std::move(out));
  }
  std::vector<PolyTerm> quotient;
  while (!rem.is_zero()) {
    const PolyTerm& top = rem.leading_term();
    if (!divides(lead.exps, top.exps)) return std::nullopt;
    Polynomial step = Polynomial::monomial(difference(top.exps, lead.exps), top.coeff / lead.coeff);
    quotient.push_back(step.terms().front());
    rem -= step * div;
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  auto q = exact_divide(a, b);
  if (!q) throw Error("polynomial division is not exact");
  return *std::move(q);
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  const Rational& lc = p.leading_coefficient();
  if (lc == 1) return p;
  return p * (1 / lc);
}

namespace {

Exponents monomial_content(const Polynomial& p) {
  Exponents m = p.terms().front().exps;
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = std::min(m[i], t.exps[i]);
  }
  return m;
}

Polynomial strip_monomial(const Polynomial& p, const Exponents& m) {
  std::vector<PolyTerm> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) out.push_back({difference(t.exps, m), t.coeff});
  return Polynomial::from_terms(p.num_vars(), std::move(out));
}

// Coefficient of v^d, with the v exponent cleared.
Polynomial coefficient_in(const Polynomial& p, std::size_t v, unsigned d) {
  std::vector<PolyTerm> out;
  for (const auto& t : p.terms()) {
    if (t.exps[v] == d) {
      PolyTerm c = t;
      c.exps[v] = 0;
      out.push_back(std::move(c));
    }
  }
  return Polynomial::from_terms(p.num_vars(), std::move(out));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of p viewed as a polynomial in v.
Polynomial content_in(const Polynomial& p, std::size_t v) {
  const unsigned d = p.degree_in(v);
  Polynomial g(p.num_vars());
  for (unsigned k = 0; k <= d; ++k) {
    Polynomial c = coefficient_in(p, v, k);
    if (c.is_zero()) continue;
    g = gcd_impl(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

Polynomial primitive_part_in(const Polynomial& p, std::size_t v) {
  if (p.is_zero()) return p;
  return divide_exact(p, content_in(p, v));
}

// Pseudo-remainder up to a factor from the coefficient ring, which the
// callers discard by taking primitive parts.
Polynomial pseudo_remainder(Polynomial r, const Polynomial& b, std::size_t v) {
  const unsigned db = b.degree_in(v);
  const Polynomial lcb = coefficient_in(b, v, db);
  while (!r.is_zero()) {
    const unsigned dr = r.degree_in(v);
    if (dr < db) break;
    Polynomial shift = coefficient_in(r, v, dr) * Polynomial::variable(r.num_vars(), v, dr - db);
    r = lcb * r - shift * b;
  }
  return r;
}

// Both arguments primitive in v and of positive degree in v.
Polynomial primitive_prs_gcd(Polynomial a, Polynomial b, std::size_t v) {
  if (a.degree_in(v) < b.degree_in(v)) std::swap(a, b);
  while (true) {
    Polynomial r = pseudo_remainder(a, b, v);
    if (r.is_zero()) return b;
    if (r.degree_in(v) == 0) return Polynomial(a.num_vars(), Rational(1));
    a = std::move(b);
    b = primitive_part_in(r, v);
  }
}

// Neither argument has a monomial factor.
Polynomial gcd_no_monomial(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.num_vars();
  const Polynomial one(n, Rational(1));
  if (a.is_constant() || b.is_constant()) return one;
  if (auto q = exact_divide(a, b)) return make_monic(b);
  if (auto q = exact_divide(b, a)) return make_monic(a);
  std::size_t v = n;
  for (std::size_t i = 0; i < n && v == n; ++i) {
    if (a.degree_in(i) > 0 || b.degree_in(i) > 0) v = i;
  }
  if (a.degree_in(v) == 0) return gcd_impl(a, content_in(b, v));
  if (b.degree_in(v) == 0) return gcd_impl(content_in(a, v), b);
  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd_impl(ca, cb);
  const Polynomial h = primitive_prs_gcd(divide_exact(a, ca), divide_exact(b, cb), v);
  return make_monic(c * primitive_part_in(h, v));
}

Polynomial gcd_impl(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = common_vars(a, b);
  if (a.is_zero()) return make_monic(b.promoted(n));
  if (b.is_zero()) return make_monic(a.promoted(n));
  if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
  const Polynomial pa = a.promoted(n);
  const Polynomial pb = b.promoted(n);
  Exponents ma = monomial_content(pa);
  const Exponents mb = monomial_content(pb);
  Exponents common(n);
  for (std::size_t i = 0; i < n; ++i) common[i] = std::min(ma[i], mb[i]);
  const Polynomial g = gcd_no_monomial(strip_monomial(pa, ma), strip_monomial(pb, mb));
  return make_monic(g * Polynomial::monomial(std::move(common), Rational(1)));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) { return gcd_impl(a, b); }

}  // namespace zgr
