#include "zgrass/algebra.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "zgrass/errors.hpp"

namespace zgr {

GeneratorTable::GeneratorTable(DegreeSystemPtr degrees, std::vector<Generator> generators)
    : degrees_(std::move(degrees)), generators_(std::move(generators)), slot_(generators_.size()) {
  if (!degrees_) throw ConfigurationError("generator table needs a degree system");
  std::set<std::string> seen;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const Generator& g = generators_[i];
    degrees_->check(g.degree);
    if (g.name.empty()) throw ConfigurationError("generator names must be non-empty");
    if (!seen.insert(g.name).second) throw ConfigurationError("duplicate generator name '" + g.name + "'");
    if (g.degree.is_zero()) {
      slot_[i] = central_.size();
      central_.push_back(i);
      central_names_.push_back(g.name);
    } else {
      slot_[i] = graded_.size();
      graded_.push_back(i);
    }
  }
  if (graded_.size() > max_graded) {
    throw ConfigurationError("at most " + std::to_string(max_graded) + " graded generators are supported");
  }
  pairing_mask_.assign(graded_.size(), 0);
  for (std::size_t s = 0; s < graded_.size(); ++s) {
    const Degree& ds = generators_[graded_[s]].degree;
    if (parity(ds) == Parity::odd) odd_mask_ |= std::uint64_t{1} << s;
    for (std::size_t t = 0; t < graded_.size(); ++t) {
      if (pairing(ds, generators_[graded_[t]].degree)) pairing_mask_[s] |= std::uint64_t{1} << t;
    }
  }
}

std::optional<std::size_t> GeneratorTable::find(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].name == name) return i;
  }
  return std::nullopt;
}

GradedMonomial::GradedMonomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {
  for (std::size_t s = 0; s < exps_.size(); ++s) {
    order_ += exps_[s];
    if (exps_[s] & 1u) parity_ |= std::uint64_t{1} << s;
  }
}

GradedMonomial GradedMonomial::operator*(const GradedMonomial& o) const {
  GradedMonomial out;
  out.exps_.resize(exps_.size());
  for (std::size_t s = 0; s < exps_.size(); ++s) out.exps_[s] = static_cast<std::uint8_t>(exps_[s] + o.exps_[s]);
  out.order_ = order_ + o.order_;
  out.parity_ = parity_ ^ o.parity_;
  return out;
}

Degree monomial_degree(const GeneratorTable& table, const GradedMonomial& m) {
  std::uint32_t bits = 0;
  for (std::uint64_t mask = m.parity_mask(); mask; mask &= mask - 1) {
    bits ^= table.graded_degree(static_cast<std::size_t>(std::countr_zero(mask))).bits();
  }
  return Degree(table.degrees().n(), bits);
}

int koszul_sign(const GeneratorTable& table, const GradedMonomial& m1, const GradedMonomial& m2) {
  // Each generator s of m2 moves left past every generator t > s of m1.
  int swaps = 0;
  const std::uint64_t right = m2.parity_mask();
  for (std::uint64_t mask = m1.parity_mask(); mask; mask &= mask - 1) {
    const auto t = static_cast<std::size_t>(std::countr_zero(mask));
    const std::uint64_t below = (std::uint64_t{1} << t) - 1;
    swaps += std::popcount(right & below & table.pairing_mask(t));
  }
  return (swaps & 1) ? -1 : 1;
}

Algebra::Algebra(TablePtr table, unsigned truncation) : table_(std::move(table)), truncation_(truncation) {
  if (!table_) throw ConfigurationError("algebra needs a generator table");
  if (truncation_ == 0) throw InvalidTruncation("truncation order must be positive");
}

bool operator==(const Algebra& a, const Algebra& b) {
  if (a.truncation_ != b.truncation_) return false;
  return a.table_ == b.table_ || *a.table_ == *b.table_;
}

void Algebra::check_compatible(const Algebra& other) const {
  if (truncation_ != other.truncation_) {
    throw ConfigurationError("truncation mismatch: " + std::to_string(truncation_) + " vs " +
                             std::to_string(other.truncation_));
  }
  if (table_ != other.table_ && !(*table_ == *other.table_)) {
    throw ConfigurationError("series over different generator tables");
  }
}

GradedSeries Algebra::zero() const { return GradedSeries(*this); }

GradedSeries Algebra::one() const { return constant(Rational(1)); }

GradedSeries Algebra::constant(const Rational& c) const {
  return constant(RationalFunction(central_count(), c));
}

GradedSeries Algebra::constant(const RationalFunction& c) const {
  std::vector<GradedSeries::Term> terms;
  terms.emplace_back(GradedMonomial::unit(graded_count()), c);
  return GradedSeries::from_terms(*this, std::move(terms));
}

GradedSeries Algebra::generator(std::size_t i) const {
  if (i >= table_->size()) throw IndexOutOfRange("generator index out of range");
  const std::size_t s = table_->slot(i);
  if (table_->is_central(i)) return constant(RationalFunction::variable(central_count(), s));
  std::vector<std::uint8_t> exps(graded_count(), 0);
  exps[s] = 1;
  std::vector<GradedSeries::Term> terms;
  terms.emplace_back(GradedMonomial(std::move(exps)), RationalFunction(central_count(), Rational(1)));
  return GradedSeries::from_terms(*this, std::move(terms));
}

GradedSeries Algebra::generator(const std::string& name) const {
  auto i = table_->find(name);
  if (!i) throw IndexOutOfRange("no generator named '" + name + "'");
  return generator(*i);
}

GradedSeries GradedSeries::from_terms(Algebra algebra, std::vector<Term> terms) {
  GradedSeries out(std::move(algebra));
  const std::size_t graded = out.algebra_.graded_count();
  const std::size_t central = out.algebra_.central_count();
  const unsigned n = out.algebra_.truncation();
  const std::uint64_t odd = out.algebra_.table()->odd_mask();
  std::map<GradedMonomial, RationalFunction> acc;
  for (auto& [m, c] : terms) {
    if (m.exponents().size() != graded) throw ConfigurationError("monomial has wrong generator count");
    if (m.order() > n || c.is_zero()) continue;
    bool vanishes = false;
    for (std::size_t s = 0; s < graded; ++s) {
      if (((odd >> s) & 1u) && m.exponents()[s] > 1) vanishes = true;
    }
    if (vanishes) continue;
    if (c.num_vars() != central) {
      c = RationalFunction(c.numerator().promoted(central), c.denominator().promoted(central));
    }
    auto [it, fresh] = acc.try_emplace(m, c);
    if (!fresh) it->second += c;
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  }
  return out;
}

bool GradedSeries::is_one() const {
  return terms_.size() == 1 && terms_[0].first.is_unit() && terms_[0].second.is_one();
}

unsigned GradedSeries::min_order() const {
  return terms_.empty() ? 0 : terms_.front().first.order();
}

GradedSeries GradedSeries::operator-() const {
  GradedSeries out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

GradedSeries operator+(const GradedSeries& f, const GradedSeries& g) {
  f.algebra_.check_compatible(g.algebra_);
  if (g.is_zero()) return f;
  if (f.is_zero()) return g;
  GradedSeries out(f.algebra_);
  out.terms_.reserve(f.terms_.size() + g.terms_.size());
  auto i = f.terms_.begin();
  auto j = g.terms_.begin();
  while (i != f.terms_.end() || j != g.terms_.end()) {
    if (j == g.terms_.end() || (i != f.terms_.end() && i->first < j->first)) {
      out.terms_.push_back(*i++);
    } else if (i == f.terms_.end() || j->first < i->first) {
      out.terms_.push_back(*j++);
    } else {
      RationalFunction c = i->second + j->second;
      if (!c.is_zero()) out.terms_.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

GradedSeries operator-(const GradedSeries& f, const GradedSeries& g) { return f + (-g); }

GradedSeries operator*(const GradedSeries& f, const GradedSeries& g) {
  f.algebra_.check_compatible(g.algebra_);
  GradedSeries out(f.algebra_);
  if (f.is_zero() || g.is_zero()) return out;
  const GeneratorTable& table = *f.algebra_.table();
  const unsigned n = f.algebra_.truncation();
  const std::uint64_t odd = table.odd_mask();
  std::map<GradedMonomial, RationalFunction> acc;
  for (const auto& [ma, ca] : f.terms_) {
    for (const auto& [mb, cb] : g.terms_) {
      if (ma.order() + mb.order() > n) break;  // terms sorted by order
      if (ma.parity_mask() & mb.parity_mask() & odd) continue;
      RationalFunction c = ca * cb;
      if (koszul_sign(table, ma, mb) < 0) c = -c;
      auto [it, fresh] = acc.try_emplace(ma * mb, c);
      if (!fresh) it->second += c;
    }
  }
  out.terms_.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) out.terms_.emplace_back(m, std::move(c));
  }
  return out;
}

GradedSeries operator*(const GradedSeries& f, const RationalFunction& c) {
  if (c.is_zero()) return GradedSeries(f.algebra_);
  if (c.is_one()) return f;
  GradedSeries out = f;
  for (auto& t : out.terms_) t.second = t.second * c;
  return out;
}

GradedSeries add(const GradedSeries& f, const GradedSeries& g) { return f + g; }
GradedSeries mul(const GradedSeries& f, const GradedSeries& g) { return f * g; }

RationalFunction body(const GradedSeries& f) {
  if (!f.is_zero() && f.terms().front().first.is_unit()) return f.terms().front().second;
  return RationalFunction(f.algebra().central_count());
}

GradedSeries invert(const GradedSeries& f) {
  const RationalFunction b = body(f);
  if (b.is_zero()) throw ZeroBody("series with zero body is not invertible: " + f.to_string());
  const RationalFunction b_inv = b.inverse();
  const Algebra& alg = f.algebra();
  // f = b (1 - u) with u = -(f - b)/b nilpotent modulo truncation.
  const GradedSeries u = -((f - alg.constant(b)) * b_inv);
  GradedSeries sum = alg.one();
  GradedSeries power = alg.one();
  for (unsigned k = 1; k <= alg.truncation(); ++k) {
    power = power * u;
    if (power.is_zero()) break;
    sum += power;
  }
  return sum * b_inv;
}

GradedSeries truncate(const GradedSeries& f, unsigned m) {
  if (m == 0 || m > f.algebra().truncation()) {
    throw InvalidTruncation("truncation " + std::to_string(m) + " must be in 1.." +
                            std::to_string(f.algebra().truncation()));
  }
  return GradedSeries::from_terms(f.algebra().with_truncation(m), f.terms());
}

std::optional<Degree> degree_of(const GradedSeries& f) {
  const GeneratorTable& table = *f.algebra().table();
  if (f.is_zero()) return table.degrees().zero();
  const Degree d = monomial_degree(table, f.terms().front().first);
  for (const auto& t : f.terms()) {
    if (monomial_degree(table, t.first) != d) return std::nullopt;
  }
  return d;
}

std::string monomial_to_string(const GeneratorTable& table, const GradedMonomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t s = 0; s < m.exponents().size(); ++s) {
    const unsigned e = m.exponents()[s];
    if (e == 0) continue;
    if (!first) os << '*';
    os << table[table.graded_generator(s)].name;
    if (e > 1) os << '^' << e;
    first = false;
  }
  return first ? "1" : os.str();
}

std::string GradedSeries::to_string() const {
  if (terms_.empty()) return "0";
  const GeneratorTable& table = *algebra_.table();
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& [m, c] = terms_[i];
    if (i) os << " + ";
    std::string coeff = c.to_string(table.central_names());
    if (m.is_unit()) {
      os << coeff;
    } else {
      if (!c.is_one()) os << '(' << coeff << ")*";
      os << monomial_to_string(table, m);
    }
  }
  return os.str();
}

Substitution::Substitution(Algebra source, std::vector<GradedSeries> images, Algebra target)
    : source_(std::move(source)), images_(std::move(images)), target_(std::move(target)) {
  const GeneratorTable& table = *source_.table();
  if (images_.size() != table.size()) {
    throw ConfigurationError("substitution needs one image per generator: expected " +
                             std::to_string(table.size()) + ", got " + std::to_string(images_.size()));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    target_.check_compatible(images_[i].algebra());
    if (images_[i].is_zero()) continue;
    auto d = degree_of(images_[i]);
    if (!d || *d != table[i].degree) {
      throw DegreeMismatch("image of '" + table[i].name + "' is not homogeneous of degree " +
                           table[i].degree.to_string());
    }
  }
  central_powers_.resize(table.central_count());
  for (std::size_t s = 0; s < table.central_count(); ++s) central_powers_[s].push_back(target_.one());
}

const GradedSeries& Substitution::central_power(std::size_t slot, unsigned k) {
  auto& powers = central_powers_[slot];
  const GradedSeries& base = images_[source_.table()->central_generator(slot)];
  while (powers.size() <= k) powers.push_back(powers.back() * base);
  return powers[k];
}

const GradedSeries& Substitution::monomial_image(const GradedMonomial& m) {
  if (auto it = monomials_.find(m); it != monomials_.end()) return it->second;
  GradedSeries value = target_.one();
  if (!m.is_unit()) {
    std::vector<std::uint8_t> exps = m.exponents();
    std::size_t last = exps.size();
    while (exps[last - 1] == 0) --last;
    --last;
    --exps[last];
    const GradedSeries prefix = monomial_image(GradedMonomial(std::move(exps)));
    value = prefix * images_[source_.table()->graded_generator(last)];
  }
  return monomials_.emplace(m, std::move(value)).first->second;
}

GradedSeries Substitution::apply(const Polynomial& p) {
  std::vector<GradedSeries::Term> constant_terms;
  GradedSeries total = target_.zero();
  for (const auto& t : p.terms()) {
    GradedSeries term = target_.constant(t.coeff);
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      if (t.exps[v]) term = term * central_power(v, t.exps[v]);
    }
    total += term;
  }
  return total;
}

GradedSeries Substitution::apply(const RationalFunction& c) {
  if (auto it = coefficients_.find(c); it != coefficients_.end()) return it->second;
  GradedSeries value = apply(c.numerator());
  if (!c.denominator().is_constant()) {
    const GradedSeries den = apply(c.denominator());
    if (body(den).is_zero()) {
      throw ZeroBody("substituted denominator has zero body: " +
                     c.denominator().to_string(source_.table()->central_names()));
    }
    value = value * invert(den);
  } else {
    value = value * RationalFunction(target_.central_count(), 1 / c.denominator().constant_value());
  }
  return coefficients_.emplace(c, std::move(value)).first->second;
}

GradedSeries Substitution::apply(const GradedSeries& f) {
  source_.check_compatible(f.algebra());
  GradedSeries total = target_.zero();
  for (const auto& [m, c] : f.terms()) {
    if (m.order() > target_.truncation()) break;
    const GradedSeries& mono = monomial_image(m);
    if (mono.is_zero()) continue;
    total += apply(c) * mono;
  }
  return total;
}

GradedSeries substitute(const GradedSeries& f, const std::vector<GradedSeries>& images, const Algebra& target) {
  Substitution s(f.algebra(), images, target);
  return s.apply(f);
}

}  // namespace zgr
