#include "zgrass/grassmannian.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <set>
#include <thread>

#include "zgrass/errors.hpp"

namespace zgr {

GrassmannShape GrassmannShape::make(DegreeSystemPtr degrees, BlockDims k, BlockDims m) {
  if (!degrees) throw ConfigurationError("shape needs a degree system");
  check_dims(*degrees, m);
  if (k.blocks() != m.blocks()) throw InvalidShape("k and m must have the same number of blocks");
  for (std::size_t i = 0; i < k.blocks(); ++i) {
    if (k[i] > m[i]) {
      throw InvalidShape("k_" + std::to_string(i) + " = " + std::to_string(k[i]) + " exceeds m_" +
                         std::to_string(i) + " = " + std::to_string(m[i]));
    }
  }
  if (k.total() == 0) throw InvalidShape("at least one k_i must be positive");
  return GrassmannShape{std::move(degrees), std::move(k), std::move(m)};
}

BlockDims beta_dims(const DegreeSystem& degrees, const BlockDims& k, const BlockDims& m) {
  if (k.blocks() != degrees.size() || m.blocks() != degrees.size()) {
    throw InvalidShape("k and m need " + std::to_string(degrees.size()) + " block sizes");
  }
  std::vector<int> beta(degrees.size(), 0);
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    for (std::size_t j = 0; j < degrees.size(); ++j) {
      if (k[j] > m[j]) throw InvalidShape("k_j exceeds m_j");
      beta[degrees.sum_index(i, j)] += k[i] * (m[j] - k[j]);
    }
  }
  return BlockDims(std::move(beta));
}

namespace {

std::vector<std::vector<int>> combinations(int m, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(current.size()) == k) {
      out.push_back(current);
      return;
    }
    for (int v = start; v <= m - (k - static_cast<int>(current.size())) + 1; ++v) {
      current.push_back(v);
      rec(v + 1);
      current.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

std::vector<KIndex> enumerate_charts(const BlockDims& k, const BlockDims& m) {
  if (k.blocks() != m.blocks()) throw InvalidShape("k and m must have the same number of blocks");
  std::vector<std::vector<std::vector<int>>> choices;
  for (std::size_t u = 0; u < k.blocks(); ++u) {
    if (k[u] > m[u]) throw InvalidShape("k_u exceeds m_u");
    choices.push_back(combinations(m[u], k[u]));
  }
  std::vector<KIndex> out;
  std::vector<std::vector<int>> current(k.blocks());
  std::function<void(std::size_t)> rec = [&](std::size_t u) {
    if (u == k.blocks()) {
      out.emplace_back(current);
      return;
    }
    for (const auto& c : choices[u]) {
      current[u] = c;
      rec(u + 1);
    }
  };
  rec(0);
  return out;
}

namespace {

std::string generator_name(std::size_t degree_index, int counter) {
  if (degree_index == 0) return "x" + std::to_string(counter);
  return "xi" + std::to_string(degree_index) + "_" + std::to_string(counter);
}

}  // namespace

struct Chart::Layout {
  TablePtr table;
  std::vector<FillCell> fill;
};

Chart::Layout Chart::layout(const GrassmannShape& shape, const KIndex& index) {
  const DegreeSystem& degrees = *shape.degrees;
  index.validate(shape.k, shape.m);
  const std::vector<int> free_columns = index.complement(shape.m);
  std::vector<int> counters(degrees.size(), 0);
  std::vector<Generator> generators;
  std::vector<FillCell> fill;
  // Top to bottom within a column, columns left to right.
  for (std::size_t j = 0; j < free_columns.size(); ++j) {
    const int column = free_columns[j];
    const std::size_t col_block = shape.m.block_of(column);
    for (int row = 0; row < shape.k.total(); ++row) {
      const std::size_t t = degrees.sum_index(shape.k.block_of(row), col_block);
      generators.push_back({generator_name(t, ++counters[t]), degrees[t]});
      fill.push_back({static_cast<std::size_t>(row), static_cast<std::size_t>(column), j});
    }
  }
  return {std::make_shared<const GeneratorTable>(shape.degrees, std::move(generators)), std::move(fill)};
}

Chart::Chart(GrassmannShape shape, KIndex index, unsigned truncation)
    : Chart(shape, index, truncation, layout(shape, index)) {}

Chart::Chart(GrassmannShape shape, KIndex index, unsigned truncation, Layout layout)
    : shape_(std::move(shape)),
      index_(std::move(index)),
      algebra_(std::move(layout.table), truncation),
      fill_(std::move(layout.fill)),
      label_(algebra_, shape_.k, shape_.m) {
  const std::vector<int> minor = index_.columns(shape_.m);
  for (std::size_t r = 0; r < minor.size(); ++r) label_.set(r, static_cast<std::size_t>(minor[r]), algebra_.one());
  for (std::size_t g = 0; g < fill_.size(); ++g) label_.set(fill_[g].row, fill_[g].column, algebra_.generator(g));
}

Chart build_chart(const GrassmannShape& shape, const KIndex& index, unsigned truncation) {
  return Chart(shape, index, truncation);
}

TransitionMap identity_map(const Chart& chart) {
  TransitionMap out{chart.index(), chart.index(), chart.algebra(), chart.table(), {},
                    Polynomial(chart.algebra().central_count(), Rational(1))};
  for (std::size_t g = 0; g < chart.table()->size(); ++g) out.images.push_back(chart.algebra().generator(g));
  return out;
}

TransitionMap transition(const Chart& target, const Chart& source) {
  if (!(target.shape().k == source.shape().k) || !(target.shape().m == source.shape().m)) {
    throw ShapeMismatch("charts of different grassmannians");
  }
  if (target.algebra().truncation() != source.algebra().truncation()) {
    throw ConfigurationError("charts with different truncation orders");
  }
  const SuperMatrix minor = extract_minor(source.label(), target.index());
  const RationalFunction det = body_determinant(minor);
  if (det.is_zero()) {
    throw SingularBody("M_" + target.index().to_string() + " A_" + source.index().to_string() +
                       " has identically singular body");
  }
  const SuperMatrix moved = delete_minor(invert(minor) * source.label(), target.index());
  TransitionMap out{source.index(), target.index(), source.algebra(), target.table(), {}, {}};
  out.images.reserve(target.fill().size());
  for (const FillCell& cell : target.fill()) out.images.push_back(moved(cell.row, cell.minor_column));
  // The label body entries are polynomials, so the determinant is too.
  out.certificate = make_monic(det.numerator());
  return out;
}

namespace {

RationalFunction evaluate_polynomial(const Polynomial& p, const std::vector<RationalFunction>& point,
                                     std::size_t nvars) {
  RationalFunction total(nvars);
  for (const auto& t : p.terms()) {
    RationalFunction term(nvars, t.coeff);
    for (std::size_t v = 0; v < t.exps.size(); ++v) {
      for (unsigned e = 0; e < t.exps[v]; ++e) term = term * point[v];
    }
    total += term;
  }
  return total;
}

}  // namespace

TransitionMap compose(const TransitionMap& outer, const TransitionMap& inner) {
  if (!(outer.source == inner.target)) {
    throw ShapeMismatch("compose: outer source " + outer.source.to_string() + " differs from inner target " +
                        inner.target.to_string());
  }
  const Algebra middle(inner.target_table, inner.source_algebra.truncation());
  middle.check_compatible(outer.source_algebra);
  Substitution subst(outer.source_algebra, inner.images, inner.source_algebra);
  TransitionMap out{inner.source, outer.target, inner.source_algebra, outer.target_table, {}, {}};
  out.images.reserve(outer.images.size());
  for (const auto& image : outer.images) out.images.push_back(subst.apply(image));

  const GeneratorTable& mid = *inner.target_table;
  std::vector<RationalFunction> central_bodies;
  for (std::size_t s = 0; s < mid.central_count(); ++s) {
    central_bodies.push_back(body(inner.images[mid.central_generator(s)]));
  }
  const std::size_t nvars = inner.source_algebra.central_count();
  const RationalFunction pulled = evaluate_polynomial(outer.certificate, central_bodies, nvars);
  out.certificate =
      make_monic(inner.certificate.promoted(nvars) * pulled.numerator() * pulled.denominator());
  if (out.certificate.is_zero()) throw ZeroBody("composite transition is defined nowhere");
  return out;
}

std::optional<std::size_t> first_non_identity(const TransitionMap& map) {
  const Algebra& alg = map.source_algebra;
  if (!(map.source == map.target) || !(*map.target_table == *alg.table())) return 0;
  for (std::size_t g = 0; g < map.images.size(); ++g) {
    if (!(map.images[g] == alg.generator(g))) return g;
  }
  return std::nullopt;
}

Atlas::Atlas(GrassmannShape shape, unsigned truncation) : shape_(std::move(shape)), truncation_(truncation) {
  for (const KIndex& index : enumerate_charts(shape_.k, shape_.m)) charts_.emplace_back(shape_, index, truncation_);
}

std::size_t Atlas::position(const KIndex& index) const {
  for (std::size_t i = 0; i < charts_.size(); ++i) {
    if (charts_[i].index() == index) return i;
  }
  throw IndexOutOfRange("k-index " + index.to_string() + " is not a chart of this atlas");
}

std::shared_ptr<const TransitionMap> Atlas::transition(std::size_t target, std::size_t source) const {
  const auto key = std::make_pair(target, source);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  }
  auto computed = std::make_shared<const TransitionMap>(
      target == source ? identity_map(chart(target)) : zgr::transition(chart(target), chart(source)));
  std::lock_guard lock(mutex_);
  return cache_.try_emplace(key, std::move(computed)).first->second;
}

void Atlas::corrupt(std::size_t target, std::size_t source) {
  TransitionMap bad = *transition(target, source);
  if (bad.images.empty()) throw ConfigurationError("chart has no generators to corrupt");
  const Algebra& alg = bad.source_algebra;
  if (bad.target_table->is_central(0)) {
    bad.images[0] += alg.one();
  } else {
    bad.images[0] += bad.images[0];
  }
  std::lock_guard lock(mutex_);
  cache_[{target, source}] = std::make_shared<const TransitionMap>(std::move(bad));
}

bool CocycleReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const CocycleEntry& e) { return e.pass; });
}

std::size_t CocycleReport::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return !e.pass; }));
}

CocycleEntry check_cocycle_tuple(const Atlas& atlas, const std::vector<std::size_t>& tuple) {
  CocycleEntry entry;
  entry.tuple = tuple;
  if (tuple.empty() || tuple.size() > 3) throw ConfigurationError("cocycle tuples have 1 to 3 charts");
  try {
    const std::size_t first = tuple.front();
    // Walk I -> tuple[1] -> ... -> I.
    TransitionMap composite = *atlas.transition(tuple.size() > 1 ? tuple[1] : first, first);
    for (std::size_t s = 1; s < tuple.size(); ++s) {
      const std::size_t from = tuple[s];
      const std::size_t to = s + 1 < tuple.size() ? tuple[s + 1] : first;
      composite = compose(*atlas.transition(to, from), composite);
    }
    const auto bad = first_non_identity(composite);
    entry.pass = !bad.has_value();
    if (bad) {
      const Algebra& alg = composite.source_algebra;
      entry.generator = (*alg.table())[*bad].name;
      entry.residual = composite.images[*bad] - alg.generator(*bad);
    }
  } catch (const Error& e) {
    entry.pass = false;
    entry.error = e.what();
  }
  return entry;
}

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  for (unsigned t = 0; t < threads; ++t) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) fn(i);
    });
  }
}

namespace {

std::vector<std::vector<std::size_t>> all_tuples(std::size_t charts, std::size_t length) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current(length, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == length) {
      out.push_back(current);
      return;
    }
    for (std::size_t c = 0; c < charts; ++c) {
      current[pos] = c;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<std::size_t>> sample_tuples(std::size_t charts, std::size_t length, std::size_t samples,
                                                    std::mt19937_64& rng) {
  std::vector<std::vector<std::size_t>> out;
  std::uniform_int_distribution<std::size_t> pick(0, charts - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> t(length);
    for (auto& c : t) c = pick(rng);
    out.push_back(std::move(t));
  }
  return out;
}

}  // namespace

CocycleReport verify_cocycle(const Atlas& atlas, const CocycleOptions& options) {
  std::set<std::vector<std::size_t>> tuples;
  const std::size_t n = atlas.size();
  std::mt19937_64 rng(options.seed);
  std::vector<std::size_t> lengths;
  if (options.mode != CocycleMode::triples) lengths = {1, 2};
  if (options.mode != CocycleMode::pairs) lengths.push_back(3);
  for (std::size_t length : lengths) {
    const bool exhaustive = options.samples == 0 || length == 1;
    for (auto& t : exhaustive ? all_tuples(n, length) : sample_tuples(n, length, options.samples, rng)) {
      tuples.insert(std::move(t));
    }
  }
  for (const auto& t : options.extra_tuples) {
    for (std::size_t c : t) {
      if (c >= n) throw IndexOutOfRange("cocycle tuple refers to a missing chart");
    }
    tuples.insert(t);
  }
  std::vector<std::vector<std::size_t>> ordered(tuples.begin(), tuples.end());
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });
  CocycleReport report;
  report.entries.resize(ordered.size());
  parallel_for(ordered.size(), options.threads,
               [&](std::size_t i) { report.entries[i] = check_cocycle_tuple(atlas, ordered[i]); });
  return report;
}

}  // namespace zgr
