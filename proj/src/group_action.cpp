#include "zgrass/group_action.hpp"

#include <algorithm>
#include <mutex>

#include "zgrass/errors.hpp"

namespace zgr {

Algebra make_tpoint_algebra(DegreeSystemPtr degrees, unsigned truncation, bool with_central, int per_degree) {
  std::vector<Generator> generators;
  if (with_central) generators.push_back({"t1", degrees->zero()});
  for (std::size_t t = 1; t < degrees->size(); ++t) {
    for (int b = 1; b <= per_degree; ++b) {
      generators.push_back({"s" + std::to_string(t) + "_" + std::to_string(b), (*degrees)[t]});
    }
  }
  return Algebra(std::make_shared<const GeneratorTable>(degrees, std::move(generators)), truncation);
}

struct GLPoint::Cache {
  std::once_flag once;
  std::shared_ptr<const SuperMatrix> inverse;
};

bool body_invertible(const SuperMatrix& a) {
  return a.rows() == a.cols() && !body_determinant(a).is_zero();
}

GLPoint::GLPoint(SuperMatrix matrix) : GLPoint(std::move(matrix), nullptr) {}

GLPoint::GLPoint(SuperMatrix matrix, std::shared_ptr<const SuperMatrix> inverse)
    : matrix_(std::move(matrix)), cache_(std::make_shared<Cache>()) {
  if (!(matrix_.row_dims() == matrix_.col_dims())) throw InvalidShape("GL point must be square");
  if (!is_zero_weight(matrix_)) throw InvalidShape("GL point must have weight zero");
  if (inverse) {
    cache_->inverse = std::move(inverse);
    std::call_once(cache_->once, [] {});
  } else if (!body_invertible(matrix_)) {
    throw SingularBody("GL point has singular body");
  }
}

GLPoint GLPoint::identity(const Algebra& algebra, const BlockDims& m) {
  SuperMatrix id = SuperMatrix::identity(algebra, m);
  return GLPoint(id, std::make_shared<const SuperMatrix>(id));
}

const SuperMatrix& GLPoint::inverse() const {
  std::call_once(cache_->once, [this] { cache_->inverse = std::make_shared<const SuperMatrix>(invert(matrix_)); });
  return *cache_->inverse;
}

GLPoint gl_mul(const GLPoint& p, const GLPoint& q) { return GLPoint(p.matrix() * q.matrix()); }

GLPoint gl_inverse(const GLPoint& p) {
  return GLPoint(p.inverse(), std::make_shared<const SuperMatrix>(p.matrix()));
}

GLPoint translate(const GLPoint& p, const DenseMatrix<Rational>& x, Side side) {
  const Algebra& alg = p.algebra();
  const std::size_t c = alg.central_count();
  if (x.rows() != p.matrix().rows() || x.cols() != p.matrix().cols()) throw ShapeMismatch("translation size mismatch");
  const BodyMatrix body = transform(x, [c](const Rational& q) { return RationalFunction(c, q); });
  const GLPoint lifted(SuperMatrix::from_body(alg, p.dims(), p.dims(), body));
  return side == Side::right ? gl_mul(p, lifted) : gl_mul(lifted, p);
}

GrassmannTPoint tpoint_from_images(const Chart& chart, const std::vector<GradedSeries>& images) {
  if (images.size() != chart.fill().size()) {
    throw ShapeMismatch("chart " + chart.index().to_string() + " needs " + std::to_string(chart.fill().size()) +
                        " images, got " + std::to_string(images.size()));
  }
  const GeneratorTable& table = *chart.table();
  if (images.empty()) {
    throw ShapeMismatch("a chart without generators has no images to read an algebra from; use standard_point");
  }
  const Algebra& alg = images.front().algebra();
  SuperMatrix m(alg, chart.shape().k, chart.shape().m);
  const std::vector<int> minor = chart.index().columns(chart.shape().m);
  for (std::size_t r = 0; r < minor.size(); ++r) m.set(r, static_cast<std::size_t>(minor[r]), alg.one());
  for (std::size_t g = 0; g < images.size(); ++g) {
    images[g].algebra().check_compatible(alg);
    const auto d = degree_of(images[g]);
    if (!images[g].is_zero() && (!d || *d != table[g].degree)) {
      throw DegreeMismatch("image of " + table[g].name + " is not homogeneous of degree " +
                           table[g].degree.to_string());
    }
    m.set(chart.fill()[g].row, chart.fill()[g].column, images[g]);
  }
  return {chart.index(), std::move(m)};
}

std::vector<GradedSeries> tpoint_images(const Chart& chart, const GrassmannTPoint& psi) {
  if (!(psi.chart == chart.index())) {
    throw ShapeMismatch("T-point in chart " + psi.chart.to_string() + ", expected " + chart.index().to_string());
  }
  std::vector<GradedSeries> out;
  out.reserve(chart.fill().size());
  for (const FillCell& cell : chart.fill()) out.push_back(psi.matrix(cell.row, cell.column));
  return out;
}

GrassmannTPoint standard_point(const Chart& chart, const Algebra& algebra) {
  SuperMatrix m(algebra, chart.shape().k, chart.shape().m);
  const std::vector<int> minor = chart.index().columns(chart.shape().m);
  for (std::size_t r = 0; r < minor.size(); ++r) m.set(r, static_cast<std::size_t>(minor[r]), algebra.one());
  return {chart.index(), std::move(m)};
}

namespace {

GrassmannTPoint normalize_into(const SuperMatrix& x, const KIndex& target) {
  target.validate(x.row_dims(), x.col_dims());
  const SuperMatrix minor = extract_minor(x, target);
  if (!body_invertible(minor)) {
    throw SingularBody("T-point is outside chart " + target.to_string() + " (minor has singular body)");
  }
  SuperMatrix y = invert(minor) * x;
  // M^-1 M is the identity exactly; reset it anyway so the minor is literal.
  const Algebra& alg = x.algebra();
  const std::vector<int> cols = target.columns(x.col_dims());
  for (std::size_t r = 0; r < cols.size(); ++r) {
    for (std::size_t j = 0; j < cols.size(); ++j) {
      y.set(r, static_cast<std::size_t>(cols[j]), r == j ? alg.one() : alg.zero());
    }
  }
  return {target, std::move(y)};
}

}  // namespace

GrassmannTPoint change_chart(const GrassmannTPoint& psi, const KIndex& target) {
  if (psi.chart == target) return psi;
  return normalize_into(psi.matrix, target);
}

GrassmannTPoint act(const GrassmannTPoint& psi, const GLPoint& p, const KIndex& target) {
  return normalize_into(psi.matrix * p.matrix(), target);
}

GrassmannTPoint pull_back(const TransitionMap& map, const Chart& target_chart, const Chart& source_chart,
                          const GrassmannTPoint& psi) {
  if (!(map.source == source_chart.index()) || !(map.target == target_chart.index())) {
    throw ShapeMismatch("pull_back: charts do not match the transition");
  }
  if (target_chart.fill().empty()) return standard_point(target_chart, psi.matrix.algebra());
  Substitution subst(map.source_algebra, tpoint_images(source_chart, psi), psi.matrix.algebra());
  std::vector<GradedSeries> images;
  images.reserve(map.images.size());
  for (const auto& image : map.images) images.push_back(subst.apply(image));
  return tpoint_from_images(target_chart, images);
}

GLPoint solve_transitivity(const KIndex& base, const GrassmannTPoint& w) {
  const BlockDims& k = w.matrix.row_dims();
  const BlockDims& m = w.matrix.col_dims();
  base.validate(k, m);
  w.chart.validate(k, m);
  const Algebra& alg = w.matrix.algebra();
  SuperMatrix v(alg, m, m);
  const std::vector<int> minor = base.columns(m);
  for (std::size_t r = 0; r < minor.size(); ++r) {
    for (std::size_t c = 0; c < w.matrix.cols(); ++c) v.set(static_cast<std::size_t>(minor[r]), c, w.matrix(r, c));
  }
  // Rows off the base minor become unit rows on the columns off W's minor,
  // paired in ascending order block by block.
  const std::vector<int> free_rows = base.complement(m);
  const std::vector<int> free_cols = w.chart.complement(m);
  for (std::size_t i = 0; i < free_rows.size(); ++i) {
    v.set(static_cast<std::size_t>(free_rows[i]), static_cast<std::size_t>(free_cols[i]), alg.one());
  }
  return GLPoint(std::move(v));
}

std::optional<GLPoint> random_gl_point(const Algebra& algebra, const BlockDims& m, SeededStream& rng, int retries) {
  for (int attempt = 0; attempt < retries; ++attempt) {
    SuperMatrix candidate = random_zero_weight(algebra, m, m, rng);
    if (body_invertible(candidate)) return GLPoint(std::move(candidate));
  }
  return std::nullopt;
}

GrassmannTPoint random_tpoint(const Chart& chart, const Algebra& algebra, SeededStream& rng) {
  if (chart.fill().empty()) return standard_point(chart, algebra);
  std::vector<GradedSeries> images;
  for (const Generator& g : chart.table()->generators()) images.push_back(random_series(algebra, g.degree, rng));
  return tpoint_from_images(chart, images);
}

namespace {

bool minor_invertible(const SuperMatrix& x, const KIndex& index) { return body_invertible(extract_minor(x, index)); }

}  // namespace

CheckReport verify_lemma(const Atlas& atlas, const Algebra& t_algebra,
                         const std::vector<std::vector<std::size_t>>& pairs, const SweepOptions& options) {
  return sweep(pairs, options, [&](CheckEntry& entry, SeededStream& rng) {
    const Chart& target = atlas.chart(entry.tuple.at(0));
    const Chart& source = atlas.chart(entry.tuple.at(1));
    for (int attempt = 0; attempt < options.retries; ++attempt) {
      const GrassmannTPoint psi = random_tpoint(source, t_algebra, rng);
      if (!minor_invertible(psi.matrix, target.index())) continue;
      const GrassmannTPoint direct = change_chart(psi, target.index());
      const auto map = atlas.transition(entry.tuple[0], entry.tuple[1]);
      const GrassmannTPoint pulled = pull_back(*map, target, source, psi);
      compare(entry, direct.matrix, pulled.matrix);
      return;
    }
    skip(entry, "no T-point in the overlap after retries");
  });
}

CheckReport verify_action_gluing(const Atlas& atlas, const GLPoint& p,
                                 const std::vector<std::vector<std::size_t>>& tuples, const SweepOptions& options) {
  const Algebra& t_algebra = p.algebra();
  return sweep(tuples, options, [&](CheckEntry& entry, SeededStream& rng) {
    if (entry.tuple.size() != 4) throw ConfigurationError("gluing tuples are (I, J, Q, L)");
    const Chart& ci = atlas.chart(entry.tuple[0]);
    const Chart& cj = atlas.chart(entry.tuple[1]);
    const Chart& cq = atlas.chart(entry.tuple[2]);
    const Chart& cl = atlas.chart(entry.tuple[3]);
    for (int attempt = 0; attempt < options.retries; ++attempt) {
      const GrassmannTPoint psi = random_tpoint(ci, t_algebra, rng);
      const SuperMatrix moved = psi.matrix * p.matrix();
      if (!minor_invertible(moved, cj.index()) || !minor_invertible(psi.matrix, cq.index()) ||
          !minor_invertible(moved, cl.index())) {
        continue;
      }
      const auto g_lj = atlas.transition(entry.tuple[3], entry.tuple[1]);
      const auto g_qi = atlas.transition(entry.tuple[2], entry.tuple[0]);
      const GrassmannTPoint lhs = pull_back(*g_lj, cl, cj, act(psi, p, cj.index()));
      const GrassmannTPoint rhs = act(pull_back(*g_qi, cq, ci, psi), p, cl.index());
      compare(entry, lhs.matrix, rhs.matrix);
      return;
    }
    skip(entry, "no T-point in the domain of both paths after retries");
  });
}

CheckReport verify_action_laws(const Atlas& atlas, const Algebra& t_algebra,
                               const std::vector<std::vector<std::size_t>>& tuples, const SweepOptions& options) {
  const BlockDims& m = atlas.shape().m;
  return sweep(tuples, options, [&](CheckEntry& entry, SeededStream& rng) {
    if (entry.tuple.size() != 3) throw ConfigurationError("action-law tuples are (I, J, L)");
    const Chart& ci = atlas.chart(entry.tuple[0]);
    const KIndex& j = atlas.chart(entry.tuple[1]).index();
    const KIndex& l = atlas.chart(entry.tuple[2]).index();
    for (int attempt = 0; attempt < options.retries; ++attempt) {
      const GrassmannTPoint psi = random_tpoint(ci, t_algebra, rng);
      const auto p = random_gl_point(t_algebra, m, rng, options.retries);
      const auto q = random_gl_point(t_algebra, m, rng, options.retries);
      if (!p || !q) break;
      const GLPoint pq = gl_mul(*p, *q);
      const SuperMatrix moved = psi.matrix * p->matrix();
      if (!minor_invertible(moved, j) || !minor_invertible(psi.matrix * pq.matrix(), l)) continue;

      const GrassmannTPoint unit = act(psi, GLPoint::identity(t_algebra, m), ci.index());
      if (auto r = matrix_residual(unit.matrix, psi.matrix)) {
        entry.residual = r;
        entry.note = "unit law fails";
        return;
      }
      const GrassmannTPoint lhs = act(act(psi, *p, j), *q, l);
      const GrassmannTPoint rhs = act(psi, pq, l);
      compare(entry, lhs.matrix, rhs.matrix);
      if (!entry.pass) entry.note = "mixed associativity fails";
      return;
    }
    skip(entry, "no (psi, P, Q) in the domain after retries");
  });
}

CheckReport verify_transitivity(const Atlas& atlas, std::size_t base, const Algebra& t_algebra, std::size_t per_chart,
                                const SweepOptions& options) {
  std::vector<std::vector<std::size_t>> tuples;
  for (std::size_t c = 0; c < atlas.size(); ++c) {
    for (std::size_t s = 0; s < per_chart; ++s) tuples.push_back({base, c, s});
  }
  const KIndex& base_index = atlas.chart(base).index();
  const GrassmannTPoint p = standard_point(atlas.chart(base), t_algebra);
  return sweep(tuples, options, [&](CheckEntry& entry, SeededStream& rng) {
    const GrassmannTPoint w = random_tpoint(atlas.chart(entry.tuple[1]), t_algebra, rng);
    const GLPoint v = solve_transitivity(base_index, w);
    if (!body_invertible(v.matrix())) {
      entry.note = "V has singular body";
      return;
    }
    compare(entry, p.matrix * v.matrix(), w.matrix);
  });
}

}  // namespace zgr
