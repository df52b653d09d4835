#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "zgrass/checks.hpp"
#include "zgrass/grassmannian.hpp"
#include "zgrass/random.hpp"

namespace zgr {

/// Function algebra of a test superdomain T: one central generator t1
/// (unless `with_central` is false) and `per_degree` generators s<t>_<b> of
/// every nonzero degree gamma_t.
Algebra make_tpoint_algebra(DegreeSystemPtr degrees, unsigned truncation, bool with_central = true,
                            int per_degree = 2);

/// A T-point of GL(m): square zero-weight supermatrix with invertible body.
class GLPoint {
 public:
  /// Throws InvalidShape or SingularBody.
  explicit GLPoint(SuperMatrix matrix);

  static GLPoint identity(const Algebra& algebra, const BlockDims& m);

  const SuperMatrix& matrix() const { return matrix_; }
  const Algebra& algebra() const { return matrix_.algebra(); }
  const BlockDims& dims() const { return matrix_.row_dims(); }
  /// Computed on first use.
  const SuperMatrix& inverse() const;

  friend bool operator==(const GLPoint& a, const GLPoint& b) { return a.matrix_ == b.matrix_; }

 private:
  GLPoint(SuperMatrix matrix, std::shared_ptr<const SuperMatrix> inverse);

  friend GLPoint gl_inverse(const GLPoint& p);
  struct Cache;
  SuperMatrix matrix_;
  std::shared_ptr<Cache> cache_;
};

GLPoint gl_mul(const GLPoint& p, const GLPoint& q);
GLPoint gl_inverse(const GLPoint& p);

enum class Side { left, right };

/// Right translation P x or left translation x P by a real point x.
GLPoint translate(const GLPoint& p, const DenseMatrix<Rational>& x, Side side);

/// A T-point of the grassmannian written in the chart `chart`: the k x m
/// matrix [psi]_I with the identity on the minor columns.
struct GrassmannTPoint {
  KIndex chart;
  SuperMatrix matrix;

  friend bool operator==(const GrassmannTPoint&, const GrassmannTPoint&) = default;
};

/// Places images[g] at the cell of chart generator g; minor = identity.
/// Throws DegreeMismatch or ShapeMismatch.
GrassmannTPoint tpoint_from_images(const Chart& chart, const std::vector<GradedSeries>& images);
/// The inverse of tpoint_from_images.
std::vector<GradedSeries> tpoint_images(const Chart& chart, const GrassmannTPoint& psi);

/// All chart generators sent to zero.
GrassmannTPoint standard_point(const Chart& chart, const Algebra& algebra);

/// D_target((M_target [psi])^-1 [psi]) completed by the identity minor.
/// Throws SingularBody if psi is outside the target chart.
GrassmannTPoint change_chart(const GrassmannTPoint& psi, const KIndex& target);

/// A_I^J(psi): change_chart of [psi][P] into `target`.
GrassmannTPoint act(const GrassmannTPoint& psi, const GLPoint& p, const KIndex& target);

/// (g)_T(psi) = psi o g: substitutes the images of psi into the transition
/// images. `psi` must be written in map.source.
GrassmannTPoint pull_back(const TransitionMap& map, const Chart& target_chart, const Chart& source_chart,
                          const GrassmannTPoint& psi);

/// V with p V = W, where p is the standard point of `base`.
GLPoint solve_transitivity(const KIndex& base, const GrassmannTPoint& w);

/// Random invertible GL point; nullopt after `retries` singular draws.
std::optional<GLPoint> random_gl_point(const Algebra& algebra, const BlockDims& m, SeededStream& rng,
                                       int retries = 50);
/// Random T-point in a chart.
GrassmannTPoint random_tpoint(const Chart& chart, const Algebra& algebra, SeededStream& rng);

/// Invertible matrix body over the rational constants.
bool body_invertible(const SuperMatrix& a);

/// change_chart against pull_back along the cached transition, on random psi
/// in the second chart of each (target, source) pair.
CheckReport verify_lemma(const Atlas& atlas, const Algebra& t_algebra,
                         const std::vector<std::vector<std::size_t>>& pairs, const SweepOptions& options);

/// (g_LJ)_T o A_I^J = A_Q^L o (g_QI)_T on random psi in chart I, for tuples
/// (I, J, Q, L).
CheckReport verify_action_gluing(const Atlas& atlas, const GLPoint& p,
                                 const std::vector<std::vector<std::size_t>>& tuples, const SweepOptions& options);

/// Unit law act(psi, 1, I) = psi and act(act(psi, P, J), Q, L) = act(psi, PQ, L)
/// for random (psi, P, Q) and charts (I, J, L).
CheckReport verify_action_laws(const Atlas& atlas, const Algebra& t_algebra,
                               const std::vector<std::vector<std::size_t>>& tuples, const SweepOptions& options);

/// For each chart J: random W in J (over t_algebra), V = solve_transitivity,
/// and the checks p V = W, body(V) invertible.
CheckReport verify_transitivity(const Atlas& atlas, std::size_t base, const Algebra& t_algebra,
                                std::size_t per_chart, const SweepOptions& options);

}  // namespace zgr
