#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "zgrass/supermatrix.hpp"

namespace zgr {

/// The data (n, k, m) of G_k(m).
struct GrassmannShape {
  DegreeSystemPtr degrees;
  BlockDims k;
  BlockDims m;

  /// Validates block counts and k_i <= m_i; throws InvalidShape.
  static GrassmannShape make(DegreeSystemPtr degrees, BlockDims k, BlockDims m);
};

/// beta_t = sum over gamma_i + gamma_j = gamma_t of k_i (m_j - k_j):
/// the number of chart generators of each degree.
BlockDims beta_dims(const DegreeSystem& degrees, const BlockDims& k, const BlockDims& m);

/// All k-indices, lexicographic in their index tuples.
std::vector<KIndex> enumerate_charts(const BlockDims& k, const BlockDims& m);

/// Position of a chart generator inside the label matrix.
struct FillCell {
  std::size_t row;
  std::size_t column;        // global column of the label
  std::size_t minor_column;  // column of D_I(label)
};

/// A chart U_I: its generators in fill order and the label matrix A_I, which
/// carries the identity on the minor columns of I and one generator in every
/// other cell of matching block degree.
class Chart {
 public:
  Chart(GrassmannShape shape, KIndex index, unsigned truncation);

  const GrassmannShape& shape() const { return shape_; }
  const KIndex& index() const { return index_; }
  const Algebra& algebra() const { return algebra_; }
  const TablePtr& table() const { return algebra_.table(); }
  const SuperMatrix& label() const { return label_; }
  /// One cell per generator, in table (fill) order.
  const std::vector<FillCell>& fill() const { return fill_; }

 private:
  struct Layout;
  static Layout layout(const GrassmannShape& shape, const KIndex& index);
  Chart(GrassmannShape shape, KIndex index, unsigned truncation, Layout layout);

  GrassmannShape shape_;
  KIndex index_;
  Algebra algebra_;
  std::vector<FillCell> fill_;
  SuperMatrix label_;
};

Chart build_chart(const GrassmannShape& shape, const KIndex& index, unsigned truncation);

/// Chart change g*: each generator of the target chart expressed as a
/// series over the source chart.
struct TransitionMap {
  KIndex source;
  KIndex target;
  Algebra source_algebra;
  TablePtr target_table;
  /// In target table order.
  std::vector<GradedSeries> images;
  /// Polynomial in the source central generators that is nonzero wherever
  /// the map is defined.
  Polynomial certificate;
};

TransitionMap identity_map(const Chart& chart);

/// Reads the target generators off D_target((M_target A_source)^-1 A_source).
/// Throws SingularBody if M_target A_source has identically singular body.
TransitionMap transition(const Chart& target, const Chart& source);

/// outer after inner; requires outer.source == inner.target.
TransitionMap compose(const TransitionMap& outer, const TransitionMap& inner);

/// Index of the first generator whose image differs from itself.
std::optional<std::size_t> first_non_identity(const TransitionMap& map);

/// Charts and a thread-safe transition cache for one grassmannian.
class Atlas {
 public:
  Atlas(GrassmannShape shape, unsigned truncation);

  const GrassmannShape& shape() const { return shape_; }
  unsigned truncation() const { return truncation_; }
  const std::vector<Chart>& charts() const { return charts_; }
  const Chart& chart(std::size_t i) const { return charts_.at(i); }
  std::size_t size() const { return charts_.size(); }
  /// Position of a k-index; throws IndexOutOfRange if it is not a chart.
  std::size_t position(const KIndex& index) const;

  /// Cached transition from chart `source` to chart `target`.
  std::shared_ptr<const TransitionMap> transition(std::size_t target, std::size_t source) const;

  /// Test hook: replaces the cached transition (target <- source) by a
  /// deliberately wrong one.
  void corrupt(std::size_t target, std::size_t source);

 private:
  GrassmannShape shape_;
  unsigned truncation_;
  std::vector<Chart> charts_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::shared_ptr<const TransitionMap>> cache_;
};

enum class CocycleMode { pairs, triples, all };

struct CocycleOptions {
  CocycleMode mode = CocycleMode::all;
  /// 0 checks every tuple; otherwise this many seeded random tuples per kind.
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  /// Always checked, in addition to the enumerated or sampled ones.
  std::vector<std::vector<std::size_t>> extra_tuples;
  unsigned threads = 0;
};

/// A tuple (I), (I, J) or (I, J, S) of chart positions and the outcome of
/// g_II = id, g_JI g_IJ = id or g_SI g_JS g_IJ = id respectively.
struct CocycleEntry {
  std::vector<std::size_t> tuple;
  bool pass = false;
  std::optional<std::string> generator;
  std::optional<GradedSeries> residual;
  std::string error;
};

struct CocycleReport {
  std::vector<CocycleEntry> entries;
  bool all_pass() const;
  std::size_t failures() const;
};

CocycleEntry check_cocycle_tuple(const Atlas& atlas, const std::vector<std::size_t>& tuple);
CocycleReport verify_cocycle(const Atlas& atlas, const CocycleOptions& options);

/// Runs fn(i) for i in [0, count) on up to `threads` workers (0 = hardware).
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace zgr
