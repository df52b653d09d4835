#pragma once

#include <vector>

#include "zgrass/algebra.hpp"
#include "zgrass/blocks.hpp"
#include "zgrass/dense_matrix.hpp"

namespace zgr {

using BodyMatrix = DenseMatrix<RationalFunction>;

/// Block matrix over a graded series algebra. The entry in row block k and
/// column block u of a homogeneous matrix has degree gamma_k + gamma_u + weight.
class SuperMatrix {
 public:
  /// Zero matrix.
  SuperMatrix(Algebra algebra, BlockDims row_dims, BlockDims col_dims);
  SuperMatrix(Algebra algebra, BlockDims row_dims, BlockDims col_dims, Degree weight);

  static SuperMatrix identity(Algebra algebra, BlockDims dims);
  /// Lifts a body matrix to constant series.
  static SuperMatrix from_body(Algebra algebra, BlockDims row_dims, BlockDims col_dims, const BodyMatrix& body);

  const Algebra& algebra() const { return algebra_; }
  const DegreeSystem& degrees() const { return algebra_.table()->degrees(); }
  const BlockDims& row_dims() const { return row_dims_; }
  const BlockDims& col_dims() const { return col_dims_; }
  const Degree& weight() const { return weight_; }
  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }

  const GradedSeries& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  void set(std::size_t r, std::size_t c, GradedSeries value);

  std::size_t row_block(std::size_t r) const { return row_dims_.block_of(static_cast<int>(r)); }
  std::size_t col_block(std::size_t c) const { return col_dims_.block_of(static_cast<int>(c)); }
  /// gamma_{row block} + gamma_{col block} + weight
  Degree cell_degree(std::size_t r, std::size_t c) const;

  BodyMatrix body() const;

  /// Columns in the given order, regrouped under `col_dims`.
  SuperMatrix select_columns(const std::vector<int>& columns, BlockDims col_dims) const;

  friend bool operator==(const SuperMatrix& a, const SuperMatrix& b);

  friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
  friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);

 private:
  Algebra algebra_;
  BlockDims row_dims_;
  BlockDims col_dims_;
  Degree weight_;
  DenseMatrix<GradedSeries> entries_;
};

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b);

bool is_zero_weight(const SuperMatrix& a);
/// True iff every entry is homogeneous of its cell degree (or zero).
bool is_homogeneous(const SuperMatrix& a);

bool is_identity(const SuperMatrix& a);

/// Determinant of the body by fraction-free elimination.
RationalFunction body_determinant(const SuperMatrix& a);

/// Inverse in the truncated ring: body inverse over the rational-function
/// field followed by Newton-Schulz refinement. Throws SingularBody.
SuperMatrix invert(const SuperMatrix& a);

/// Number of Newton-Schulz rounds used for truncation order n.
unsigned newton_schulz_rounds(unsigned truncation);

/// The minor M_I(A): columns selected by I, block by block.
SuperMatrix extract_minor(const SuperMatrix& a, const KIndex& index);
/// D_I(A): the columns left after removing M_I(A).
SuperMatrix delete_minor(const SuperMatrix& a, const KIndex& index);

}  // namespace zgr
