#include "zgrass/supermatrix.hpp"

#include <bit>

#include "zgrass/errors.hpp"

namespace zgr {

SuperMatrix::SuperMatrix(Algebra algebra, BlockDims row_dims, BlockDims col_dims)
    : SuperMatrix(algebra, std::move(row_dims), std::move(col_dims), algebra.table()->degrees().zero()) {}

SuperMatrix::SuperMatrix(Algebra algebra, BlockDims row_dims, BlockDims col_dims, Degree weight)
    : algebra_(std::move(algebra)),
      row_dims_(std::move(row_dims)),
      col_dims_(std::move(col_dims)),
      weight_(weight),
      entries_(static_cast<std::size_t>(row_dims_.total()), static_cast<std::size_t>(col_dims_.total()),
               algebra_.zero()) {
  const DegreeSystem& d = degrees();
  if (row_dims_.blocks() != d.size() || col_dims_.blocks() != d.size()) {
    throw InvalidShape("supermatrix block dims must have " + std::to_string(d.size()) + " entries");
  }
  d.check(weight_);
}

SuperMatrix SuperMatrix::identity(Algebra algebra, BlockDims dims) {
  SuperMatrix out(algebra, dims, dims);
  for (std::size_t i = 0; i < out.rows(); ++i) out.entries_(i, i) = algebra.one();
  return out;
}

SuperMatrix SuperMatrix::from_body(Algebra algebra, BlockDims row_dims, BlockDims col_dims, const BodyMatrix& body) {
  SuperMatrix out(algebra, std::move(row_dims), std::move(col_dims));
  if (body.rows() != out.rows() || body.cols() != out.cols()) throw ShapeMismatch("body matrix shape mismatch");
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      if (!body(r, c).is_zero()) out.entries_(r, c) = algebra.constant(body(r, c));
    }
  }
  return out;
}

void SuperMatrix::set(std::size_t r, std::size_t c, GradedSeries value) {
  if (r >= rows() || c >= cols()) throw IndexOutOfRange("supermatrix entry out of range");
  algebra_.check_compatible(value.algebra());
  entries_(r, c) = std::move(value);
}

Degree SuperMatrix::cell_degree(std::size_t r, std::size_t c) const {
  const DegreeSystem& d = degrees();
  return d[row_block(r)] + d[col_block(c)] + weight_;
}

BodyMatrix SuperMatrix::body() const {
  return transform(entries_, [](const GradedSeries& s) { return zgr::body(s); });
}

SuperMatrix SuperMatrix::select_columns(const std::vector<int>& columns, BlockDims col_dims) const {
  if (static_cast<int>(columns.size()) != col_dims.total()) throw ShapeMismatch("column count mismatch");
  SuperMatrix out(algebra_, row_dims_, std::move(col_dims), weight_);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const auto c = static_cast<std::size_t>(columns[j]);
      if (c >= cols()) throw IndexOutOfRange("column out of range");
      out.entries_(r, j) = entries_(r, c);
    }
  }
  return out;
}

bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
  return a.row_dims_ == b.row_dims_ && a.col_dims_ == b.col_dims_ && a.weight_ == b.weight_ &&
         a.entries_ == b.entries_;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
  if (!(a.col_dims_ == b.row_dims_)) {
    throw ShapeMismatch("matmul: column dims " + a.col_dims_.to_string() + " vs row dims " + b.row_dims_.to_string());
  }
  a.algebra_.check_compatible(b.algebra_);
  SuperMatrix out(a.algebra_, a.row_dims_, b.col_dims_, a.weight_ + b.weight_);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const GradedSeries& aik = a.entries_(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const GradedSeries& bkj = b.entries_(k, j);
        if (bkj.is_zero()) continue;
        out.entries_(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.weight_ != b.weight_) throw ShapeMismatch("matrix sum weight mismatch");
  if (!(a.row_dims_ == b.row_dims_) || !(a.col_dims_ == b.col_dims_)) throw ShapeMismatch("matrix sum shape mismatch");
  SuperMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.entries_(r, c) += b.entries_(r, c);
  }
  return out;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
  if (a.weight_ != b.weight_) throw ShapeMismatch("matrix difference weight mismatch");
  if (!(a.row_dims_ == b.row_dims_) || !(a.col_dims_ == b.col_dims_)) throw ShapeMismatch("matrix difference shape mismatch");
  SuperMatrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.entries_(r, c) -= b.entries_(r, c);
  }
  return out;
}

SuperMatrix matmul(const SuperMatrix& a, const SuperMatrix& b) { return a * b; }

bool is_homogeneous(const SuperMatrix& a) {
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const GradedSeries& e = a(r, c);
      if (e.is_zero()) continue;
      auto d = degree_of(e);
      if (!d || *d != a.cell_degree(r, c)) return false;
    }
  }
  return true;
}

bool is_zero_weight(const SuperMatrix& a) { return a.weight().is_zero() && is_homogeneous(a); }

bool is_identity(const SuperMatrix& a) {
  if (a.rows() != a.cols()) return false;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (r == c ? !a(r, c).is_one() : !a(r, c).is_zero()) return false;
    }
  }
  return true;
}

RationalFunction body_determinant(const SuperMatrix& a) {
  if (a.rows() != a.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = a.algebra().central_count();
  return fraction_free_determinant(a.body(), RationalFunction(n), RationalFunction(n, Rational(1)));
}

unsigned newton_schulz_rounds(unsigned truncation) {
  // ceil(log2(N + 1)) + 1
  return static_cast<unsigned>(std::bit_width(truncation)) + 1;
}

SuperMatrix invert(const SuperMatrix& a) {
  if (!(a.row_dims() == a.col_dims())) throw ShapeMismatch("inverse of a non-square supermatrix");
  if (!a.weight().is_zero()) throw ConfigurationError("only zero-weight supermatrices are inverted");
  const Algebra& alg = a.algebra();
  const std::size_t n = alg.central_count();
  auto seed = field_inverse(a.body(), RationalFunction(n), RationalFunction(n, Rational(1)));
  if (!seed) throw SingularBody("supermatrix body is singular");
  SuperMatrix x = SuperMatrix::from_body(alg, a.col_dims(), a.row_dims(), seed->inverse);
  const SuperMatrix id = SuperMatrix::identity(alg, a.row_dims());
  // The residual I - A X has zero body, so it squares away below the
  // truncation order: R_{k+1} = R_k^2.
  const unsigned rounds = newton_schulz_rounds(alg.truncation());
  for (unsigned k = 0; k < rounds; ++k) {
    const SuperMatrix residual = id - a * x;
    bool done = true;
    for (std::size_t r = 0; r < residual.rows() && done; ++r) {
      for (std::size_t c = 0; c < residual.cols() && done; ++c) done = residual(r, c).is_zero();
    }
    if (done) break;
    x = x + x * residual;
  }
  return x;
}

SuperMatrix extract_minor(const SuperMatrix& a, const KIndex& index) {
  return a.select_columns(index.columns(a.col_dims()), index.sizes());
}

SuperMatrix delete_minor(const SuperMatrix& a, const KIndex& index) {
  std::vector<int> sizes;
  for (std::size_t u = 0; u < index.blocks(); ++u) {
    sizes.push_back(a.col_dims()[u] - static_cast<int>(index[u].size()));
  }
  return a.select_columns(index.complement(a.col_dims()), BlockDims(std::move(sizes)));
}

}  // namespace zgr
