#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zgrass/errors.hpp"

namespace zgr {

/// Row-major dense matrix over an arbitrary scalar type. Scalars need not be
/// default-constructible into a meaningful zero, so every constructor takes
/// an explicit fill value.
template <class Scalar>
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols, const Scalar& fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

template <class Scalar, class Fn>
auto transform(const DenseMatrix<Scalar>& a, Fn fn) {
  using Out = decltype(fn(a(0, 0)));
  std::optional<DenseMatrix<Out>> out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      Out v = fn(a(r, c));
      if (!out) out.emplace(a.rows(), a.cols(), v);
      (*out)(r, c) = std::move(v);
    }
  }
  return *std::move(out);
}

template <class Scalar>
DenseMatrix<Scalar> multiply(const DenseMatrix<Scalar>& a, const DenseMatrix<Scalar>& b, const Scalar& zero) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product dimension mismatch");
  DenseMatrix<Scalar> out(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == zero) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == zero) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

template <class Scalar>
DenseMatrix<Scalar> identity_matrix(std::size_t n, const Scalar& zero, const Scalar& one) {
  DenseMatrix<Scalar> out(n, n, zero);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = one;
  return out;
}

/// Determinant by Bareiss fraction-free elimination. Every division is
/// exact in the ring generated by the entries.
template <class Scalar>
Scalar fraction_free_determinant(DenseMatrix<Scalar> m, const Scalar& zero, const Scalar& one) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return one;
  Scalar previous = one;
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == zero) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == zero) ++p;
      if (p == n) return zero;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(p, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m(i, j) = (m(k, k) * m(i, j) - m(i, k) * m(k, j)) / previous;
      }
      m(i, k) = zero;
    }
    previous = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return negate ? zero - det : det;
}

template <class Scalar>
struct FieldInverse {
  DenseMatrix<Scalar> inverse;
  Scalar determinant;
};

/// Gauss-Jordan inverse over a field; nullopt if singular.
template <class Scalar>
std::optional<FieldInverse<Scalar>> field_inverse(DenseMatrix<Scalar> m, const Scalar& zero, const Scalar& one) {
  if (m.rows() != m.cols()) throw ShapeMismatch("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  DenseMatrix<Scalar> inv = identity_matrix(n, zero, one);
  Scalar det = one;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == zero) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(p, c));
        std::swap(inv(k, c), inv(p, c));
      }
      det = zero - det;
    }
    const Scalar pivot = m(k, k);
    det = det * pivot;
    const Scalar scale = one / pivot;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(m(k, c) == zero)) m(k, c) = m(k, c) * scale;
      if (!(inv(k, c) == zero)) inv(k, c) = inv(k, c) * scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == zero) continue;
      const Scalar factor = m(i, k);
      for (std::size_t c = 0; c < n; ++c) {
        if (!(m(k, c) == zero)) m(i, c) = m(i, c) - factor * m(k, c);
        if (!(inv(k, c) == zero)) inv(i, c) = inv(i, c) - factor * inv(k, c);
      }
    }
  }
  return FieldInverse<Scalar>{std::move(inv), std::move(det)};
}

}  // namespace zgr
