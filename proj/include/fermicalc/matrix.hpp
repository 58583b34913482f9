#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fermicalc/scalar.hpp"

namespace fermicalc {

/// Small dense row-major matrix over a scalar field.
template <Field F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = F(1);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  Matrix operator-() const {
    Matrix out = *this;
    for (auto& x : out.data_) x = -x;
    return out;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    require_same_shape(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& lhs = a(r, k);
        if (lhs.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += lhs * b(k, c);
      }
    return out;
  }

  friend Matrix operator*(const F& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Entry-wise approx_equal.
  friend bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!approx_equal(a.data_[k], b.data_[k], tol)) return false;
    return true;
  }

  /// Gauss-Jordan inverse. Pivots on the largest magnitude; an entry counts
  /// as zero when exactly zero (exact backend) or below `tol` (float backend).
  Matrix inverse(double tol = kDefaultTolerance) const {
    if (!is_square()) throw std::invalid_argument("inverse of a non-square matrix");
    const std::size_t n = rows_;
    Matrix work = *this;
    Matrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
      const std::size_t pivot = work.pick_pivot(col, col, tol);
      if (pivot == n) throw DivisionByZero("singular matrix");
      work.swap_rows(pivot, col);
      inv.swap_rows(pivot, col);
      const F scale = work(col, col).inverse();
      for (std::size_t c = 0; c < n; ++c) {
        work(col, c) *= scale;
        inv(col, c) *= scale;
      }
      for (std::size_t r = 0; r < n; ++r) {
        if (r == col || work(r, col).is_zero()) continue;
        const F factor = work(r, col);
        for (std::size_t c = 0; c < n; ++c) {
          work(r, c) -= factor * work(col, c);
          inv(r, c) -= factor * inv(col, c);
        }
      }
    }
    return inv;
  }

  std::size_t rank(double tol = kDefaultTolerance) const {
    Matrix work = *this;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
      const std::size_t pivot = work.pick_pivot(rank, col, tol);
      if (pivot == rows_) continue;
      work.swap_rows(pivot, rank);
      const F scale = work(rank, col).inverse();
      for (std::size_t r = rank + 1; r < rows_; ++r) {
        if (work(r, col).is_zero()) continue;
        const F factor = work(r, col) * scale;
        for (std::size_t c = col; c < cols_; ++c) work(r, c) -= factor * work(rank, c);
      }
      ++rank;
    }
    return rank;
  }

 private:
  static void require_same_shape(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t pick_pivot(std::size_t first_row, std::size_t col, double tol) const {
    std::size_t best = rows_;
    double best_mag = 0.0;
    for (std::size_t r = first_row; r < rows_; ++r) {
      const F& x = (*this)(r, col);
      if (x.is_zero()) continue;
      if constexpr (F::is_exact) {
        return r;
      } else {
        const double mag = x.magnitude();
        if (mag > tol && mag > best_mag) {
          best = r;
          best_mag = mag;
        }
      }
    }
    return best;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Embeds an exact matrix into backend F.
template <Field F>
Matrix<F> convert_matrix(const Matrix<ExactScalar>& m) {
  Matrix<F> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = F::embed(m(r, c));
  return out;
}

}  // namespace fermicalc
