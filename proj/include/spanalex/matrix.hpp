#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "spanalex/errors.hpp"
#include "spanalex/ratfunc.hpp"

namespace spanalex {

inline bool is_zero(const BigRat& x) { return sgn(x) == 0; }
inline bool is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

inline std::size_t pivot_cost(const BigRat& x) {
  return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}
inline std::size_t pivot_cost(const RatFunc& x) { return static_cast<std::size_t>(x.complexity()); }

inline std::string entry_string(const BigRat& x) { return x.get_str(); }
inline std::string entry_string(const LaurentPoly& x) { return x.to_string(); }
inline std::string entry_string(const RatFunc& x) { return x.to_string(); }

/// Dense row-major matrix over a commutative ring R (a field for the
/// elimination routines below).
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) fail(ErrorCode::DimensionMismatch, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  R& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == R(i == j ? 1 : 0))) return false;
    return true;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const R& aik = a(i, k);
        if (is_zero(aik)) continue;
        const bool unit = aik == R(1);
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const R& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          if (unit) c(i, j) += bkj;
          else c(i, j) += aik * bkj;
        }
      }
    }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "matrix difference shape mismatch");
    Matrix c(a);
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }

  Matrix scaled(const R& s) const {
    Matrix c(*this);
    for (auto& x : c.data_) x = x * s;
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  template <class Fn>
  auto map(Fn&& fn) const {
    using S = std::decay_t<decltype(fn(std::declval<const R&>()))>;
    Matrix<S> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = fn((*this)(i, j));
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::DimensionMismatch, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix b(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < cols_; ++j) b(i, j) = (*this)(idx[i], j);
    return b;
  }

  static Matrix vstack(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) fail(ErrorCode::DimensionMismatch, "vstack column mismatch");
    Matrix c(a.rows_ + b.rows_, a.cols_);
    std::copy(a.data_.begin(), a.data_.end(), c.data_.begin());
    std::copy(b.data_.begin(), b.data_.end(), c.data_.begin() + static_cast<std::ptrdiff_t>(a.data_.size()));
    return c;
  }

  static Matrix hstack(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) fail(ErrorCode::DimensionMismatch, "hstack row mismatch");
    Matrix c(a.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, a.cols_ + j) = b(i, j);
    }
    return c;
  }

  static Matrix block_diag(const Matrix& a, const Matrix& b) {
    Matrix c(a.rows_ + b.rows_, a.cols_ + b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) c(i, j) = a(i, j);
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) c(a.rows_ + i, a.cols_ + j) = b(i, j);
    return c;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<R> data_;
};

/// In-place reduced row echelon form over a field; returns pivot columns.
template <class F>
std::vector<std::size_t> rref_inplace(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < m.rows(); ++i) {
      if (is_zero(m(i, c))) continue;
      const std::size_t cost = pivot_cost(m(i, c));
      if (best == m.rows() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == m.rows()) continue;
    m.swap_rows(r, best);
    const F inv = F(1) / m(r, c);
    if (!(inv == F(1))) {
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (is_zero(m(r, j))) continue;
        m(i, j) -= factor * m(r, j);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_inplace(m).size();
}

/// Basis of the null space as columns, one per free column in increasing order.
template <class F>
Matrix<F> kernel_basis(const Matrix<F>& m) {
  Matrix<F> r(m);
  const auto pivots = rref_inplace(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<F> k(m.cols(), free_cols.size());
  for (std::size_t j = 0; j < free_cols.size(); ++j) {
    k(free_cols[j], j) = F(1);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      if (!is_zero(r(i, free_cols[j]))) k(pivots[i], j) = -r(i, free_cols[j]);
    }
  }
  return k;
}

/// Reduced column echelon basis of the column space.
template <class F>
Matrix<F> column_echelon(const Matrix<F>& m) {
  Matrix<F> t = m.transpose();
  const auto pivots = rref_inplace(t);
  return t.block(0, 0, pivots.size(), t.cols()).transpose();
}

template <class F>
F determinant(Matrix<F> m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  F det(1);
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    std::size_t best_cost = 0;
    for (std::size_t i = c; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const std::size_t cost = pivot_cost(m(i, c));
      if (best == n || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == n) return F(0);
    if (best != c) {
      m.swap_rows(best, c);
      det = -det;
    }
    det = det * m(c, c);
    const F inv = F(1) / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const F factor = m(i, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j) {
        if (is_zero(m(c, j))) continue;
        m(i, j) -= factor * m(c, j);
      }
    }
  }
  return det;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
  Matrix<F> aug = Matrix<F>::hstack(m, Matrix<F>::identity(m.rows()));
  const auto pivots = rref_inplace(aug);
  if (pivots.size() < m.rows() || pivots.back() >= m.cols()) {
    fail(ErrorCode::DivisionByZero, "matrix is singular");
  }
  return aug.block(0, m.cols(), m.rows(), m.cols());
}

template <class R>
std::vector<std::vector<std::string>> matrix_strings(const Matrix<R>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(entry_string(m(i, j)));
  return out;
}

}  // namespace spanalex
