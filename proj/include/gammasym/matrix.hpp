#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gammasym/rational.hpp"

namespace gammasym {

/// Dense matrix over exact rationals. Row-major flat storage; all arithmetic
/// is exact. Multiplication skips zero operands, which matters a lot here:
/// every structural matrix in this library (involutions, graded basis
/// elements) is extremely sparse even though the container is dense.
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(std::size_t(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }

  static Mat zero(int rows, int cols) { return Mat(rows, cols); }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  /// Row-of-rows construction, mainly for literal fixtures in tests.
  static Mat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    int r = int(rows.size());
    int c = r == 0 ? 0 : int(rows.begin()->size());
    Mat m(r, c);
    int i = 0;
    for (const auto& row : rows) {
      if (int(row.size()) != c) throw std::invalid_argument("ragged rows");
      int j = 0;
      for (long v : row) m.at(i, j++) = v;
      ++i;
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[std::size_t(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[std::size_t(i) * cols_ + j]; }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const auto& x : a_)
      if (x != 0) return false;
    return true;
  }

  bool is_square() const { return rows_ == cols_; }

  bool is_antisymmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i; j < cols_; ++j)
        if (at(i, j) != -at(j, i)) return false;
    return true;
  }

  bool is_symmetric() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
      for (int j = i + 1; j < cols_; ++j)
        if (at(i, j) != at(j, i)) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  Rational trace() const {
    require_square();
    Rational s = 0;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }

  Mat operator+(const Mat& o) const {
    require_same_shape(o);
    Mat r = *this;
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] += o.a_[t];
    return r;
  }

  Mat operator-(const Mat& o) const {
    require_same_shape(o);
    Mat r = *this;
    for (std::size_t t = 0; t < a_.size(); ++t) r.a_[t] -= o.a_[t];
    return r;
  }

  Mat operator-() const {
    Mat r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  Mat operator*(const Rational& s) const {
    Mat r = *this;
    for (auto& x : r.a_) x *= s;
    return r;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int t = 0; t < cols_; ++t) {
        const Rational& x = at(i, t);
        if (x == 0) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const Rational& y = o.at(t, j);
          if (y == 0) continue;
          r.at(i, j) += x * y;
        }
      }
    }
    return r;
  }

  /// Largest absolute entry; the "residual norm" used by all certificates.
  Rational max_abs() const {
    Rational m = 0;
    for (const auto& x : a_) {
      Rational v = abs(x);
      if (v > m) m = v;
    }
    return m;
  }

  const std::vector<Rational>& flat() const { return a_; }

 private:
  void require_square() const {
    if (!is_square()) throw std::invalid_argument("square matrix required");
  }
  void require_same_shape(const Mat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

inline Mat operator*(const Rational& s, const Mat& m) { return m * s; }

/// Commutator AB - BA.
inline Mat bracket(const Mat& A, const Mat& B) { return A * B - B * A; }

/// Kronecker product, standard convention: (A kron B)[(i*p)+r][(j*q)+s] =
/// A[i][j] * B[r][s] for B of shape p x q.
inline Mat kron(const Mat& A, const Mat& B) {
  Mat r(A.rows() * B.rows(), A.cols() * B.cols());
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j) {
      const Rational& a = A.at(i, j);
      if (a == 0) continue;
      for (int p = 0; p < B.rows(); ++p)
        for (int q = 0; q < B.cols(); ++q) {
          const Rational& b = B.at(p, q);
          if (b == 0) continue;
          r.at(i * B.rows() + p, j * B.cols() + q) = a * b;
        }
    }
  return r;
}

}  // namespace gammasym
