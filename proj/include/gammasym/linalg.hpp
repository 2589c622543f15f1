#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "gammasym/matrix.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

/// In-place reduced row echelon form. Returns the pivot column indices.
inline std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int p = -1;
    for (int r = row; r < m.rows(); ++r)
      if (m.at(r, col) != 0) {
        p = r;
        break;
      }
    if (p < 0) continue;
    if (p != row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(row, j));
    Rational inv = m.at(row, col);
    for (int j = 0; j < m.cols(); ++j) m.at(row, j) /= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row) continue;
      Rational f = m.at(r, col);
      if (f == 0) continue;
      for (int j = 0; j < m.cols(); ++j) m.at(r, j) -= f * m.at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

inline int rank(Mat m) { return int(rref(m).size()); }

/// Basis of the right nullspace {x : Ax = 0}, one column vector per basis
/// element, in the canonical free-column order.
inline std::vector<std::vector<Rational>> nullspace(Mat A) {
  std::vector<int> piv = rref(A);
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(A.cols(), Rational(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A.at(int(r), fc);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Full description of the affine solution set of Ax = b.
struct LinearSolution {
  bool consistent = false;
  std::vector<Rational> particular;                // one solution (if consistent)
  std::vector<std::vector<Rational>> null_basis;   // basis of the homogeneous part
};

inline LinearSolution solve_linear(const Mat& A, const std::vector<Rational>& b) {
  if (int(b.size()) != A.rows()) throw std::invalid_argument("rhs length mismatch");
  Mat aug(A.rows(), A.cols() + 1);
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, A.cols()) = b[i];
  }
  std::vector<int> piv = rref(aug);
  LinearSolution out;
  if (!piv.empty() && piv.back() == A.cols()) return out;  // 0 = 1 row
  out.consistent = true;
  out.particular.assign(A.cols(), Rational(0));
  for (std::size_t r = 0; r < piv.size(); ++r)
    out.particular[piv[r]] = aug.at(int(r), A.cols());
  std::vector<bool> is_pivot(A.cols(), false);
  for (int c : piv) is_pivot[c] = true;
  for (int fc = 0; fc < A.cols(); ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rational> v(A.cols(), Rational(0));
    v[fc] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -aug.at(int(r), fc);
    out.null_basis.push_back(std::move(v));
  }
  return out;
}

inline std::optional<Mat> inverse(const Mat& A) {
  if (!A.is_square()) throw std::invalid_argument("inverse of non-square matrix");
  int n = A.rows();
  Mat aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(i, j);
    aug.at(i, n + i) = 1;
  }
  std::vector<int> piv = rref(aug);
  if (int(piv.size()) < n || piv[n - 1] >= n) {
    // fewer than n pivots inside the left block: singular
    if (int(piv.size()) < n) return std::nullopt;
  }
  for (int r = 0; r < n; ++r)
    if (piv[r] != r) return std::nullopt;
  Mat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

/// Inertia (p, q, z) of a symmetric matrix over the rationals, by exact
/// symmetric congruence reduction (Sylvester's law makes the counts
/// basis-independent). When the remaining diagonal is all zero but an
/// off-diagonal entry survives, the standard congruence row/column addition
/// manufactures a pivot without disturbing symmetry.
struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  bool operator==(const Inertia&) const = default;
};

inline Inertia inertia(Mat G) {
  if (!G.is_symmetric()) throw std::invalid_argument("inertia of non-symmetric matrix");
  int n = G.rows();
  std::vector<int> live;
  for (int i = 0; i < n; ++i) live.push_back(i);
  Inertia out;
  while (!live.empty()) {
    int piv = -1;
    for (int i : live)
      if (G.at(i, i) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) {
      std::pair<int, int> od{-1, -1};
      for (int i : live) {
        for (int j : live)
          if (i != j && G.at(i, j) != 0) {
            od = {i, j};
            break;
          }
        if (od.first >= 0) break;
      }
      if (od.first < 0) {
        out.zero += int(live.size());
        break;
      }
      // congruence: add row j and column j into row/column i; the new
      // diagonal entry is 2*G[i][j] != 0
      auto [i, j] = od;
      for (int t = 0; t < n; ++t) G.at(i, t) += G.at(j, t);
      for (int t = 0; t < n; ++t) G.at(t, i) += G.at(t, j);
      piv = i;
    }
    Rational d = G.at(piv, piv);
    if (d > 0)
      ++out.positive;
    else
      ++out.negative;
    live.erase(std::find(live.begin(), live.end(), piv));
    for (int i : live) {
      Rational f = G.at(i, piv) / d;
      if (f == 0) continue;
      for (int t = 0; t < n; ++t) G.at(i, t) -= f * G.at(piv, t);
      for (int t = 0; t < n; ++t) G.at(t, i) -= f * G.at(t, piv);
    }
  }
  return out;
}

/// Characteristic polynomial det(xI - A) by the Faddeev-LeVerrier recurrence.
/// Returned coefficient vector is monic, highest degree first:
/// p(x) = c[0] x^n + c[1] x^(n-1) + ... + c[n], c[0] = 1.
inline std::vector<Rational> char_poly(const Mat& A) {
  if (!A.is_square()) throw std::invalid_argument("char_poly of non-square matrix");
  int n = A.rows();
  std::vector<Rational> coeffs{Rational(1)};
  Mat M = Mat::identity(n);
  for (int k = 1; k <= n; ++k) {
    Mat AM = A * M;
    Rational ck = -AM.trace() / k;
    coeffs.push_back(ck);
    M = AM;
    for (int i = 0; i < n; ++i) M.at(i, i) += ck;
  }
  return coeffs;
}

/// Synthetic division of a monic-first coefficient vector by (x - r).
/// Returns {quotient, remainder}; remainder == 0 certifies r as a root.
inline std::pair<std::vector<Rational>, Rational> divide_by_root(
    const std::vector<Rational>& poly, const Rational& r) {
  std::vector<Rational> out;
  out.reserve(poly.size());
  Rational acc = 0;
  for (const Rational& c : poly) {
    acc = c + acc * r;
    out.push_back(acc);
  }
  Rational rem = out.back();
  out.pop_back();
  return {std::move(out), rem};
}

/// Cyclic Jacobi eigensolver for symmetric matrices in double precision.
/// This is deliberately the only floating-point computation in the library;
/// it exists purely as a redundant cross-check of exact results.
inline std::vector<double> jacobi_eigenvalues(const Mat& G) {
  int n = G.rows();
  std::vector<std::vector<double>> a(n, std::vector<double>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = G.at(i, j).get_d();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::fabs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1);
        double s = t * c;
        for (int i = 0; i < n; ++i) {
          double aip = a[i][p], aiq = a[i][q];
          a[i][p] = c * aip - s * aiq;
          a[i][q] = s * aip + c * aiq;
        }
        for (int i = 0; i < n; ++i) {
          double api = a[p][i], aqi = a[q][i];
          a[p][i] = c * api - s * aqi;
          a[q][i] = s * api + c * aqi;
        }
      }
  }
  std::vector<double> eig(n);
  for (int i = 0; i < n; ++i) eig[i] = a[i][i];
  std::sort(eig.begin(), eig.end());
  return eig;
}

}  // namespace gammasym
