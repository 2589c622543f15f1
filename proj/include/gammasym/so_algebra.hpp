#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammasym/linalg.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

/// Ordered basis of a subspace of antisymmetric matrices, with printable
/// element names for certificates.
struct LieBasis {
  int ambient_size = 0;
  std::vector<Mat> elements;
  std::vector<std::string> labels;

  int dim() const { return int(elements.size()); }
};

/// E_ij - E_ji for i < j, ordered lexicographically by (i, j).
inline LieBasis so_basis(int N) {
  if (N < 2) throw std::invalid_argument("so(N) requires N >= 2");
  LieBasis basis;
  basis.ambient_size = N;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Mat m(N, N);
      m.at(i, j) = 1;
      m.at(j, i) = -1;
      basis.elements.push_back(std::move(m));
      basis.labels.push_back("E" + std::to_string(i) + std::to_string(j));
    }
  return basis;
}

/// Killing form of so(N) in closed form: (N - 2) * trace(XY). The ad-trace
/// definition trace(ad X . ad Y) agrees; tests enforce the equality.
inline Rational killing_form(const Mat& X, const Mat& Y) {
  if (!X.is_antisymmetric() || !Y.is_antisymmetric())
    throw std::invalid_argument("killing_form requires antisymmetric arguments");
  if (X.rows() != Y.rows()) throw std::invalid_argument("killing_form size mismatch");
  int N = X.rows();
  if (N < 3) throw std::invalid_argument("killing_form requires N >= 3");
  return Rational(N - 2) * (X * Y).trace();
}

/// Exact coordinates of M in the given basis, or nullopt when M is outside
/// the span. Solves the flattened linear system column-by-column.
inline std::optional<std::vector<Rational>> coordinates_in(const LieBasis& basis,
                                                           const Mat& M) {
  int N = basis.ambient_size;
  int n = basis.dim();
  Mat A(N * N, n);
  std::vector<Rational> b(std::size_t(N) * N);
  for (int t = 0; t < n; ++t)
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) A.at(i * N + j, t) = basis.elements[t].at(i, j);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) b[std::size_t(i) * N + j] = M.at(i, j);
  LinearSolution sol = solve_linear(A, b);
  if (!sol.consistent) return std::nullopt;
  return sol.particular;
}

/// Structure constants c[i][j][t] with [e_i, e_j] = sum_t c[i][j][t] e_t.
/// Throws (naming the offending pair) if any bracket leaves the span; a
/// graded component alone is the canonical example of such a failure.
inline std::vector<std::vector<std::vector<Rational>>> structure_constants(
    const LieBasis& basis) {
  int n = basis.dim();
  std::vector<std::vector<std::vector<Rational>>> c(
      n, std::vector<std::vector<Rational>>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mat br = bracket(basis.elements[i], basis.elements[j]);
      auto coords = coordinates_in(basis, br);
      if (!coords)
        throw std::domain_error("bracket closure violated at pair (" +
                                std::to_string(i) + ", " + std::to_string(j) + ")");
      c[i][j] = std::move(*coords);
    }
  return c;
}

}  // namespace gammasym
