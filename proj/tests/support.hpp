#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gammasym/metrics.hpp"
#include "gammasym/so_algebra.hpp"

namespace gammasym::test {

/// Deterministic rational fuzzing: numerators in [-20, 20], denominators in
/// [1, 12].  Every suite that samples parameters goes through this so a
/// failure reproduces from the seed alone.
class RatGen {
 public:
  explicit RatGen(std::uint64_t seed) : eng_(seed) {}

  Rational next() {
    long num = static_cast<long>(eng_() % 41) - 20;
    long den = static_cast<long>(eng_() % 12) + 1;
    return rat(num, den);
  }

  Rational next_nonzero() {
    for (;;) {
      Rational r = next();
      if (r != 0) return r;
    }
  }

  MetricParams next_params() {
    MetricParams p;
    p.a.lambda1 = next();
    p.a.lambda2 = next();
    p.b.lambda1 = next();
    p.b.lambda2 = next();
    p.c.lambda1 = next();
    p.c.lambda2 = next();
    return p;
  }

 private:
  std::mt19937_64 eng_;
};

/// Coordinates of an antisymmetric matrix in the so(N) basis, read off
/// entry-by-entry.  Deliberately avoids the linear solver so it can serve as
/// an independent cross-check of coordinates_in.
inline std::vector<Rational> so_coordinates(const Mat& m) {
  std::vector<Rational> coords;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = i + 1; j < m.cols(); ++j) coords.push_back(m.at(i, j));
  return coords;
}

/// Killing form computed from first principles: trace(ad X . ad Y) in the
/// standard so(N) basis.  Shares no code path with the closed-form trace
/// formula it is used to audit.
inline Rational killing_via_ad(const LieBasis& basis, const Mat& x, const Mat& y) {
  const int dim = basis.dim();
  auto ad = [&](const Mat& z) {
    Mat a(dim, dim);
    for (int t = 0; t < dim; ++t) {
      std::vector<Rational> col = so_coordinates(bracket(z, basis.elements[t]));
      for (int s = 0; s < dim; ++s) a.at(s, t) = col[s];
    }
    return a;
  };
  Mat ax = ad(x);
  Mat ay = ad(y);
  Rational tr = 0;
  for (int s = 0; s < dim; ++s)
    for (int t = 0; t < dim; ++t) tr += ax.at(s, t) * ay.at(t, s);
  return tr;
}

/// Rank of the span of a family of equal-shaped matrices, each flattened to a
/// row.  Used to compare spanned subspaces without picking bases.
inline int span_rank(const std::vector<Mat>& family) {
  if (family.empty()) return 0;
  const int width = family.front().rows() * family.front().cols();
  Mat stacked(static_cast<int>(family.size()), width);
  for (size_t r = 0; r < family.size(); ++r) {
    const std::vector<Rational>& row = family[r].flat();
    for (int c = 0; c < width; ++c) stacked.at(static_cast<int>(r), c) = row[c];
  }
  return rank(stacked);
}

}  // namespace gammasym::test
