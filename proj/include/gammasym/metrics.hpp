#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammasym/grading.hpp"
#include "gammasym/klein.hpp"
#include "gammasym/linalg.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

// ---------------------------------------------------------------------------
// The adapted two-parameter family per component
// ---------------------------------------------------------------------------

struct ComponentParams {
  Rational lambda1;  // weight of every coordinate off the symmetric diagonal
  Rational lambda2;  // weight of the k symmetric-block diagonal coordinates
};

struct MetricParams {
  ComponentParams a, b, c;

  const ComponentParams& of(Klein g) const {
    switch (g) {
      case Klein::a: return a;
      case Klein::b: return b;
      case Klein::c: return c;
      default: throw std::invalid_argument("no metric parameters on g_e");
    }
  }
  ComponentParams& of(Klein g) {
    return const_cast<ComponentParams&>(std::as_const(*this).of(g));
  }
  bool operator==(const MetricParams& o) const {
    return a.lambda1 == o.a.lambda1 && a.lambda2 == o.a.lambda2 &&
           b.lambda1 == o.b.lambda1 && b.lambda2 == o.b.lambda2 &&
           c.lambda1 == o.c.lambda1 && c.lambda2 == o.c.lambda2;
  }
};

inline MetricParams uniform_params(const Rational& l1, const Rational& l2) {
  return {{l1, l2}, {l1, l2}, {l1, l2}};
}

constexpr std::array<Klein, 3> kMetricComponents{Klein::a, Klein::b, Klein::c};

/// Gram matrix of one component in its canonical coordinates: lambda1 on
/// every coordinate except the k symmetric-diagonal ones, lambda2 on those,
/// and lambda2 - lambda1/2 between every two distinct symmetric-diagonal
/// coordinates. The coupling value is forced: the fixed-algebra action mixes
/// the symmetric diagonal internally, and this is the unique off-diagonal
/// weight that kills the mixing residual (solved from the exact invariance
/// system, confirmed by direct evaluation). At k = 1 the component is a
/// single symmetric-diagonal coordinate, so the Gram is just [lambda2].
inline Mat component_gram(Klein g, int k, const ComponentParams& p) {
  auto ds = component_descriptors(g, k);
  int d = int(ds.size());
  int s = symmetric_species(g);
  auto on_diag = [&](const Descriptor& de) { return de.species == s && de.i == de.j; };
  Mat G(d, d);
  Rational cross = p.lambda2 - p.lambda1 / 2;
  for (int i = 0; i < d; ++i) {
    G.at(i, i) = on_diag(ds[i]) ? p.lambda2 : p.lambda1;
    for (int j = i + 1; j < d; ++j)
      if (on_diag(ds[i]) && on_diag(ds[j])) {
        G.at(i, j) = cross;
        G.at(j, i) = cross;
      }
  }
  return G;
}

/// A symmetric bilinear form on m = g_a + g_b + g_c in the canonical
/// coordinates (component blocks concatenated in label order). The family
/// forms are block-diagonal; the full matrix is stored so that corruptions
/// across blocks remain representable and detectable.
struct GramForm {
  int rank = 0;
  int block_dim = 0;  // every component has the same dimension k(2k-1)
  Mat matrix;         // 3 * block_dim square

  int offset(Klein g) const {
    if (g == Klein::e) throw std::invalid_argument("g_e carries no block");
    return (int(g) - 1) * block_dim;
  }
  int total_dim() const { return 3 * block_dim; }

  Mat block(Klein g) const {
    int off = offset(g);
    Mat B(block_dim, block_dim);
    for (int i = 0; i < block_dim; ++i)
      for (int j = 0; j < block_dim; ++j) B.at(i, j) = matrix.at(off + i, off + j);
    return B;
  }
  bool block_diagonal() const {
    for (int i = 0; i < total_dim(); ++i)
      for (int j = 0; j < total_dim(); ++j)
        if (i / block_dim != j / block_dim && matrix.at(i, j) != 0) return false;
    return true;
  }
};

inline GramForm build_form(const GradedDecomposition& dec, const MetricParams& p) {
  GramForm f;
  f.rank = dec.rank;
  f.block_dim = dec.dim(Klein::a);
  f.matrix = Mat(3 * f.block_dim, 3 * f.block_dim);
  for (Klein g : kMetricComponents) {
    Mat B = component_gram(g, dec.rank, p.of(g));
    int off = f.offset(g);
    for (int i = 0; i < f.block_dim; ++i)
      for (int j = 0; j < f.block_dim; ++j) f.matrix.at(off + i, off + j) = B.at(i, j);
  }
  return f;
}

// ---------------------------------------------------------------------------
// Invariance
// ---------------------------------------------------------------------------

struct ResidualReport {
  Rational max_residual = 0;
  std::string witness;
  bool holds() const { return max_residual == 0; }
};

namespace detail {

struct MBasisEntry {
  Klein label;
  int index;  // within its component
};

inline std::vector<MBasisEntry> m_basis_index(const GradedDecomposition& dec) {
  std::vector<MBasisEntry> out;
  for (Klein g : kMetricComponents)
    for (int t = 0; t < dec.dim(g); ++t) out.push_back({g, t});
  return out;
}

/// Matrix of ad(h) restricted to one component, in canonical coordinates:
/// column t holds the coordinates of [h, e_t].
inline Mat ad_on_component(const GradedDecomposition& dec, const Mat& h, Klein g) {
  const LieBasis& basis = dec.component(g);
  int d = basis.dim();
  Mat A(d, d);
  for (int t = 0; t < d; ++t) {
    auto c = component_coordinates(dec, g, bracket(h, basis.elements[t]));
    for (int u = 0; u < d; ++u) A.at(u, t) = c[u];
  }
  return A;
}

/// Pairs a coordinate vector supported on one component block against a
/// single m-basis vector, through the full (possibly non-block) matrix.
inline Rational pair_block_vector(const GramForm& form, Klein g,
                                  const std::vector<Rational>& coords, int m_index) {
  Rational acc = 0;
  int off = form.offset(g);
  for (int u = 0; u < int(coords.size()); ++u)
    if (coords[u] != 0) acc += coords[u] * form.matrix.at(off + u, m_index);
  return acc;
}

}  // namespace detail

/// Largest violation of B([h, x], y) + B(x, [h, y]) = 0 over the fixed-
/// algebra basis h and the m basis x, y, with the worst triple named.
/// Evaluated through the full matrix, so cross-block corruption is caught.
inline ResidualReport invariance_residual(const GradedDecomposition& dec,
                                          const GramForm& form) {
  ResidualReport rep;
  const LieBasis& ge = dec.component(Klein::e);
  auto mb = detail::m_basis_index(dec);
  int n = int(mb.size());
  auto name = [&](const detail::MBasisEntry& e) {
    return dec.component(e.label).labels[e.index];
  };
  for (int hi = 0; hi < ge.dim(); ++hi) {
    // [h, x] stays in x's component; cache its coordinates per x
    std::vector<std::vector<Rational>> adh(n);
    for (int x = 0; x < n; ++x)
      adh[x] = component_coordinates(
          dec, mb[x].label,
          bracket(ge.elements[hi], dec.component(mb[x].label).elements[mb[x].index]));
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        Rational r =
            detail::pair_block_vector(form, mb[x].label, adh[x],
                                      form.offset(mb[y].label) + mb[y].index) +
            detail::pair_block_vector(form, mb[y].label, adh[y],
                                      form.offset(mb[x].label) + mb[x].index);
        if (r < 0) r = -r;
        if (r > rep.max_residual) {
          rep.max_residual = r;
          rep.witness =
              ge.labels[hi] + " on " + name(mb[x]) + ", " + name(mb[y]);
        }
      }
  }
  return rep;
}

/// Basis of the symmetric forms on one component commuting with the
/// fixed-algebra action: the exact nullspace of the commutation constraints
/// over the d(d+1)/2 independent Gram entries.
inline std::vector<Mat> component_invariant_forms(const GradedDecomposition& dec,
                                                  Klein g) {
  const LieBasis& ge = dec.component(Klein::e);
  int d = dec.dim(g);
  int nvars = d * (d + 1) / 2;
  auto idx = [d](int u, int v) {
    if (u > v) std::swap(u, v);
    return u * d - u * (u - 1) / 2 + (v - u);
  };
  Mat sys(ge.dim() * d * d, nvars);
  int row = 0;
  for (int hi = 0; hi < ge.dim(); ++hi) {
    Mat A = detail::ad_on_component(dec, ge.elements[hi], g);
    // (A^T G + G A)[i][j] = sum_t A(t,i) G(t,j) + G(i,t) A(t,j) = 0
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j, ++row)
        for (int t = 0; t < d; ++t) {
          if (A.at(t, i) != 0) sys.at(row, idx(t, j)) += A.at(t, i);
          if (A.at(t, j) != 0) sys.at(row, idx(i, t)) += A.at(t, j);
        }
  }
  std::vector<Mat> out;
  for (const auto& vec : nullspace(std::move(sys))) {
    Mat G(d, d);
    for (int u = 0; u < d; ++u)
      for (int v = u; v < d; ++v) {
        G.at(u, v) = vec[idx(u, v)];
        G.at(v, u) = vec[idx(u, v)];
      }
    out.push_back(std::move(G));
  }
  return out;
}

/// Basis of the full solution space {symmetric, block-diagonal, invariant}
/// on m: the per-component invariant forms, each placed in its own block.
/// Dimension 3 at k = 1 (one weight per line) and 6 for k >= 2 (two weights
/// per component).
inline std::vector<GramForm> invariant_form_space(const GradedDecomposition& dec) {
  std::vector<GramForm> out;
  int d = dec.dim(Klein::a);
  for (Klein g : kMetricComponents)
    for (const Mat& B : component_invariant_forms(dec, g)) {
      GramForm f;
      f.rank = dec.rank;
      f.block_dim = d;
      f.matrix = Mat(3 * d, 3 * d);
      int off = f.offset(g);
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) f.matrix.at(off + i, off + j) = B.at(i, j);
      out.push_back(std::move(f));
    }
  return out;
}

// ---------------------------------------------------------------------------
// Killing restriction
// ---------------------------------------------------------------------------

struct KillingRestrictionReport {
  MetricParams params;      // extracted from the sign-flipped restriction
  GramForm form;            // the sign-flipped restriction itself
  bool in_family = false;   // equals build_form(params) exactly
  bool ratio_law = false;   // lambda1 = 2 lambda2 in every component
  bool uniform = false;     // identical values across components
};

/// Restricts the ambient Killing form to m, sign-flipped to be positive
/// definite, and fits it to the family. The fit lands on the ray
/// lambda1 = 2 lambda2 (which zeroes the symmetric-diagonal coupling) with
/// one common value across components. At k = 1 only lambda2 is observable;
/// lambda1 is reported on the same ray by convention.
inline KillingRestrictionReport killing_restriction(const GradedDecomposition& dec) {
  KillingRestrictionReport rep;
  int k = dec.rank;
  int d = dec.dim(Klein::a);
  rep.form.rank = k;
  rep.form.block_dim = d;
  rep.form.matrix = Mat(3 * d, 3 * d);
  for (Klein g : kMetricComponents) {
    const LieBasis& basis = dec.component(g);
    int off = rep.form.offset(g);
    for (int i = 0; i < d; ++i)
      for (int j = i; j < d; ++j) {
        Rational v = -killing_form(basis.elements[i], basis.elements[j]);
        rep.form.matrix.at(off + i, off + j) = v;
        rep.form.matrix.at(off + j, off + i) = v;
      }
    auto ds = component_descriptors(g, k);
    int s = symmetric_species(g);
    int diag_at = -1, off_at = -1;
    for (int t = 0; t < d; ++t)
      (ds[t].species == s && ds[t].i == ds[t].j ? diag_at : off_at) = t;
    ComponentParams& p = rep.params.of(g);
    p.lambda2 = rep.form.matrix.at(off + diag_at, off + diag_at);
    p.lambda1 = off_at >= 0 ? rep.form.matrix.at(off + off_at, off + off_at)
                            : 2 * p.lambda2;
  }
  rep.in_family = build_form(dec, rep.params).matrix == rep.form.matrix;
  rep.ratio_law = true;
  rep.uniform = true;
  for (Klein g : kMetricComponents) {
    const ComponentParams& p = rep.params.of(g);
    if (p.lambda1 != 2 * p.lambda2) rep.ratio_law = false;
    if (p.lambda1 != rep.params.a.lambda1 || p.lambda2 != rep.params.a.lambda2)
      rep.uniform = false;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Natural reductivity
// ---------------------------------------------------------------------------

namespace detail {

/// Coordinates of the m-part of [x, y] inside its own component (the label
/// product): the whole bracket lies there when the product is non-identity,
/// and the m-part vanishes when the product is e.
struct MBracket {
  Klein label = Klein::e;  // e means zero m-part
  std::vector<Rational> coords;
};

inline MBracket m_bracket(const GradedDecomposition& dec, const MBasisEntry& x,
                          const MBasisEntry& y) {
  MBracket out;
  out.label = klein_mul(x.label, y.label);
  if (out.label == Klein::e) return out;
  Mat br = bracket(dec.component(x.label).elements[x.index],
                   dec.component(y.label).elements[y.index]);
  out.coords = component_coordinates(dec, out.label, br);
  return out;
}

inline std::vector<std::vector<MBracket>> m_bracket_table(
    const GradedDecomposition& dec, const std::vector<MBasisEntry>& mb) {
  int n = int(mb.size());
  std::vector<std::vector<MBracket>> cache(n, std::vector<MBracket>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      cache[i][j] = m_bracket(dec, mb[i], mb[j]);
      cache[j][i].label = cache[i][j].label;
      if (cache[i][j].label != Klein::e) {
        cache[j][i].coords = cache[i][j].coords;
        for (auto& v : cache[j][i].coords) v = -v;
      }
    }
  return cache;
}

}  // namespace detail

/// Checks B([x, y]_m, z) + B(y, [x, z]_m) = 0 over all basis triples of m,
/// where the subscript takes the m-part of the bracket. Reports the largest
/// violation and the worst triple.
inline ResidualReport natural_reductivity_check(const GradedDecomposition& dec,
                                                const GramForm& form) {
  ResidualReport rep;
  auto mb = detail::m_basis_index(dec);
  int n = int(mb.size());
  auto cache = detail::m_bracket_table(dec, mb);
  auto term = [&](const detail::MBracket& v, int z) {
    if (v.label == Klein::e) return Rational(0);
    return detail::pair_block_vector(form, v.label, v.coords,
                                     form.offset(mb[z].label) + mb[z].index);
  };
  auto name = [&](const detail::MBasisEntry& e) {
    return dec.component(e.label).labels[e.index];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (x == y || x == z) continue;  // both terms vanish identically
        Rational r = term(cache[x][y], z) + term(cache[x][z], y);
        if (r < 0) r = -r;
        if (r > rep.max_residual) {
          rep.max_residual = r;
          rep.witness = name(mb[x]) + ", " + name(mb[y]) + ", " + name(mb[z]);
        }
      }
  return rep;
}

inline ResidualReport natural_reductivity_check(const GradedDecomposition& dec,
                                                const MetricParams& p) {
  return natural_reductivity_check(dec, build_form(dec, p));
}

/// The natural-reductivity residuals of the family are linear in the six
/// parameters (lambda1_a, lambda2_a, lambda1_b, lambda2_b, lambda1_c,
/// lambda2_c). This extracts that linear system, reduced to independent
/// rows, plus its exact kernel: the parameter locus where the identity
/// holds. (At k = 2 the kernel is the single ray lambda1 = 2 lambda2
/// uniform across components.)
struct NatredSystem {
  Mat reduced;  // independent residual rows, 6 columns
  std::vector<std::vector<Rational>> kernel;

  bool satisfied_by(const MetricParams& p) const {
    std::array<Rational, 6> v{p.a.lambda1, p.a.lambda2, p.b.lambda1,
                              p.b.lambda2, p.c.lambda1, p.c.lambda2};
    for (int r = 0; r < reduced.rows(); ++r) {
      Rational acc = 0;
      for (int c = 0; c < 6; ++c)
        if (reduced.at(r, c) != 0) acc += reduced.at(r, c) * v[c];
      if (acc != 0) return false;
    }
    return true;
  }
};

inline NatredSystem natural_reductivity_system(const GradedDecomposition& dec) {
  int k = dec.rank;
  // per-component split G = lambda1 * U + lambda2 * V
  std::array<Mat, 3> U, V;
  for (Klein g : kMetricComponents) {
    U[int(g) - 1] = component_gram(g, k, {1, 0});
    V[int(g) - 1] = component_gram(g, k, {0, 1});
  }
  auto mb = detail::m_basis_index(dec);
  int n = int(mb.size());
  auto cache = detail::m_bracket_table(dec, mb);

  // accumulate rows in echelon form; at most 6 survive
  Mat acc(0, 6);
  auto add_row = [&](const std::array<Rational, 6>& row) {
    bool zero = true;
    for (const auto& v : row)
      if (v != 0) zero = false;
    if (zero) return;
    Mat trial(acc.rows() + 1, 6);
    for (int i = 0; i < acc.rows(); ++i)
      for (int j = 0; j < 6; ++j) trial.at(i, j) = acc.at(i, j);
    for (int j = 0; j < 6; ++j) trial.at(acc.rows(), j) = row[j];
    if (rank(Mat(trial)) == acc.rows()) return;  // dependent on what we have
    rref(trial);
    acc = std::move(trial);
  };
  auto accumulate_term = [&](const detail::MBracket& v, const detail::MBasisEntry& z,
                             std::array<Rational, 6>& row) {
    if (v.label != z.label || v.label == Klein::e) return;
    int b = int(v.label) - 1;
    for (int u = 0; u < int(v.coords.size()); ++u)
      if (v.coords[u] != 0) {
        row[2 * b] += v.coords[u] * U[b].at(u, z.index);
        row[2 * b + 1] += v.coords[u] * V[b].at(u, z.index);
      }
  };

  for (int x = 0; x < n && acc.rows() < 6; ++x)
    for (int y = 0; y < n && acc.rows() < 6; ++y)
      for (int z = 0; z < n && acc.rows() < 6; ++z) {
        if (x == y || x == z) continue;
        std::array<Rational, 6> row{};
        accumulate_term(cache[x][y], mb[z], row);
        accumulate_term(cache[x][z], mb[y], row);
        add_row(row);
      }

  NatredSystem sys;
  sys.kernel = nullspace(Mat(acc));
  sys.reduced = std::move(acc);
  return sys;
}

}  // namespace gammasym
