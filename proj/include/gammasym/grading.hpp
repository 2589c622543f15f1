#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gammasym/klein.hpp"
#include "gammasym/linalg.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/rational.hpp"
#include "gammasym/so_algebra.hpp"

namespace gammasym {

// ---------------------------------------------------------------------------
// Involutions
// ---------------------------------------------------------------------------

/// The three commuting-conjugation matrices acting on so(4k). Quaternion-like
/// relations hold: each J is orthogonal, squares to -I, J_a and J_b
/// anticommute, and J_c is defined as the product J_a * J_b (the product is
/// what makes conjugation by J_c equal the composite of the other two;
/// building J_c from a Kronecker pattern of its own would break that).
struct InvolutionSet {
  int rank = 0;
  Mat J_a, J_b, J_c;

  const Mat& j(Klein g) const {
    switch (g) {
      case Klein::a: return J_a;
      case Klein::b: return J_b;
      case Klein::c: return J_c;
      default: throw std::invalid_argument("no involution matrix for label e");
    }
  }
};

/// 2k x 2k block matrix [[0, I_k], [-I_k, 0]].
inline Mat standard_symplectic(int k) {
  Mat s(2 * k, 2 * k);
  for (int i = 0; i < k; ++i) {
    s.at(i, k + i) = 1;
    s.at(k + i, i) = -1;
  }
  return s;
}

inline Mat involution_factor_a() { return Mat::from_rows({{-1, 0}, {0, 1}}); }
inline Mat involution_factor_b() { return Mat::from_rows({{0, 1}, {1, 0}}); }

inline InvolutionSet build_involutions(int k) {
  if (k < 1) throw std::invalid_argument("rank must be a positive integer");
  Mat s = standard_symplectic(k);
  InvolutionSet inv;
  inv.rank = k;
  inv.J_a = kron(involution_factor_a(), s);
  inv.J_b = kron(involution_factor_b(), s);
  inv.J_c = inv.J_a * inv.J_b;
  return inv;
}

namespace detail {

/// Signed-permutation view of a matrix: column j holds sign[j] at row
/// perm[j], zero elsewhere. All well-formed involutions here have this shape,
/// and for them conjugation J^T M J is a pure entry remap, no arithmetic.
struct SignedPerm {
  std::vector<int> perm;
  std::vector<int> sign;
};

inline std::optional<SignedPerm> as_signed_perm(const Mat& J) {
  if (!J.is_square()) return std::nullopt;
  int n = J.rows();
  SignedPerm sp;
  sp.perm.assign(n, -1);
  sp.sign.assign(n, 0);
  std::vector<bool> row_used(n, false);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const Rational& v = J.at(i, j);
      if (v == 0) continue;
      if (sp.perm[j] >= 0 || (v != 1 && v != -1)) return std::nullopt;
      sp.perm[j] = i;
      sp.sign[j] = v > 0 ? 1 : -1;
    }
    if (sp.perm[j] < 0 || row_used[sp.perm[j]]) return std::nullopt;
    row_used[sp.perm[j]] = true;
  }
  return sp;
}

}  // namespace detail

/// Conjugation tau_gamma(M) = J_gamma^{-1} M J_gamma; the identity for e.
/// Signed-permutation J (the constructed case) takes the O(N^2) remap path;
/// anything else falls back to an exact inverse.
inline Mat tau(Klein gamma, const Mat& M, const InvolutionSet& inv) {
  if (gamma == Klein::e) return M;
  const Mat& J = inv.j(gamma);
  if (J.rows() != M.rows() || !M.is_square())
    throw std::invalid_argument("tau: size mismatch");
  if (auto sp = detail::as_signed_perm(J)) {
    // orthogonal, so J^{-1} = J^T and (J^T M J)[i][j] = s_i s_j M[p_i][p_j]
    int n = M.rows();
    Mat r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& v = M.at(sp->perm[i], sp->perm[j]);
        if (v == 0) continue;
        r.at(i, j) = sp->sign[i] * sp->sign[j] > 0 ? v : -v;
      }
    return r;
  }
  auto ji = inverse(J);
  if (!ji) throw std::domain_error("tau: involution matrix is singular");
  return *ji * M * J;
}

/// Character-averaging projector onto the gamma component:
/// P_gamma(M) = (1/4) sum_sigma chi_gamma(sigma) tau_sigma(M).
inline Mat project(Klein gamma, const Mat& M, const InvolutionSet& inv) {
  Mat acc = M;  // sigma = e term; chi is always +1 there
  for (Klein sigma : kNonIdentityLabels) {
    Mat t = tau(sigma, M, inv);
    acc = klein_chi(gamma, sigma) > 0 ? acc + t : acc - t;
  }
  return acc * Rational(1, 4);
}

// ---------------------------------------------------------------------------
// Component block patterns
// ---------------------------------------------------------------------------

/// Every graded component of so(4k) consists of 4x4 grids of k x k blocks,
/// each grid cell carrying one of four block species with a fixed sign.
/// Species index s names the block in the top row: block (0, s). Symmetry of
/// each species (antisymmetric vs symmetric k x k) depends on the component.
struct PatternCell {
  int sign;
  int species;
};

using PatternGrid = std::array<std::array<PatternCell, 4>, 4>;

inline const PatternGrid& component_pattern(Klein g) {
  static const PatternGrid e{{{{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
                              {{{-1, 1}, {1, 0}, {1, 3}, {-1, 2}}},
                              {{{-1, 2}, {-1, 3}, {1, 0}, {1, 1}}},
                              {{{-1, 3}, {1, 2}, {-1, 1}, {1, 0}}}}};
  static const PatternGrid a{{{{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
                              {{{1, 1}, {-1, 0}, {-1, 3}, {1, 2}}},
                              {{{1, 2}, {1, 3}, {-1, 0}, {-1, 1}}},
                              {{{-1, 3}, {1, 2}, {-1, 1}, {1, 0}}}}};
  static const PatternGrid b{{{{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
                              {{{-1, 1}, {1, 0}, {1, 3}, {-1, 2}}},
                              {{{1, 2}, {1, 3}, {-1, 0}, {-1, 1}}},
                              {{{1, 3}, {-1, 2}, {1, 1}, {-1, 0}}}}};
  static const PatternGrid c{{{{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
                              {{{1, 1}, {-1, 0}, {-1, 3}, {1, 2}}},
                              {{{-1, 2}, {-1, 3}, {1, 0}, {1, 1}}},
                              {{{1, 3}, {-1, 2}, {1, 1}, {-1, 0}}}}};
  switch (g) {
    case Klein::e: return e;
    case Klein::a: return a;
    case Klein::b: return b;
    case Klein::c: return c;
  }
  throw std::logic_error("invalid Klein label");
}

/// Which species is built from symmetric k x k blocks, per component.
/// (Exactly one species of g_a, g_b, g_c is symmetric; g_e has three.)
inline const std::array<bool, 4>& species_symmetry(Klein g) {
  static const std::array<bool, 4> e{false, true, true, true};
  static const std::array<bool, 4> a{false, false, false, true};
  static const std::array<bool, 4> b{false, true, false, false};
  static const std::array<bool, 4> c{false, false, true, false};
  switch (g) {
    case Klein::e: return e;
    case Klein::a: return a;
    case Klein::b: return b;
    case Klein::c: return c;
  }
  throw std::logic_error("invalid Klein label");
}

/// The single symmetric species of a non-identity component; its diagonal
/// positions (i, i) are the distinguished coordinates of the metric family.
inline int symmetric_species(Klein g) {
  switch (g) {
    case Klein::a: return 3;
    case Klein::b: return 1;
    case Klein::c: return 2;
    default: throw std::invalid_argument("g_e has three symmetric species");
  }
}

inline const std::array<const char*, 4>& species_names(Klein g) {
  static const std::array<const char*, 4> ge{"P0", "P1", "P2", "P3"};
  static const std::array<const char*, 4> m{"X", "Y", "Z", "T"};
  return g == Klein::e ? ge : m;
}

/// Position of one basis coordinate inside a component: block species plus
/// the generator index pair (i < j antisymmetric, i <= j symmetric).
struct Descriptor {
  int species;
  int i;
  int j;
  bool operator==(const Descriptor&) const = default;
};

/// Builds the component element whose species-s generator is the elementary
/// antisymmetric E_ij - E_ji or symmetric E_ij + E_ji (E_ii when i == j),
/// replicated across the pattern grid with the pattern signs.
inline Mat pattern_element(Klein g, int k, const Descriptor& d) {
  const PatternGrid& grid = component_pattern(g);
  bool sym = species_symmetry(g)[d.species];
  Mat gen(k, k);
  gen.at(d.i, d.j) = 1;
  if (d.i != d.j) gen.at(d.j, d.i) = sym ? 1 : -1;
  Mat out(4 * k, 4 * k);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) {
      const PatternCell& cell = grid[r][c];
      if (cell.species != d.species) continue;
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          const Rational& v = gen.at(i, j);
          if (v == 0) continue;
          out.at(r * k + i, c * k + j) = cell.sign > 0 ? v : -v;
        }
    }
  return out;
}

/// Canonical descriptor order: species 0..3, then index pairs
/// lexicographically (strict pairs for antisymmetric species, weak pairs for
/// symmetric ones). File outputs and Gram layouts inherit this order.
inline std::vector<Descriptor> component_descriptors(Klein g, int k) {
  std::vector<Descriptor> out;
  for (int s = 0; s < 4; ++s) {
    bool sym = species_symmetry(g)[s];
    for (int i = 0; i < k; ++i)
      for (int j = sym ? i : i + 1; j < k; ++j) out.push_back({s, i, j});
  }
  return out;
}

inline int component_dim(Klein g, int k) {
  return g == Klein::e ? k * (2 * k + 1) : k * (2 * k - 1);
}

// ---------------------------------------------------------------------------
// Graded decomposition
// ---------------------------------------------------------------------------

struct GradedDecomposition {
  int rank = 0;
  int ambient = 0;      // 4k
  int block_order = 0;  // r = k, the order of every sub-block
  InvolutionSet involutions;
  std::array<LieBasis, 4> bases;                     // indexed by Klein value
  std::array<std::vector<Descriptor>, 4> descriptors;

  const LieBasis& component(Klein g) const { return bases[int(g)]; }
  const std::vector<Descriptor>& component_descriptors(Klein g) const {
    return descriptors[int(g)];
  }
  int dim(Klein g) const { return bases[int(g)].dim(); }
};

/// Exact coordinates of M with respect to the canonical basis of one
/// component, assuming M lies in that component: each coordinate sits
/// verbatim at the matrix entry its descriptor names (row block 0).
inline std::vector<Rational> component_coordinates(const GradedDecomposition& dec,
                                                   Klein g, const Mat& M) {
  const auto& ds = dec.component_descriptors(g);
  std::vector<Rational> out;
  out.reserve(ds.size());
  for (const Descriptor& d : ds) out.push_back(M.at(d.i, d.species * dec.rank + d.j));
  return out;
}

inline GradedDecomposition graded_basis(int k) {
  if (k < 1) throw std::invalid_argument("rank must be a positive integer");
  GradedDecomposition dec;
  dec.rank = k;
  dec.ambient = 4 * k;
  dec.block_order = k;
  dec.involutions = build_involutions(k);
  for (Klein g : kAllLabels) {
    LieBasis basis;
    basis.ambient_size = 4 * k;
    auto ds = component_descriptors(g, k);
    for (const Descriptor& d : ds) {
      Mat m = pattern_element(g, k, d);
      // each element must be a fixed point of its own projector; this ties
      // the explicit patterns to the character-averaging definition
      if (project(g, m, dec.involutions) != m)
        throw std::logic_error("pattern element escapes its projector");
      basis.labels.push_back(klein_name(g) + ":" + species_names(g)[d.species] +
                             "(" + std::to_string(d.i) + "," + std::to_string(d.j) +
                             ")");
      basis.elements.push_back(std::move(m));
    }
    if (basis.dim() != component_dim(g, k))
      throw std::logic_error("component dimension mismatch");
    dec.bases[int(g)] = std::move(basis);
    dec.descriptors[int(g)] = std::move(ds);
  }
  return dec;
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string residual;  // exact; "0" when clean
  std::string witness;   // what failed, when something did
};

struct Certificate {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  void add(std::string name, bool pass, const Rational& residual,
           std::string witness = "") {
    checks.push_back(
        {std::move(name), pass, format_rational(residual), std::move(witness)});
  }
  void add_flag(std::string name, bool pass, std::string witness = "") {
    checks.push_back({std::move(name), pass, pass ? "0" : "1", std::move(witness)});
  }
};

/// Certifies the grading: involution relations, dimensions, membership
/// characters, within-component coordinates, projector resolution of the
/// identity, and bracket closure [g_x, g_y] inside g_{xy} for every basis
/// pair. All residuals are exact rationals.
inline Certificate verify_grading(const GradedDecomposition& dec) {
  Certificate cert;
  const InvolutionSet& inv = dec.involutions;
  int N = dec.ambient;
  Mat I = Mat::identity(N);

  for (Klein g : kNonIdentityLabels) {
    const Mat& J = inv.j(g);
    cert.add("involution_orthogonal_J" + klein_name(g), J.transpose() * J == I,
             (J.transpose() * J - I).max_abs());
    cert.add("involution_square_J" + klein_name(g), J * J == -I,
             (J * J + I).max_abs());
  }
  cert.add("involution_anticommute", inv.J_a * inv.J_b == -(inv.J_b * inv.J_a),
           (inv.J_a * inv.J_b + inv.J_b * inv.J_a).max_abs());
  cert.add("involution_product", inv.J_c == inv.J_a * inv.J_b,
           (inv.J_c - inv.J_a * inv.J_b).max_abs());

  bool dims_ok = true;
  std::string dims_witness;
  for (Klein g : kAllLabels)
    if (dec.dim(g) != component_dim(g, dec.rank)) {
      dims_ok = false;
      dims_witness = "component " + klein_name(g);
    }
  int total = 0;
  for (Klein g : kAllLabels) total += dec.dim(g);
  if (total != N * (N - 1) / 2) {
    dims_ok = false;
    dims_witness = "total " + std::to_string(total);
  }
  cert.add_flag("dimension_law", dims_ok, dims_witness);

  for (Klein g : kAllLabels) {
    Rational worst = 0;
    std::string witness;
    bool anti_ok = true;
    for (int t = 0; t < dec.dim(g); ++t) {
      const Mat& M = dec.component(g).elements[t];
      if (!M.is_antisymmetric()) {
        anti_ok = false;
        witness = dec.component(g).labels[t];
      }
      // membership: tau_sigma(M) = chi_g(sigma) M for the two generators
      for (Klein sigma : {Klein::a, Klein::b}) {
        Mat want = klein_chi(g, sigma) > 0 ? M : -M;
        Rational r = (tau(sigma, M, inv) - want).max_abs();
        if (r > worst) {
          worst = r;
          witness = dec.component(g).labels[t] + " under tau_" + klein_name(sigma);
        }
      }
    }
    cert.add("character_" + klein_name(g), anti_ok && worst == 0, worst, witness);
  }

  for (Klein g : kAllLabels) {
    bool unit_ok = true;
    std::string witness;
    for (int t = 0; t < dec.dim(g) && unit_ok; ++t) {
      auto coords =
          component_coordinates(dec, g, dec.component(g).elements[t]);
      for (int u = 0; u < int(coords.size()) && unit_ok; ++u)
        if (coords[u] != (u == t ? 1 : 0)) {
          unit_ok = false;
          witness = dec.component(g).labels[t];
        }
    }
    cert.add_flag("unit_coordinates_" + klein_name(g), unit_ok, witness);
  }

  {
    // resolution of the identity on a deterministic batch: all basis
    // elements plus a dense antisymmetric matrix with distinct entries
    Rational worst = 0;
    std::string witness;
    auto check_resolution = [&](const Mat& M, const std::string& name) {
      Mat sum(N, N);
      for (Klein g : kAllLabels) sum = sum + project(g, M, inv);
      Rational r = (sum - M).max_abs();
      if (r > worst) {
        worst = r;
        witness = name;
      }
    };
    Mat dense(N, N);
    int v = 1;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j, ++v) {
        dense.at(i, j) = v;
        dense.at(j, i) = -v;
      }
    check_resolution(dense, "dense");
    for (Klein g : kAllLabels)
      for (int t = 0; t < dec.dim(g); ++t)
        check_resolution(dec.component(g).elements[t],
                         dec.component(g).labels[t]);
    cert.add("projector_resolution", worst == 0, worst, witness);
  }

  for (int gi = 0; gi < 4; ++gi)
    for (int gj = gi; gj < 4; ++gj) {
      Klein g1 = static_cast<Klein>(gi), g2 = static_cast<Klein>(gj);
      Klein target = klein_mul(g1, g2);
      Rational worst = 0;
      std::string witness;
      long pairs = 0;
      for (int t1 = 0; t1 < dec.dim(g1); ++t1) {
        int t2_start = gi == gj ? t1 + 1 : 0;
        for (int t2 = t2_start; t2 < dec.dim(g2); ++t2) {
          Mat br = bracket(dec.component(g1).elements[t1],
                           dec.component(g2).elements[t2]);
          Rational r = (br - project(target, br, inv)).max_abs();
          ++pairs;
          if (r > worst) {
            worst = r;
            witness = dec.component(g1).labels[t1] + " x " +
                      dec.component(g2).labels[t2];
          }
        }
      }
      cert.add("bracket_closure_" + klein_name(g1) + klein_name(g2) + "_into_" +
                   klein_name(target) + "_pairs" + std::to_string(pairs),
               worst == 0, worst, witness);
    }
  return cert;
}

namespace detail {

/// Coordinates of each torus element in the g_e basis, as rows.
inline Mat coordinate_rows(const GradedDecomposition& dec, Klein g,
                           const std::vector<Mat>& elems) {
  int n = dec.dim(g);
  Mat rows(int(elems.size()), n);
  for (int r = 0; r < int(elems.size()); ++r) {
    auto c = component_coordinates(dec, g, elems[r]);
    for (int t = 0; t < n; ++t) rows.at(r, t) = c[t];
  }
  return rows;
}

/// Exact centralizer of a set of elements inside g_e, returned as coordinate
/// vectors over the g_e basis.
inline std::vector<std::vector<Rational>> centralizer_in_fixed(
    const GradedDecomposition& dec, const std::vector<Mat>& elems) {
  const LieBasis& ge = dec.component(Klein::e);
  int n = ge.dim();
  int N = dec.ambient;
  Mat A(int(elems.size()) * N * N, n);
  int row_block = 0;
  for (const Mat& s : elems) {
    for (int t = 0; t < n; ++t) {
      Mat br = bracket(ge.elements[t], s);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
          A.at(row_block + i * N + j, t) = br.at(i, j);
    }
    row_block += N * N;
  }
  return nullspace(std::move(A));
}

}  // namespace detail

/// Certifies that the fixed component is the compact symplectic algebra of
/// rank k: dimension, closure, negative-definite Killing restriction
/// (compactness), joint-commutant characterization, quaternion relations of
/// the involutions, and the rank of a maximal torus. The torus is grown
/// greedily from commuting basis elements, then extended inside its own
/// exact centralizer until self-centralizing — at that point it is a maximal
/// torus and its dimension is the rank.
inline Certificate verify_fixed_algebra(const GradedDecomposition& dec) {
  Certificate cert;
  const LieBasis& ge = dec.component(Klein::e);
  const InvolutionSet& inv = dec.involutions;
  int k = dec.rank;
  int N = dec.ambient;

  cert.add_flag("dimension", ge.dim() == k * (2 * k + 1),
                "dim " + std::to_string(ge.dim()));

  {
    Rational worst = 0;
    std::string witness;
    for (int i = 0; i < ge.dim(); ++i)
      for (int j = i + 1; j < ge.dim(); ++j) {
        Mat br = bracket(ge.elements[i], ge.elements[j]);
        Rational r = (br - project(Klein::e, br, inv)).max_abs();
        if (r > worst) {
          worst = r;
          witness = ge.labels[i] + " x " + ge.labels[j];
        }
      }
    cert.add("bracket_closure", worst == 0, worst, witness);
  }

  {
    Mat gram(ge.dim(), ge.dim());
    for (int i = 0; i < ge.dim(); ++i)
      for (int j = i; j < ge.dim(); ++j) {
        gram.at(i, j) = killing_form(ge.elements[i], ge.elements[j]);
        gram.at(j, i) = gram.at(i, j);
      }
    Inertia in = inertia(gram);
    cert.add_flag("killing_nondegenerate", in.zero == 0,
                  "zero eigenvalues: " + std::to_string(in.zero));
    cert.add_flag("killing_negative_definite",
                  in.negative == ge.dim() && in.positive == 0 && in.zero == 0,
                  "inertia (" + std::to_string(in.positive) + "," +
                      std::to_string(in.negative) + "," + std::to_string(in.zero) +
                      ")");
  }

  {
    Rational worst = 0;
    std::string witness;
    for (int t = 0; t < ge.dim(); ++t)
      for (Klein g : {Klein::a, Klein::b}) {
        Rational r = bracket(ge.elements[t], inv.j(g)).max_abs();
        if (r > worst) {
          worst = r;
          witness = ge.labels[t] + " vs J" + klein_name(g);
        }
      }
    cert.add("commutant_contains_basis", worst == 0, worst, witness);

    // joint commutant of {J_a, J_b} inside so(4k), by exact nullspace
    const LieBasis so = so_basis(N);
    Mat A(2 * N * N, so.dim());
    for (int t = 0; t < so.dim(); ++t) {
      Mat ba = bracket(so.elements[t], inv.J_a);
      Mat bb = bracket(so.elements[t], inv.J_b);
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          A.at(i * N + j, t) = ba.at(i, j);
          A.at(N * N + i * N + j, t) = bb.at(i, j);
        }
    }
    int commutant_dim = int(nullspace(std::move(A)).size());
    cert.add_flag("commutant_dimension", commutant_dim == k * (2 * k + 1),
                  "dim " + std::to_string(commutant_dim));
  }

  {
    Mat I = Mat::identity(N);
    bool quat = inv.J_a * inv.J_a == -I && inv.J_b * inv.J_b == -I &&
                inv.J_c * inv.J_c == -I &&
                inv.J_a * inv.J_b == -(inv.J_b * inv.J_a) &&
                inv.J_c == inv.J_a * inv.J_b &&
                inv.J_a.transpose() * inv.J_a == I &&
                inv.J_b.transpose() * inv.J_b == I;
    cert.add_flag("quaternion_relations", quat);
  }

  {
    // greedy commuting subset of the basis…
    std::vector<Mat> torus;
    std::vector<std::string> names;
    for (int t = 0; t < ge.dim(); ++t) {
      bool commutes = true;
      for (const Mat& s : torus)
        if (!bracket(ge.elements[t], s).is_zero()) {
          commutes = false;
          break;
        }
      if (commutes) {
        torus.push_back(ge.elements[t]);
        names.push_back(ge.labels[t]);
      }
    }
    // …then grow inside the exact centralizer until self-centralizing.
    // Every adjoined element centralizes the current torus by construction,
    // so the set stays abelian; termination: dimension strictly increases.
    for (;;) {
      auto cz = detail::centralizer_in_fixed(dec, torus);
      if (int(cz.size()) == int(torus.size())) break;
      Mat span = detail::coordinate_rows(dec, Klein::e, torus);
      bool grew = false;
      for (const auto& coords : cz) {
        Mat trial(span.rows() + 1, span.cols());
        for (int i = 0; i < span.rows(); ++i)
          for (int j = 0; j < span.cols(); ++j) trial.at(i, j) = span.at(i, j);
        for (int j = 0; j < span.cols(); ++j) trial.at(span.rows(), j) = coords[j];
        if (rank(trial) != span.rows() + 1) continue;
        Mat z(N, N);
        for (int t = 0; t < ge.dim(); ++t)
          if (coords[t] != 0) z = z + coords[t] * ge.elements[t];
        torus.push_back(std::move(z));
        names.push_back("centralizer extension");
        grew = true;
        break;
      }
      if (!grew) break;  // centralizer bigger but not abelian-extendable
    }
    std::string listing;
    for (const auto& n : names) listing += (listing.empty() ? "" : ", ") + n;
    cert.add_flag("torus_rank", int(torus.size()) == k,
                  "rank " + std::to_string(torus.size()) + " via {" + listing + "}");
  }
  return cert;
}

/// Certifies that g_e + g_gamma is a subalgebra and reports its dimension,
/// center dimension and derived-subalgebra dimension (expected 4k^2, 1,
/// 4k^2 - 1: the compact unitary algebra u(2k) with its one-dimensional
/// center split off by the trace).
inline Certificate symmetric_pair_check(const GradedDecomposition& dec, Klein gamma) {
  if (gamma == Klein::e)
    throw std::invalid_argument("symmetric pair needs a non-identity label");
  Certificate cert;
  const InvolutionSet& inv = dec.involutions;
  int k = dec.rank;
  const LieBasis& ge = dec.component(Klein::e);
  const LieBasis& gg = dec.component(gamma);
  int ne = ge.dim(), ng = gg.dim(), n = ne + ng;

  auto elem = [&](int t) -> const Mat& {
    return t < ne ? ge.elements[t] : gg.elements[t - ne];
  };
  auto label_of = [&](int t) { return t < ne ? Klein::e : gamma; };
  auto coords_in_pair = [&](const Mat& M, Klein lab) {
    std::vector<Rational> out(n, Rational(0));
    auto c = component_coordinates(dec, lab, M);
    int off = lab == Klein::e ? 0 : ne;
    for (int t = 0; t < int(c.size()); ++t) out[off + t] = c[t];
    return out;
  };

  cert.add_flag("dimension", n == 4 * k * k, "dim " + std::to_string(n));

  Rational worst = 0;
  std::string witness;
  std::vector<std::vector<Rational>> bracket_coords;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Mat br = bracket(elem(i), elem(j));
      Klein target = klein_mul(label_of(i), label_of(j));
      Rational r = (br - project(target, br, inv)).max_abs();
      if (r > worst) {
        worst = r;
        witness = std::to_string(i) + " x " + std::to_string(j);
      }
      bracket_coords.push_back(coords_in_pair(br, target));
    }
  cert.add("bracket_closure", worst == 0, worst, witness);

  {
    // center: joint kernel of all ad maps, solved in pair coordinates;
    // rows express [x, elem(j)]'s coordinates as linear functions of x's
    Mat sys(n * n, n);
    for (int t = 0; t < n; ++t)
      for (int j = 0; j < n; ++j) {
        Mat br = bracket(elem(t), elem(j));
        auto c = coords_in_pair(br, klein_mul(label_of(t), label_of(j)));
        for (int u = 0; u < n; ++u) sys.at(j * n + u, t) = c[u];
      }
    int center_dim = int(nullspace(std::move(sys)).size());
    cert.add_flag("center_dimension", center_dim == 1,
                  "dim " + std::to_string(center_dim));
  }

  {
    Mat rows(int(bracket_coords.size()), n);
    for (int r = 0; r < int(bracket_coords.size()); ++r)
      for (int t = 0; t < n; ++t) rows.at(r, t) = bracket_coords[r][t];
    int derived_dim = rank(std::move(rows));
    cert.add_flag("derived_dimension", derived_dim == 4 * k * k - 1,
                  "dim " + std::to_string(derived_dim));
  }
  return cert;
}

// ---------------------------------------------------------------------------
// Literal rank-1 fixture
// ---------------------------------------------------------------------------

/// The explicit 4x4 matrices of the three-sphere example, kept verbatim as a
/// guard against convention drift: everything here is rebuilt from these
/// literals, independent of build_involutions.
struct S3Fixture {
  Mat J_a = Mat::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  Mat J_b = Mat::from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
  // fixed-algebra generators: the three-parameter antisymmetric pattern
  Mat a2 = Mat::from_rows({{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  Mat a3 = Mat::from_rows({{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}});
  Mat a4 = Mat::from_rows({{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
  // the three coordinate lines, one per non-identity component
  Mat x_line = Mat::from_rows({{0, 0, 0, 1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}});
  Mat y_line = Mat::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}});
  Mat z_line = Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {-1, 0, 0, 0}, {0, -1, 0, 0}});
};

/// Builds the rank-1 grading from the literal fixture matrices by projecting
/// the so(4) basis, and certifies the printed facts: dimensions (3,1,1,1),
/// the three-parameter fixed-algebra pattern, one line per component, and
/// the grading axioms.
inline Certificate explicit_s3_fixture() {
  Certificate cert;
  S3Fixture fx;
  InvolutionSet inv{1, fx.J_a, fx.J_b, fx.J_a * fx.J_b};

  Mat I = Mat::identity(4);
  cert.add_flag("involution_relations",
                fx.J_a * fx.J_a == -I && fx.J_b * fx.J_b == -I &&
                    fx.J_a * fx.J_b == -(fx.J_b * fx.J_a) &&
                    fx.J_a.transpose() * fx.J_a == I &&
                    fx.J_b.transpose() * fx.J_b == I);

  // components extracted purely by projection of the ambient basis
  LieBasis so4 = so_basis(4);
  std::array<std::vector<Mat>, 4> comp;
  for (Klein g : kAllLabels) {
    std::vector<Mat> images;
    for (const Mat& e : so4.elements) {
      Mat p = project(g, e, inv) * Rational(4);  // scale to integer entries
      if (!p.is_zero()) images.push_back(std::move(p));
    }
    // maximal independent subset, greedy in basis order
    std::vector<Mat> picked;
    Mat rows(0, 16);
    for (const Mat& m : images) {
      Mat trial(int(picked.size()) + 1, 16);
      for (int r = 0; r < int(picked.size()); ++r)
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j) trial.at(r, i * 4 + j) = picked[r].at(i, j);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          trial.at(int(picked.size()), i * 4 + j) = m.at(i, j);
      if (rank(trial) == int(picked.size()) + 1) picked.push_back(m);
    }
    comp[int(g)] = std::move(picked);
  }

  cert.add_flag("dimensions_3_1_1_1",
                comp[0].size() == 3 && comp[1].size() == 1 &&
                    comp[2].size() == 1 && comp[3].size() == 1,
                std::to_string(comp[0].size()) + "," + std::to_string(comp[1].size()) +
                    "," + std::to_string(comp[2].size()) + "," +
                    std::to_string(comp[3].size()));

  // fixed algebra carries the printed three-parameter pattern: every element
  // is a2*M[1][0] + a3*M[2][0] + a4*M[3][0] rebuilt from its own entries
  {
    bool pattern_ok = true;
    for (const Mat& m : comp[0]) {
      Mat rebuilt = m.at(1, 0) * fx.a2 + m.at(2, 0) * fx.a3 + m.at(3, 0) * fx.a4;
      if (rebuilt != m) pattern_ok = false;
    }
    cert.add_flag("fixed_algebra_pattern", pattern_ok);
  }

  // the printed generators and lines land in their components
  auto in_span_of_one = [&](const Mat& line, const Mat& m) {
    // both 1-dimensional candidates: proportionality check
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (line.at(i, j) != 0)
          return m * line.at(i, j) == line * m.at(i, j) && !m.is_zero();
    return false;
  };
  {
    bool span_ok = true;
    for (const Mat& g : {fx.a2, fx.a3, fx.a4})
      if (project(Klein::e, g, inv) != g) span_ok = false;
    cert.add_flag("printed_generators_fixed", span_ok);
  }
  cert.add_flag("x_line_in_a", project(Klein::a, fx.x_line, inv) == fx.x_line &&
                                   in_span_of_one(fx.x_line, comp[1][0]));
  cert.add_flag("y_line_in_b", project(Klein::b, fx.y_line, inv) == fx.y_line &&
                                   in_span_of_one(fx.y_line, comp[2][0]));
  cert.add_flag("z_line_in_c", project(Klein::c, fx.z_line, inv) == fx.z_line &&
                                   in_span_of_one(fx.z_line, comp[3][0]));

  // grading axiom on the extracted components
  {
    Rational worst = 0;
    for (int gi = 0; gi < 4; ++gi)
      for (int gj = gi; gj < 4; ++gj) {
        Klein target = klein_mul(static_cast<Klein>(gi), static_cast<Klein>(gj));
        for (const Mat& x : comp[gi])
          for (const Mat& y : comp[gj]) {
            Mat br = bracket(x, y);
            Rational r = (br - project(target, br, inv)).max_abs();
            if (r > worst) worst = r;
          }
      }
    cert.add("bracket_closure", worst == 0, worst);
  }
  return cert;
}

}  // namespace gammasym
