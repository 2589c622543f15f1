#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "gammasym/klein.hpp"
#include "gammasym/linalg.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/metrics.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

// ---------------------------------------------------------------------------
// Closed-form spectrum
// ---------------------------------------------------------------------------

/// Eigenvalues of one component Gram block. Three values cover every rank:
///   mu1 = lambda1              multiplicity dim - k   (plain coordinates)
///   mu2 = lambda1 / 2          multiplicity k - 1     (traceless diagonal)
///   mu3 = k lambda2 - (k-1) lambda1 / 2, multiplicity 1  (diagonal trace)
/// mu1 and mu2 always share lambda1's sign; only mu3 moves independently.
/// At k = 1 the first two multiplicities vanish and only mu3 = lambda2
/// remains. mu2 = mu3 exactly when lambda1 = 2 lambda2.
struct ComponentSpectrum {
  Klein label = Klein::a;
  Rational mu1, mu2, mu3;
  int mult1 = 0, mult2 = 0, mult3 = 0;
};

inline ComponentSpectrum component_spectrum(const MetricParams& p, Klein label,
                                            int k) {
  const ComponentParams& cp = p.of(label);
  ComponentSpectrum s;
  s.label = label;
  s.mu1 = cp.lambda1;
  s.mu2 = cp.lambda1 / 2;
  s.mu3 = k * cp.lambda2 - Rational(k - 1) * cp.lambda1 / 2;
  int d = component_dim(label, k);
  s.mult1 = d - k;
  s.mult2 = k - 1;
  s.mult3 = 1;
  return s;
}

struct Signature {
  int positive = 0, negative = 0, zero = 0;

  Signature& operator+=(const Signature& o) {
    positive += o.positive;
    negative += o.negative;
    zero += o.zero;
    return *this;
  }
  bool operator==(const Signature&) const = default;
};

inline Signature component_signature(const ComponentSpectrum& s) {
  Signature out;
  auto count = [&](const Rational& mu, int mult) {
    int sg = sign_of(mu);
    (sg > 0 ? out.positive : sg < 0 ? out.negative : out.zero) += mult;
  };
  count(s.mu1, s.mult1);
  count(s.mu2, s.mult2);
  count(s.mu3, s.mult3);
  return out;
}

// ---------------------------------------------------------------------------
// Verdicts
// ---------------------------------------------------------------------------

enum class Verdict { Riemannian, Lorentzian, Pseudo, Degenerate };

inline std::string verdict_kind(Verdict v) {
  switch (v) {
    case Verdict::Riemannian: return "Riemannian";
    case Verdict::Lorentzian: return "Lorentzian";
    case Verdict::Pseudo: return "Pseudo";
    case Verdict::Degenerate: return "Degenerate";
  }
  return "";
}

inline Verdict verdict_of_total(const Signature& t) {
  if (t.zero > 0) return Verdict::Degenerate;
  if (t.negative == 0) return Verdict::Riemannian;
  if (t.negative == 1) return Verdict::Lorentzian;
  return Verdict::Pseudo;
}

/// Verdict string as reported in documents: Pseudo carries its signature.
inline std::string verdict_name(Verdict v, const Signature& t) {
  if (v == Verdict::Pseudo)
    return "Pseudo(" + std::to_string(t.positive) + "," +
           std::to_string(t.negative) + ")";
  return verdict_kind(v);
}

struct ClassificationReport {
  int rank = 0;
  MetricParams params;
  std::array<ComponentSpectrum, 3> spectra;     // order a, b, c
  std::array<Signature, 3> signatures;          // order a, b, c
  Signature total;
  Verdict verdict = Verdict::Degenerate;
  std::vector<std::string> boundary_flags;      // "a:mu3=0" style

  const ComponentSpectrum& spectrum(Klein g) const { return spectra[int(g) - 1]; }
  const Signature& signature(Klein g) const { return signatures[int(g) - 1]; }
};

/// Closed-form classification. The verdict is a function of the total
/// signature alone: Degenerate on any zero eigenvalue, Riemannian when all
/// eigenvalues are positive, Lorentzian at exactly one negative, Pseudo
/// otherwise. Boundary flags name every vanishing eigenvalue.
inline ClassificationReport classify(const MetricParams& p, int k) {
  ClassificationReport rep;
  rep.rank = k;
  rep.params = p;
  for (Klein g : kMetricComponents) {
    ComponentSpectrum s = component_spectrum(p, g, k);
    Signature sig = component_signature(s);
    rep.total += sig;
    auto flag = [&](const Rational& mu, int mult, const char* name) {
      if (mult > 0 && mu == 0)
        rep.boundary_flags.push_back(klein_name(g) + ":" + name + "=0");
    };
    flag(s.mu1, s.mult1, "mu1");
    flag(s.mu2, s.mult2, "mu2");
    flag(s.mu3, s.mult3, "mu3");
    rep.spectra[int(g) - 1] = std::move(s);
    rep.signatures[int(g) - 1] = sig;
  }
  rep.verdict = verdict_of_total(rep.total);
  return rep;
}

/// Brute-force adjudicator: ignores every closed-form threshold, builds the
/// Gram blocks and takes their exact inertia. Same report shape with the
/// spectra left empty (inertia knows counts, not values).
struct OracleReport {
  int rank = 0;
  std::array<Signature, 3> signatures;  // order a, b, c
  Signature total;
  Verdict verdict = Verdict::Degenerate;

  const Signature& signature(Klein g) const { return signatures[int(g) - 1]; }
};

inline OracleReport classification_oracle(const MetricParams& p, int k) {
  OracleReport rep;
  rep.rank = k;
  for (Klein g : kMetricComponents) {
    Inertia in = inertia(component_gram(g, k, p.of(g)));
    Signature sig{in.positive, in.negative, in.zero};
    rep.signatures[int(g) - 1] = sig;
    rep.total += sig;
  }
  rep.verdict = verdict_of_total(rep.total);
  return rep;
}

inline bool agree(const ClassificationReport& c, const OracleReport& o) {
  if (c.verdict != o.verdict || !(c.total == o.total)) return false;
  for (int b = 0; b < 3; ++b)
    if (!(c.signatures[b] == o.signatures[b])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Spectrum oracle
// ---------------------------------------------------------------------------

/// Independent certification of the closed-form spectrum: the component
/// block's characteristic polynomial is computed exactly and divided by
/// (x - mu) once per claimed multiplicity; the certificate holds iff every
/// division is exact and the final quotient is the constant 1. A leftover
/// factor means the formula is falsified; the polynomial is recorded. A
/// floating-point eigensolve cross-checks the values at 1e-9 — disagreement
/// there is a failure of the float path only.
struct SpectrumAudit {
  bool exact_ok = false;
  bool float_ok = false;
  std::string detail;  // the polynomial, when falsified

  bool ok() const { return exact_ok && float_ok; }
};

inline SpectrumAudit spectrum_oracle(const Mat& B, const ComponentSpectrum& claimed) {
  SpectrumAudit audit;
  std::vector<Rational> poly = char_poly(B);

  auto poly_string = [](const std::vector<Rational>& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i)
      s += (i ? ", " : "") + format_rational(p[i]);
    return s + "]";
  };
  std::string original = poly_string(poly);

  bool exact = true;
  auto divide_out = [&](const Rational& mu, int mult) {
    for (int t = 0; t < mult && exact; ++t) {
      auto [quot, rem] = divide_by_root(poly, mu);
      if (rem != 0)
        exact = false;
      else
        poly = std::move(quot);
    }
  };
  divide_out(claimed.mu1, claimed.mult1);
  divide_out(claimed.mu2, claimed.mult2);
  divide_out(claimed.mu3, claimed.mult3);
  if (exact && !(poly.size() == 1 && poly[0] == 1)) exact = false;
  audit.exact_ok = exact;
  if (!exact) audit.detail = "characteristic polynomial " + original;

  // redundant float cross-check
  std::vector<double> expect;
  auto push = [&](const Rational& mu, int mult) {
    for (int t = 0; t < mult; ++t) expect.push_back(mu.get_d());
  };
  push(claimed.mu1, claimed.mult1);
  push(claimed.mu2, claimed.mult2);
  push(claimed.mu3, claimed.mult3);
  std::vector<double> got = jacobi_eigenvalues(B);
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  audit.float_ok = expect.size() == got.size();
  for (size_t i = 0; audit.float_ok && i < got.size(); ++i)
    if (std::abs(expect[i] - got[i]) > 1e-9) audit.float_ok = false;
  return audit;
}

inline SpectrumAudit spectrum_oracle(const GramForm& form, Klein label,
                                     const ComponentSpectrum& claimed) {
  return spectrum_oracle(form.block(label), claimed);
}

// ---------------------------------------------------------------------------
// Thresholds
// ---------------------------------------------------------------------------

/// The sign of mu3 at positive lambda1 flips at lambda2 / lambda1 =
/// (k-1)/(2k); this ratio is the Riemannian/Lorentzian boundary.
inline Rational riemannian_threshold(int k) { return Rational(k - 1) / (2 * k); }

/// A component is positive definite iff lambda1 > 0 (vacuous at k = 1) and
/// lambda2 > lambda1 (k-1)/(2k).
inline bool component_positive_definite(const ComponentParams& p, int k) {
  if (k > 1 && sign_of(p.lambda1) <= 0) return false;
  return p.lambda2 * 2 * k > p.lambda1 * (k - 1);
}

/// A component contributes exactly one negative direction iff lambda1 > 0
/// (vacuous at k = 1) and lambda2 < lambda1 (k-1)/(2k) — a half-line in
/// lambda2 with no lower bound, since mu2 = lambda1/2 never turns.
inline bool component_lorentz_window(const ComponentParams& p, int k) {
  if (k > 1 && sign_of(p.lambda1) <= 0) return false;
  return p.lambda2 * 2 * k < p.lambda1 * (k - 1);
}

struct ThresholdCandidate {
  std::string name;
  Rational value;
  bool matches_boundary = false;
};

struct ThresholdAudit {
  int rank = 0;
  std::vector<ThresholdCandidate> candidates;
  bool boundary_found = false;
  Rational oracle_boundary;  // meaningful iff boundary_found
  bool split_consistent = false;  // Lorentzian below, Riemannian above
};

/// Sweeps lambda2 of one component across a rational grid (lambda1 = 1, the
/// other components held positive definite at (1, 1)) and asks the inertia
/// oracle where Lorentzian turns into Riemannian. Candidates evaluated: the
/// shifted ratio (k-1)/(2(k+1)), the fraction (m^2+m-2)/(2(m^2+m+2)) under
/// the readings m = k, 2k, 4k, and the eigenvalue-derived (k-1)/(2k). The
/// sweep grid contains every candidate and near-misses on both sides, so an
/// exact match is decidable.
inline ThresholdAudit threshold_audit(int k) {
  ThresholdAudit audit;
  audit.rank = k;
  // explicit return type: gmpxx would otherwise deduce an expression template
  // pointing at the dead temporary numerator
  auto fraction = [](long m) -> Rational {
    return Rational(m * m + m - 2) / (2 * (m * m + m + 2));
  };
  audit.candidates.push_back({"shifted_ratio", Rational(k - 1) / (2 * (k + 1))});
  audit.candidates.push_back({"fraction_m_k", fraction(k)});
  audit.candidates.push_back({"fraction_m_2k", fraction(2L * k)});
  audit.candidates.push_back({"fraction_m_4k", fraction(4L * k)});
  audit.candidates.push_back({"eigenvalue_ratio", riemannian_threshold(k)});

  std::vector<Rational> grid{Rational(-1, 2), Rational(0), Rational(1)};
  for (const auto& c : audit.candidates) {
    grid.push_back(c.value - Rational(1, 97));
    grid.push_back(c.value);
    grid.push_back(c.value + Rational(1, 97));
  }
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  std::vector<Verdict> verdicts;
  int degenerate_at = -1;
  bool single_boundary = true;
  for (int i = 0; i < int(grid.size()); ++i) {
    MetricParams p = uniform_params(1, 1);
    p.a.lambda2 = grid[i];
    Verdict v = classification_oracle(p, k).verdict;
    verdicts.push_back(v);
    if (v == Verdict::Degenerate) {
      if (degenerate_at >= 0) single_boundary = false;
      degenerate_at = i;
    }
  }
  if (degenerate_at >= 0 && single_boundary) {
    audit.boundary_found = true;
    audit.oracle_boundary = grid[degenerate_at];
    audit.split_consistent = true;
    for (int i = 0; i < int(grid.size()); ++i) {
      Verdict want = i < degenerate_at    ? Verdict::Lorentzian
                     : i == degenerate_at ? Verdict::Degenerate
                                          : Verdict::Riemannian;
      if (verdicts[i] != want) audit.split_consistent = false;
    }
    for (auto& c : audit.candidates)
      c.matches_boundary = c.value == audit.oracle_boundary;
  }
  return audit;
}

}  // namespace gammasym
