// Acceptance gate: one criterion per invocation, selected by argv[1].
// Prints analysis lines as it works and finishes with exactly one line of
// the form "[PASS] criterion <id>: ..." or "[FAIL] criterion <id>: ...";
// the exit code mirrors that verdict. Criteria 6, 7 and 8 are implemented
// twice: once as stated (ids "6", "7", "8") and once against the adjudicated
// values this library computes (ids "6_corrected", "7_corrected",
// "8_corrected"); the certified sweeps show the stated six-pair table, the
// stated boundary (k-1)/(2(k+1)) and the stated two-sided Lorentz window to
// be unrealizable, so those three stay red by design and the analysis lines
// show the exact counterexamples.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gammasym/classify.hpp"
#include "gammasym/grading.hpp"
#include "gammasym/json_io.hpp"
#include "gammasym/metrics.hpp"
#include "gammasym/scan.hpp"
#include "support.hpp"

using namespace gammasym;
using test::RatGen;

namespace {

struct Outcome {
  bool pass = false;
  std::string summary;
};

void note(const std::string& line) { std::cout << "  " << line << "\n"; }

// --------------------------------------------------------------------------
// 1. grading certificates, ranks 1..4, with the rank-4 wall-clock budget
// --------------------------------------------------------------------------

Outcome criterion_1() {
  for (int k = 1; k <= 4; ++k) {
    auto start = std::chrono::steady_clock::now();
    GradedDecomposition dec = graded_basis(k);
    Certificate cert = verify_grading(dec);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                start)
                      .count();
    if (!cert.all_pass()) {
      for (const auto& c : cert.checks)
        if (!c.pass) note("failed: " + c.name + " residual " + c.residual);
      return {false, "rank " + std::to_string(k) + " certificate failed"};
    }
    if (dec.dim(Klein::e) != k * (2 * k + 1))
      return {false, "rank " + std::to_string(k) + " fixed-algebra dimension"};
    for (Klein g : kNonIdentityLabels)
      if (dec.dim(g) != k * (2 * k - 1))
        return {false, "rank " + std::to_string(k) + " component dimension"};
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "rank " << k << ": all " << cert.checks.size()
         << " checks pass, zero residuals, " << secs << " s";
    note(line.str());
    if (k == 4 && secs > 60.0)
      return {false, "rank 4 verification exceeded the 60 s budget"};
  }
  return {true, "grading certified with zero residuals at ranks 1..4, "
                "rank 4 within the 60 s budget"};
}

// --------------------------------------------------------------------------
// 2. fixed-algebra certificates, ranks 1..3, plus the literal fixture
// --------------------------------------------------------------------------

Outcome criterion_2() {
  for (int k = 1; k <= 3; ++k) {
    Certificate cert = verify_fixed_algebra(graded_basis(k));
    if (!cert.all_pass()) {
      for (const auto& c : cert.checks)
        if (!c.pass) note("rank " + std::to_string(k) + " failed: " + c.name);
      return {false, "fixed-algebra certificate failed at rank " +
                         std::to_string(k)};
    }
    note("rank " + std::to_string(k) + ": fixed algebra certified (dimension " +
         std::to_string(k * (2 * k + 1)) + ", torus rank " + std::to_string(k) +
         ")");
  }
  Certificate fx = explicit_s3_fixture();
  if (!fx.all_pass()) {
    for (const auto& c : fx.checks)
      if (!c.pass) note("fixture failed: " + c.name);
    return {false, "literal fixture certificate failed"};
  }
  note("literal rank-1 fixture: component dimensions 3,1,1,1 certified");
  return {true, "fixed algebra certified at ranks 1..3 and on the literal "
                "fixture (3,1,1,1)"};
}

// --------------------------------------------------------------------------
// 3. dimension of the invariant form space
// --------------------------------------------------------------------------

Outcome criterion_3() {
  for (int k = 1; k <= 3; ++k) {
    auto space = invariant_form_space(graded_basis(k));
    int want = k == 1 ? 3 : 6;
    note("rank " + std::to_string(k) + ": invariant form space dimension " +
         std::to_string(space.size()));
    if (int(space.size()) != want)
      return {false, "rank " + std::to_string(k) + " dimension " +
                         std::to_string(space.size()) + ", expected " +
                         std::to_string(want)};
  }
  return {true, "invariant form space has dimension 3, 6, 6 at ranks 1, 2, 3"};
}

// --------------------------------------------------------------------------
// 4. exact invariance of the family at random parameters
// --------------------------------------------------------------------------

Outcome criterion_4() {
  for (int k = 1; k <= 3; ++k) {
    GradedDecomposition dec = graded_basis(k);
    RatGen gen(4000 + k);
    for (int t = 0; t < 20; ++t) {
      MetricParams p = gen.next_params();
      ResidualReport rep = invariance_residual(dec, build_form(dec, p));
      if (!rep.holds())
        return {false, "nonzero invariance residual at rank " +
                           std::to_string(k) + ", point " + std::to_string(t) +
                           " (" + rep.witness + ")"};
    }
    note("rank " + std::to_string(k) + ": 20 random points, residual exactly 0");
  }
  return {true, "invariance residual exactly zero at 20 random points per rank"};
}

// --------------------------------------------------------------------------
// 5. spectrum formula against the characteristic-polynomial oracle
// --------------------------------------------------------------------------

Outcome criterion_5() {
  for (int k = 1; k <= 3; ++k) {
    RatGen gen(5000 + k);
    int d = component_dim(Klein::a, k);
    for (int t = 0; t < 200; ++t) {
      MetricParams p = gen.next_params();
      for (Klein g : kMetricComponents) {
        ComponentSpectrum s = component_spectrum(p, g, k);
        if (s.mult1 != d - k || s.mult2 != k - 1 || s.mult3 != 1)
          return {false, "multiplicity law broken at rank " + std::to_string(k)};
        if ((s.mu2 == s.mu3) != (p.of(g).lambda1 == 2 * p.of(g).lambda2))
          return {false, "eigenvalue-collision law broken at rank " +
                             std::to_string(k)};
        SpectrumAudit audit =
            spectrum_oracle(component_gram(g, k, p.of(g)), s);
        if (!audit.ok())
          return {false, "spectrum falsified at rank " + std::to_string(k) +
                             ", point " + std::to_string(t) + ": " + audit.detail};
      }
    }
    note("rank " + std::to_string(k) +
         ": 200 random points, characteristic polynomial factors exactly as "
         "claimed, multiplicities (" +
         std::to_string(d - k) + "," + std::to_string(k - 1) + ",1)");
  }
  return {true, "closed-form spectrum certified at 200 random points per rank, "
                "with the collision exactly at lambda1 = 2 lambda2"};
}

// --------------------------------------------------------------------------
// 6. realized component signature pairs at rank 2
// --------------------------------------------------------------------------

std::set<std::pair<int, int>> realized_pairs_rank2() {
  std::vector<Rational> grid{rat(-2), rat(-1), rat(-1, 2), rat(0),
                             rat(1, 2), rat(1), rat(2)};
  std::set<std::pair<int, int>> seen;
  for (const Rational& l1 : grid)
    for (const Rational& l2 : grid) {
      Inertia in = inertia(component_gram(Klein::a, 2, {l1, l2}));
      if (in.zero == 0) seen.insert({in.positive, in.negative});
    }
  return seen;
}

std::string pairs_to_string(const std::set<std::pair<int, int>>& s) {
  std::string out;
  for (const auto& [p, q] : s)
    out += (out.empty() ? "" : " ") + ("(" + std::to_string(p) + "," +
                                       std::to_string(q) + ")");
  return out;
}

Outcome criterion_6() {
  std::set<std::pair<int, int>> stated{{6, 0}, {5, 1}, {4, 2},
                                       {2, 4}, {1, 5}, {0, 6}};
  std::set<std::pair<int, int>> seen = realized_pairs_rank2();
  note("stated table: " + pairs_to_string(stated));
  note("inertia oracle over the (lambda1, lambda2) grid realizes: " +
       pairs_to_string(seen));
  bool outside = false;
  for (const auto& pr : seen)
    if (!stated.count(pr)) outside = true;
  if (outside) return {false, "a signature outside the stated table occurred"};
  if (seen == stated)
    return {true, "all six stated pairs realized, none outside"};
  std::set<std::pair<int, int>> missing;
  for (const auto& pr : stated)
    if (!seen.count(pr)) missing.insert(pr);
  note("never realized: " + pairs_to_string(missing) +
       " - the d-k eigenvalues at lambda1 and the k-1 at lambda1/2 share "
       "their sign, so no parameter choice separates them");
  return {false, "only " + std::to_string(seen.size()) +
                     " of the stated six pairs are realizable"};
}

Outcome criterion_6_corrected() {
  std::set<std::pair<int, int>> expected{{6, 0}, {5, 1}, {1, 5}, {0, 6}};
  std::set<std::pair<int, int>> seen = realized_pairs_rank2();
  note("inertia oracle realizes: " + pairs_to_string(seen));
  if (seen != expected)
    return {false, "realized set differs from the four-case table"};
  // closed form must agree with the oracle on the same grid, including the
  // degenerate points the set above filtered out
  std::vector<Rational> grid{rat(-2), rat(-1), rat(-1, 2), rat(0),
                             rat(1, 2), rat(1), rat(2)};
  for (const Rational& l1 : grid)
    for (const Rational& l2 : grid) {
      MetricParams p = uniform_params(rat(1), rat(1));
      p.a = {l1, l2};
      ComponentSpectrum s = component_spectrum(p, Klein::a, 2);
      Signature sig = component_signature(s);
      Inertia in = inertia(component_gram(Klein::a, 2, p.a));
      if (!(sig == Signature{in.positive, in.negative, in.zero}))
        return {false, "closed form disagrees with inertia at lambda1 = " +
                           format_rational(l1) + ", lambda2 = " +
                           format_rational(l2)};
    }
  return {true, "exactly the four pairs (6,0) (5,1) (1,5) (0,6) are realized, "
                "closed form matching exact inertia on the whole grid"};
}

// --------------------------------------------------------------------------
// 7. the Riemannian boundary by sweep
// --------------------------------------------------------------------------

Outcome criterion_7() {
  bool all_match = true;
  for (int k = 1; k <= 4; ++k) {
    ThresholdAudit audit = threshold_audit(k);
    Rational stated = Rational(k - 1) / (2 * (k + 1));
    if (!audit.boundary_found || !audit.split_consistent)
      return {false, "sweep found no clean boundary at rank " +
                         std::to_string(k)};
    note("rank " + std::to_string(k) + ": oracle boundary " +
         format_rational(audit.oracle_boundary) + ", stated value " +
         format_rational(stated) +
         (audit.oracle_boundary == stated ? " (match)" : " (MISMATCH)"));
    if (audit.oracle_boundary != stated) all_match = false;
  }
  // the stated reference point: 9/22 must not be the boundary anywhere swept
  ThresholdAudit one = threshold_audit(1);
  for (const auto& c : one.candidates)
    if (c.name == "fraction_m_4k")
      note("9/22 reading (rank 1): value " + format_rational(c.value) +
           ", matches boundary: " + (c.matches_boundary ? "yes" : "no"));
  if (all_match)
    return {true, "oracle boundary sits at (k-1)/(2(k+1)) for ranks 1..4"};
  return {false, "the sweep contradicts (k-1)/(2(k+1)): already at rank 2 the "
                 "inertia oracle degenerates at 1/4, not 1/6"};
}

Outcome criterion_7_corrected() {
  for (int k = 1; k <= 4; ++k) {
    ThresholdAudit audit = threshold_audit(k);
    if (!audit.boundary_found || !audit.split_consistent)
      return {false, "sweep found no clean boundary at rank " +
                         std::to_string(k)};
    if (audit.oracle_boundary != riemannian_threshold(k))
      return {false, "boundary differs from (k-1)/(2k) at rank " +
                         std::to_string(k)};
    bool eig = false;
    for (const auto& c : audit.candidates)
      if (c.name == "eigenvalue_ratio" && c.matches_boundary) eig = true;
    if (!eig)
      return {false, "eigenvalue-ratio candidate missed at rank " +
                         std::to_string(k)};
    note("rank " + std::to_string(k) + ": boundary " +
         format_rational(audit.oracle_boundary) +
         ", Lorentzian below, Riemannian above");
  }
  ThresholdAudit one = threshold_audit(1);
  for (const auto& c : one.candidates)
    if (c.name == "fraction_m_4k" && c.matches_boundary)
      return {false, "9/22 spuriously matched the boundary"};
  return {true, "oracle boundary is (k-1)/(2k) for ranks 1..4, with clean "
                "Lorentzian/Riemannian split and 9/22 ruled out"};
}

// --------------------------------------------------------------------------
// 8. the Lorentz window against 500-point seeded sweeps
// --------------------------------------------------------------------------

Outcome sweep_lorentz(bool stated_window, const char* window_desc) {
  // stated window: lambda1 > 0 and -lambda1/2 < lambda2 < lambda1 (k-1)/(2(k+1));
  // adjudicated window: lambda1 > 0 and lambda2 < lambda1 (k-1)/(2k), no lower
  // bound. "Positive definite" uses the matching upper threshold either way.
  for (int k : {2, 3}) {
    long den = stated_window ? 2 * (k + 1) : 2 * k;
    auto in_window = [&](const ComponentParams& cp) {
      if (sign_of(cp.lambda1) <= 0) return false;
      if (stated_window && !(cp.lambda2 * 2 > -cp.lambda1)) return false;
      return cp.lambda2 * den < cp.lambda1 * (k - 1);
    };
    auto pd = [&](const ComponentParams& cp) {
      return sign_of(cp.lambda1) > 0 && cp.lambda2 * den > cp.lambda1 * (k - 1);
    };
    auto points = seeded_points(8000 + k, 500);
    int mismatches = 0, oracle_breaks = 0, lorentz_count = 0;
    std::string first_witness;
    for (const MetricParams& p : points) {
      ClassificationReport rep = classify(p, k);
      if (!agree(rep, classification_oracle(p, k))) ++oracle_breaks;
      int window_hits = 0;
      bool others_pd = true;
      for (Klein g : kMetricComponents)
        if (in_window(p.of(g)))
          ++window_hits;
        else if (!pd(p.of(g)))
          others_pd = false;
      bool predicted = window_hits == 1 && others_pd;
      bool actual = rep.verdict == Verdict::Lorentzian;
      if (actual) ++lorentz_count;
      if (predicted != actual) {
        ++mismatches;
        if (first_witness.empty())
          first_witness = "lambda_a = (" + format_rational(p.a.lambda1) + ", " +
                          format_rational(p.a.lambda2) + "), lambda_b = (" +
                          format_rational(p.b.lambda1) + ", " +
                          format_rational(p.b.lambda2) + "), lambda_c = (" +
                          format_rational(p.c.lambda1) + ", " +
                          format_rational(p.c.lambda2) + ") is " +
                          (actual ? "Lorentzian outside" : "non-Lorentzian inside") +
                          " the stated window";
      }
    }
    note("rank " + std::to_string(k) + ": 500 seeded points, " +
         std::to_string(lorentz_count) + " Lorentzian, " +
         std::to_string(mismatches) + " window mismatches, " +
         std::to_string(oracle_breaks) + " classify/oracle disagreements (" +
         window_desc + ")");
    if (!first_witness.empty()) note("first mismatch: " + first_witness);
    if (oracle_breaks > 0)
      return {false, "closed form and inertia oracle disagreed"};
    if (mismatches > 0)
      return {false, "the stated window misses the Lorentzian locus at rank " +
                         std::to_string(k)};
  }
  return {true, ""};
}

Outcome criterion_8() {
  Outcome o = sweep_lorentz(true,
                            "window -lambda1/2 < lambda2 < lambda1 (k-1)/(2(k+1))");
  if (o.pass)
    return {true, "Lorentzian occurs exactly on the stated window at ranks 2, 3"};
  note("the true Lorentz locus is the half-line lambda2 < lambda1 (k-1)/(2k) "
       "with lambda1 > 0: no lower bound exists (mu2 = lambda1/2 never turns) "
       "and the upper threshold sits at (k-1)/(2k)");
  return {false, o.summary};
}

Outcome criterion_8_corrected() {
  Outcome o = sweep_lorentz(false,
                            "half-line lambda2 < lambda1 (k-1)/(2k), lambda1 > 0");
  if (!o.pass) return {false, o.summary};
  // spot-check the library predicates against the same law
  RatGen gen(881);
  for (int t = 0; t < 200; ++t) {
    ComponentParams cp{gen.next(), gen.next()};
    for (int k : {2, 3}) {
      bool manual = sign_of(cp.lambda1) > 0 &&
                    cp.lambda2 * 2 * k < cp.lambda1 * (k - 1);
      if (manual != component_lorentz_window(cp, k))
        return {false, "predicate drift at sample " + std::to_string(t)};
    }
  }
  return {true, "Lorentzian occurs exactly when one component is on the "
                "half-line lambda2 < lambda1 (k-1)/(2k) (lambda1 > 0) and the "
                "others are positive definite; zero oracle disagreements"};
}

// --------------------------------------------------------------------------
// 9. natural reductivity locus on the grid, and the Killing ratio law
// --------------------------------------------------------------------------

Outcome criterion_9() {
  GradedDecomposition dec = graded_basis(2);
  NatredSystem sys = natural_reductivity_system(dec);

  std::vector<Rational> values{rat(-2), rat(-1), rat(-1, 2),
                               rat(1, 2), rat(1), rat(2)};
  auto points = grid_points(values);
  note("grid: 6 values per slot, " + std::to_string(points.size()) + " points");

  int members = 0, nondegenerate = 0;
  for (const MetricParams& p : points) {
    if (classify(p, 2).total.zero != 0) continue;  // nondegenerate forms only
    ++nondegenerate;
    bool uniform = p.a.lambda1 == p.b.lambda1 && p.b.lambda1 == p.c.lambda1 &&
                   p.a.lambda2 == p.b.lambda2 && p.b.lambda2 == p.c.lambda2;
    bool on_ray = uniform && p.a.lambda1 == 2 * p.a.lambda2;
    bool member = sys.satisfied_by(p);
    if (member != on_ray) {
      return {false, "grid point off the uniform double ray " +
                         std::string(member ? "satisfies" : "misses") +
                         " the reductivity system"};
    }
    if (member) ++members;
  }
  note(std::to_string(nondegenerate) + " nondegenerate points, " +
       std::to_string(members) + " naturally reductive, all on the uniform "
       "ray lambda1 = 2 lambda2");
  if (members != 4)
    return {false, "expected the 4 grid points of the uniform double ray, got " +
                       std::to_string(members)};

  // tie the linear system to the direct triple-sum evaluation
  for (const MetricParams& p : points)
    if (sys.satisfied_by(p) && !natural_reductivity_check(dec, p).holds())
      return {false, "system and direct evaluation disagree on the locus"};
  RatGen gen(9000);
  for (int t = 0; t < 12; ++t) {
    MetricParams p = gen.next_params();
    if (sys.satisfied_by(p) != natural_reductivity_check(dec, p).holds())
      return {false, "system and direct evaluation disagree off the locus"};
  }
  note("linear system matches the direct triple-sum check on and off the locus");

  // Killing restriction: the ratio law across ranks
  for (int k = 1; k <= 3; ++k) {
    KillingRestrictionReport rep = killing_restriction(graded_basis(k));
    if (!rep.in_family || !rep.ratio_law || !rep.uniform)
      return {false, "Killing restriction violates the ratio law at rank " +
                         std::to_string(k)};
    note("rank " + std::to_string(k) + ": Killing restriction at lambda1 = " +
         format_rational(rep.params.a.lambda1) + ", lambda2 = " +
         format_rational(rep.params.a.lambda2) + " (ratio 2)");
  }
  return {true, "naturally reductive locus on the grid is exactly the uniform "
                "ray lambda1 = 2 lambda2, which carries the Killing metrics"};
}

// --------------------------------------------------------------------------
// 10. symmetric pairs for every non-identity label
// --------------------------------------------------------------------------

Outcome criterion_10() {
  for (int k = 1; k <= 3; ++k) {
    GradedDecomposition dec = graded_basis(k);
    for (Klein g : kNonIdentityLabels) {
      Certificate cert = symmetric_pair_check(dec, g);
      if (!cert.all_pass()) {
        for (const auto& c : cert.checks)
          if (!c.pass)
            note("rank " + std::to_string(k) + " label " + klein_name(g) +
                 " failed: " + c.name + " (" + c.witness + ")");
        return {false, "symmetric pair failed at rank " + std::to_string(k) +
                           ", label " + klein_name(g)};
      }
    }
    note("rank " + std::to_string(k) + ": all three pairs have dimension " +
         std::to_string(4 * k * k) + ", center 1, derived dimension " +
         std::to_string(4 * k * k - 1));
  }
  return {true, "for each label: subalgebra of dimension 4k^2 with center 1 "
                "and derived dimension 4k^2 - 1, ranks 1..3"};
}

// --------------------------------------------------------------------------
// 11. byte-identical CLI reruns
// --------------------------------------------------------------------------

int shell(const std::string& cmd) {
  int rc = std::system(cmd.c_str());
  return rc == -1 ? -1 : WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::stringstream buf;
  buf << f.rdbuf();
  return buf.str();
}

Outcome criterion_11() {
  std::filesystem::create_directories("acceptance_scratch");
  const std::string cli = "\"" GAMMASYM_CLI_PATH "\"";
  struct Job {
    std::string name, args;
    int want_code;
  };
  std::vector<Job> jobs{
      {"grade", "grade --rank 2", 0},
      {"classify", "classify --rank 2 --params 3,-1/2,1,1,2/7,5", 0},
      {"scan", "scan --rank 2 --seed 42 --count 80", 0},
  };
  for (const Job& job : jobs) {
    std::string a = "acceptance_scratch/" + job.name + "_a";
    std::string b = "acceptance_scratch/" + job.name + "_b";
    int ca = shell(cli + " " + job.args + " --out " + a + " 2> /dev/null");
    int cb = shell(cli + " " + job.args + " --out " + b + " 2> /dev/null");
    if (ca != job.want_code || cb != job.want_code)
      return {false, job.name + " exited " + std::to_string(ca) + "/" +
                         std::to_string(cb) + ", expected " +
                         std::to_string(job.want_code)};
    std::string da = slurp(a), db = slurp(b);
    if (da.empty() || da != db)
      return {false, job.name + " reruns differ or produced no output"};
    note(job.name + ": two runs, " + std::to_string(da.size()) +
         " bytes, byte-identical");
  }
  return {true, "grade, classify and scan are byte-identical across reruns"};
}

}  // namespace

int main(int argc, char** argv) {
  std::map<std::string, std::function<Outcome()>> criteria{
      {"1", criterion_1},
      {"2", criterion_2},
      {"3", criterion_3},
      {"4", criterion_4},
      {"5", criterion_5},
      {"6", criterion_6},
      {"6_corrected", criterion_6_corrected},
      {"7", criterion_7},
      {"7_corrected", criterion_7_corrected},
      {"8", criterion_8},
      {"8_corrected", criterion_8_corrected},
      {"9", criterion_9},
      {"10", criterion_10},
      {"11", criterion_11},
  };
  if (argc != 2 || !criteria.count(argv[1])) {
    std::cerr << "usage: acceptance <criterion>, one of:";
    for (const auto& [id, fn] : criteria) std::cerr << " " << id;
    std::cerr << "\n";
    return 2;
  }
  Outcome o;
  try {
    o = criteria[argv[1]]();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << argv[1] << ": "
            << o.summary << "\n";
  return o.pass ? 0 : 1;
}
