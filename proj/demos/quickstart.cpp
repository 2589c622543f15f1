// Minimal tour: build the graded decomposition at rank 2, certify it, and
// classify a few metrics from the invariant family. Everything is exact;
// nothing here prints a rounded number.

#include <iostream>

#include "gammasym/classify.hpp"
#include "gammasym/grading.hpp"
#include "gammasym/metrics.hpp"

using namespace gammasym;

int main() {
  constexpr int k = 2;
  GradedDecomposition dec = graded_basis(k);

  Certificate cert = verify_grading(dec);
  std::cout << "ambient so(" << dec.ambient << "), components";
  for (Klein g : kAllLabels)
    std::cout << " " << klein_name(g) << ":" << dec.dim(g);
  std::cout << "\ncertificate: " << cert.checks.size() << " checks, "
            << (cert.all_pass() ? "all pass" : "FAILURES") << "\n\n";

  KillingRestrictionReport killing = killing_restriction(dec);
  std::cout << "Killing restriction lands in the family at lambda1 = "
            << format_rational(killing.params.a.lambda1) << ", lambda2 = "
            << format_rational(killing.params.a.lambda2)
            << (killing.ratio_law ? " (ratio 2, naturally reductive)" : "")
            << "\n\n";

  const MetricParams examples[] = {
      uniform_params(rat(1), rat(1)),
      {{rat(1), rat(0)}, {rat(1), rat(1)}, {rat(1), rat(1)}},
      uniform_params(rat(1), rat(-1)),
      {{rat(1), rat(1, 4)}, {rat(1), rat(1)}, {rat(1), rat(1)}},
  };
  for (const MetricParams& p : examples) {
    ClassificationReport rep = classify(p, k);
    std::cout << "lambda_a = (" << format_rational(p.a.lambda1) << ", "
              << format_rational(p.a.lambda2) << "), lambda_b = ("
              << format_rational(p.b.lambda1) << ", "
              << format_rational(p.b.lambda2) << "), lambda_c = ("
              << format_rational(p.c.lambda1) << ", "
              << format_rational(p.c.lambda2) << ")  ->  "
              << verdict_name(rep.verdict, rep.total);
    for (const std::string& flag : rep.boundary_flags)
      std::cout << "  [boundary " << flag << "]";
    std::cout << "\n";
  }

  std::cout << "\nRiemannian exactly when every lambda1 > 0 and every "
            << "lambda2/lambda1 > " << format_rational(riemannian_threshold(k))
            << " (rank " << k << ")\n";
  return cert.all_pass() ? 0 : 1;
}
