#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "gammasym/classify.hpp"
#include "gammasym/grading.hpp"
#include "gammasym/json_io.hpp"
#include "gammasym/metrics.hpp"
#include "gammasym/scan.hpp"

namespace {

using namespace gammasym;

// Exit codes: 0 success, 1 check failure or oracle disagreement, 2 usage or
// I/O or malformed input, 3 degenerate metric (classify only).
constexpr int kOk = 0;
constexpr int kCheckFail = 1;
constexpr int kUsage = 2;
constexpr int kDegenerate = 3;

/// Writes to --out atomically (temp file, then rename), or to standard out
/// when no path was given. Standard out stays machine-readable; diagnostics
/// go to standard error.
int emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return kOk;
  }
  std::string tmp = out_path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      std::cerr << "cannot open " << tmp << " for writing\n";
      return kUsage;
    }
    f << content;
    f.flush();
    if (!f) {
      std::cerr << "write to " << tmp << " failed\n";
      std::remove(tmp.c_str());
      return kUsage;
    }
  }
  if (std::rename(tmp.c_str(), out_path.c_str()) != 0) {
    std::cerr << "cannot rename " << tmp << " to " << out_path << "\n";
    std::remove(tmp.c_str());
    return kUsage;
  }
  return kOk;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, ',')) out.push_back(cur);
  if (!s.empty() && s.back() == ',') out.push_back("");
  return out;
}

std::optional<std::vector<Rational>> parse_rational_list(const std::string& s) {
  std::vector<Rational> out;
  for (const std::string& tok : split_commas(s)) {
    auto r = parse_rational(tok);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  if (out.empty()) return std::nullopt;
  return out;
}

/// Six rationals in slot order lambda1_a, lambda2_a, ..., lambda2_c.
std::optional<MetricParams> parse_params(const std::string& s) {
  auto vals = parse_rational_list(s);
  if (!vals || vals->size() != 6) return std::nullopt;
  return MetricParams{{(*vals)[0], (*vals)[1]},
                      {(*vals)[2], (*vals)[3]},
                      {(*vals)[4], (*vals)[5]}};
}

int report_check_failures(const Certificate& cert) {
  if (cert.all_pass()) return kOk;
  for (const CheckResult& c : cert.checks)
    if (!c.pass)
      std::cerr << "check failed: " << c.name
                << (c.witness.empty() ? "" : " (" + c.witness + ")")
                << ", residual " << c.residual << "\n";
  return kCheckFail;
}

int run_grade(int rank, const std::string& fixture, bool full,
              const std::string& out) {
  if (fixture == "s3") {
    if (rank != 1) {
      std::cerr << "the s3 fixture is the rank-1 example; use --rank 1\n";
      return kUsage;
    }
    Certificate cert = explicit_s3_fixture();
    ordered_json doc;
    doc["document"] = "fixture-certificate";
    doc["fixture"] = "s3";
    doc["checks"] = checks_json(cert);
    doc["all_pass"] = cert.all_pass();
    if (int rc = emit(doc.dump(2) + "\n", out)) return rc;
    return report_check_failures(cert);
  }
  if (!fixture.empty()) {
    std::cerr << "unknown fixture: " << fixture << "\n";
    return kUsage;
  }
  GradedDecomposition dec = graded_basis(rank);
  Certificate cert = verify_grading(dec);
  if (full) {
    auto append = [&](const Certificate& extra, const std::string& prefix) {
      for (CheckResult c : extra.checks) {
        c.name = prefix + c.name;
        cert.checks.push_back(std::move(c));
      }
    };
    append(verify_fixed_algebra(dec), "fixed_algebra/");
    for (Klein g : kMetricComponents)
      append(symmetric_pair_check(dec, g),
             std::string("symmetric_pair_") + klein_name(g) + "/");
  }
  ordered_json doc = grading_certificate_json(dec, cert);
  if (int rc = emit(doc.dump(2) + "\n", out)) return rc;
  return report_check_failures(cert);
}

int run_verify(const std::string& in_path, const std::string& out) {
  std::ifstream f(in_path, std::ios::binary);
  if (!f) {
    std::cerr << "cannot open " << in_path << "\n";
    return kUsage;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  ordered_json doc;
  try {
    doc = ordered_json::parse(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "malformed JSON: " << e.what() << "\n";
    return kUsage;
  }
  std::vector<std::string> problems = verify_certificate_document(doc);
  ordered_json rep;
  rep["document"] = "verification-report";
  rep["ok"] = problems.empty();
  rep["problems"] = problems;
  if (int rc = emit(rep.dump(2) + "\n", out)) return rc;
  for (const std::string& p : problems) std::cerr << p << "\n";
  return problems.empty() ? kOk : kCheckFail;
}

int run_classify(int rank, const std::string& params_str, const std::string& out) {
  auto params = parse_params(params_str);
  if (!params) {
    std::cerr << "--params wants six rationals \"p/q\" separated by commas\n";
    return kUsage;
  }
  ClassificationReport rep = classify(*params, rank);
  ordered_json doc = classification_report_json(rep);
  if (int rc = emit(doc.dump(2) + "\n", out)) return rc;
  return rep.verdict == Verdict::Degenerate ? kDegenerate : kOk;
}

int run_metric(int rank, const std::string& params_str, const std::string& out) {
  auto params = parse_params(params_str);
  if (!params) {
    std::cerr << "--params wants six rationals \"p/q\" separated by commas\n";
    return kUsage;
  }
  GradedDecomposition dec = graded_basis(rank);
  ordered_json doc = metric_report_json(dec, *params);
  if (int rc = emit(doc.dump(2) + "\n", out)) return rc;
  return kOk;
}

int run_table(int rank, const std::string& out) {
  return emit(signature_table_json(rank).dump(2) + "\n", out);
}

int run_scan(int rank, const std::string& grid_str, bool have_seed,
             std::uint64_t seed, int count, bool allow_large,
             const std::string& out) {
  if (rank > 6 && !allow_large) {
    std::cerr << "scan caps rank at 6; pass --allow-large-rank to override\n";
    return kUsage;
  }
  if (grid_str.empty() == !have_seed) {
    std::cerr << "scan wants exactly one of --grid or --seed\n";
    return kUsage;
  }
  std::vector<MetricParams> points;
  if (!grid_str.empty()) {
    auto values = parse_rational_list(grid_str);
    if (!values) {
      std::cerr << "--grid wants rationals \"p/q\" separated by commas\n";
      return kUsage;
    }
    points = grid_points(*values);
  } else {
    if (count < 1) {
      std::cerr << "--count must be positive\n";
      return kUsage;
    }
    points = seeded_points(seed, count);
  }
  ScanResult result = scan_points(rank, points);
  if (int rc = emit(result.csv, out)) return rc;
  if (!result.all_agree) {
    for (const std::string& row : result.disagreements)
      std::cerr << "oracle disagreement: " << row << "\n";
    return kCheckFail;
  }
  return kOk;
}

int run_audit(int rank, const std::string& out) {
  ThresholdAudit audit = threshold_audit(rank);
  ordered_json doc = threshold_audit_json(audit);
  if (int rc = emit(doc.dump(2) + "\n", out)) return rc;
  bool ok = audit.boundary_found && audit.split_consistent &&
            audit.oracle_boundary == riemannian_threshold(rank);
  if (!ok) std::cerr << "threshold audit: oracle boundary is off the formula\n";
  return ok ? kOk : kCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Graded decompositions of so(4k) under a Klein four-group of\n"
      "conjugations, their adapted invariant metrics, and exact signature\n"
      "classification. All arithmetic is rational; outputs are exact."};
  app.require_subcommand(1);

  auto add_rank = [](CLI::App* cmd, int& rank) {
    cmd->add_option("--rank", rank, "block order k (ambient algebra so(4k))")
        ->check(CLI::PositiveNumber);
  };

  int grade_rank = 2;
  std::string grade_fixture, grade_out;
  bool grade_full = false;
  CLI::App* grade = app.add_subcommand(
      "grade", "build the graded decomposition and certify it");
  add_rank(grade, grade_rank);
  grade->add_option("--fixture", grade_fixture,
                    "certify a literal fixture instead (only: s3, rank 1)");
  grade->add_flag("--full", grade_full,
                  "append fixed-algebra and symmetric-pair checks");
  grade->add_option("--out", grade_out, "output path (default: standard out)");

  std::string verify_in, verify_out;
  CLI::App* verify = app.add_subcommand(
      "verify", "re-derive and check a grading certificate document");
  verify->add_option("--in", verify_in, "certificate JSON to verify")->required();
  verify->add_option("--out", verify_out, "output path (default: standard out)");

  int classify_rank = 2;
  std::string classify_params, classify_out;
  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "signature classification of one adapted metric");
  add_rank(classify_cmd, classify_rank);
  classify_cmd
      ->add_option("--params", classify_params,
                   "lambda1_a,lambda2_a,lambda1_b,lambda2_b,lambda1_c,lambda2_c")
      ->required();
  classify_cmd->add_option("--out", classify_out,
                           "output path (default: standard out)");

  int metric_rank = 2;
  std::string metric_params, metric_out;
  CLI::App* metric = app.add_subcommand(
      "metric", "build one adapted metric and report invariance facts");
  add_rank(metric, metric_rank);
  metric
      ->add_option("--params", metric_params,
                   "lambda1_a,lambda2_a,lambda1_b,lambda2_b,lambda1_c,lambda2_c")
      ->required();
  metric->add_option("--out", metric_out, "output path (default: standard out)");

  int table_rank = 2;
  std::string table_out;
  CLI::App* table = app.add_subcommand(
      "table", "realizable component signatures at a rank, with conditions");
  add_rank(table, table_rank);
  table->add_option("--out", table_out, "output path (default: standard out)");

  int scan_rank = 2, scan_count = 500;
  std::string scan_grid, scan_out;
  std::uint64_t scan_seed = 0;
  bool scan_allow_large = false;
  CLI::App* scan = app.add_subcommand(
      "scan", "classify a parameter grid or seeded sample, CSV out");
  add_rank(scan, scan_rank);
  CLI::Option* grid_opt =
      scan->add_option("--grid", scan_grid, "rational values, one per slot sweep");
  scan->add_option("--seed", scan_seed, "sample seed (64-bit)")->excludes(grid_opt);
  scan->add_option("--count", scan_count, "sample size for --seed (default 500)");
  scan->add_flag("--allow-large-rank", scan_allow_large,
                 "lift the rank cap of 6 for scans");
  scan->add_option("--out", scan_out, "output path (default: standard out)");

  int audit_rank = 2;
  std::string audit_out;
  CLI::App* audit = app.add_subcommand(
      "audit", "sweep the Riemannian boundary against the inertia oracle");
  add_rank(audit, audit_rank);
  audit->add_option("--out", audit_out, "output path (default: standard out)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*grade) return run_grade(grade_rank, grade_fixture, grade_full, grade_out);
    if (*verify) return run_verify(verify_in, verify_out);
    if (*classify_cmd)
      return run_classify(classify_rank, classify_params, classify_out);
    if (*metric) return run_metric(metric_rank, metric_params, metric_out);
    if (*table) return run_table(table_rank, table_out);
    if (*scan)
      return run_scan(scan_rank, scan_grid, scan->count("--seed") > 0, scan_seed,
                      scan_count, scan_allow_large, scan_out);
    if (*audit) return run_audit(audit_rank, audit_out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
