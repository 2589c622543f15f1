#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "gammasym/classify.hpp"
#include "gammasym/grading.hpp"
#include "gammasym/klein.hpp"
#include "gammasym/matrix.hpp"
#include "gammasym/metrics.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

using ordered_json = nlohmann::ordered_json;

/// Numbers in documents are exact: plain JSON integers when they fit,
/// "p/q" strings otherwise. No floats anywhere.
inline ordered_json rational_json(const Rational& r) {
  if (r.get_den() == 1 && mpz_fits_slong_p(r.get_num().get_mpz_t()))
    return ordered_json(r.get_num().get_si());
  return ordered_json(format_rational(r));
}

inline Rational rational_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Rational(long(j.get<long long>()));
  if (j.is_string()) {
    auto r = parse_rational(j.get<std::string>());
    if (r) return *r;
  }
  throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

inline ordered_json matrix_int_json(const Mat& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(rational_json(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Sparse triplet encoding [i, j, value] of the nonzero entries, row-major.
inline ordered_json matrix_triplets_json(const Mat& m) {
  ordered_json out = ordered_json::array();
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0)
        out.push_back(ordered_json::array({i, j, rational_json(m.at(i, j))}));
  return out;
}

inline ordered_json checks_json(const Certificate& cert) {
  ordered_json out = ordered_json::array();
  for (const CheckResult& c : cert.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["residual"] = c.residual;
    if (!c.witness.empty()) entry["witness"] = c.witness;
    out.push_back(std::move(entry));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grading certificate
// ---------------------------------------------------------------------------

inline ordered_json grading_certificate_json(const GradedDecomposition& dec,
                                             const Certificate& cert) {
  ordered_json doc;
  doc["document"] = "grading-certificate";
  doc["rank"] = dec.rank;
  doc["ambient_dimension"] = dec.ambient;
  doc["block_order"] = dec.block_order;
  ordered_json dims;
  for (Klein g : kAllLabels) dims[klein_name(g)] = dec.dim(g);
  doc["dims"] = std::move(dims);
  ordered_json inv;
  for (Klein g : kNonIdentityLabels)
    inv[klein_name(g)] = matrix_int_json(dec.involutions.j(g));
  doc["involutions"] = std::move(inv);
  ordered_json comps;
  for (Klein g : kAllLabels) {
    ordered_json list = ordered_json::array();
    for (int t = 0; t < dec.dim(g); ++t) {
      ordered_json e;
      e["label"] = dec.component(g).labels[t];
      e["triplets"] = matrix_triplets_json(dec.component(g).elements[t]);
      list.push_back(std::move(e));
    }
    comps[klein_name(g)] = std::move(list);
  }
  doc["components"] = std::move(comps);
  doc["checks"] = checks_json(cert);
  doc["all_pass"] = cert.all_pass();
  return doc;
}

/// Re-derives the decomposition at the certificate's rank and compares the
/// document against it field by field, then re-runs the full check list.
/// Returns human-readable mismatch lines; empty means the certificate is
/// genuine and every check passes.
inline std::vector<std::string> verify_certificate_document(const ordered_json& doc) {
  std::vector<std::string> problems;
  if (!doc.contains("rank") || !doc["rank"].is_number_integer()) {
    problems.push_back("missing integer field: rank");
    return problems;
  }
  int k = doc["rank"].get<int>();
  if (k < 1) {
    problems.push_back("rank must be a positive integer");
    return problems;
  }
  GradedDecomposition dec = graded_basis(k);
  if (!doc.contains("ambient_dimension") ||
      doc["ambient_dimension"].get<int>() != dec.ambient)
    problems.push_back("ambient_dimension does not match 4k");
  if (!doc.contains("block_order") || doc["block_order"].get<int>() != dec.block_order)
    problems.push_back("block_order does not match k");
  for (Klein g : kAllLabels) {
    std::string name = klein_name(g);
    if (!doc.contains("dims") || !doc["dims"].contains(name) ||
        doc["dims"][name].get<int>() != dec.dim(g))
      problems.push_back("dims." + name + " mismatch");
  }
  for (Klein g : kNonIdentityLabels) {
    std::string name = klein_name(g);
    if (!doc.contains("involutions") || !doc["involutions"].contains(name)) {
      problems.push_back("involutions." + name + " missing");
      continue;
    }
    if (doc["involutions"][name] != matrix_int_json(dec.involutions.j(g)))
      problems.push_back("involutions." + name + " differs from construction");
  }
  for (Klein g : kAllLabels) {
    std::string name = klein_name(g);
    if (!doc.contains("components") || !doc["components"].contains(name)) {
      problems.push_back("components." + name + " missing");
      continue;
    }
    const auto& list = doc["components"][name];
    if (int(list.size()) != dec.dim(g)) {
      problems.push_back("components." + name + " has wrong cardinality");
      continue;
    }
    for (int t = 0; t < dec.dim(g); ++t)
      if (list[t]["triplets"] != matrix_triplets_json(dec.component(g).elements[t]))
        problems.push_back("components." + name + "[" + std::to_string(t) +
                           "] differs from construction");
  }
  Certificate fresh = verify_grading(dec);
  for (const CheckResult& c : fresh.checks)
    if (!c.pass) problems.push_back("fresh check failed: " + c.name);
  if (doc.contains("checks"))
    for (const auto& c : doc["checks"])
      if (c.contains("pass") && !c["pass"].get<bool>())
        problems.push_back("stored check failed: " +
                           c.value("name", std::string("?")));
  return problems;
}

// ---------------------------------------------------------------------------
// Metric report
// ---------------------------------------------------------------------------

inline ordered_json params_json(const MetricParams& p) {
  ordered_json out;
  for (Klein g : kMetricComponents) {
    ordered_json e;
    e["lambda1"] = rational_json(p.of(g).lambda1);
    e["lambda2"] = rational_json(p.of(g).lambda2);
    out[klein_name(g)] = std::move(e);
  }
  return out;
}

inline ordered_json metric_report_json(const GradedDecomposition& dec,
                                       const MetricParams& p) {
  GramForm form = build_form(dec, p);
  ResidualReport inv = invariance_residual(dec, form);
  ResidualReport nat = natural_reductivity_check(dec, form);
  ordered_json doc;
  doc["document"] = "metric-report";
  doc["rank"] = dec.rank;
  doc["params"] = params_json(p);
  doc["lambda1_unused"] = dec.rank == 1;
  doc["gram"] = matrix_triplets_json(form.matrix);
  ordered_json invariance;
  invariance["pass"] = inv.holds();
  invariance["max_residual"] = format_rational(inv.max_residual);
  if (!inv.witness.empty()) invariance["witness"] = inv.witness;
  doc["invariance"] = std::move(invariance);
  ordered_json natred;
  natred["pass"] = nat.holds();
  natred["max_residual"] = format_rational(nat.max_residual);
  if (!nat.witness.empty()) natred["witness"] = nat.witness;
  doc["naturally_reductive"] = std::move(natred);
  return doc;
}

// ---------------------------------------------------------------------------
// Classification report
// ---------------------------------------------------------------------------

inline ordered_json signature_json(const Signature& s) {
  ordered_json out;
  out["p"] = s.positive;
  out["q"] = s.negative;
  out["z"] = s.zero;
  return out;
}

inline ordered_json classification_report_json(const ClassificationReport& rep) {
  ordered_json doc;
  doc["document"] = "classification-report";
  doc["rank"] = rep.rank;
  doc["params"] = params_json(rep.params);
  ordered_json comps = ordered_json::array();
  for (Klein g : kMetricComponents) {
    const ComponentSpectrum& s = rep.spectrum(g);
    ordered_json e;
    e["label"] = klein_name(g);
    e["mu"] = ordered_json::array(
        {rational_json(s.mu1), rational_json(s.mu2), rational_json(s.mu3)});
    e["mults"] = ordered_json::array({s.mult1, s.mult2, s.mult3});
    e["signature"] = signature_json(rep.signature(g));
    comps.push_back(std::move(e));
  }
  doc["per_component"] = std::move(comps);
  doc["total_signature"] = signature_json(rep.total);
  doc["verdict"] = verdict_name(rep.verdict, rep.total);
  doc["boundary_flags"] = rep.boundary_flags;
  return doc;
}

// ---------------------------------------------------------------------------
// Signature table and threshold audit
// ---------------------------------------------------------------------------

/// The realizable open-region component signatures at the given rank, with
/// their defining inequalities. The first two eigenvalues share lambda1's
/// sign, so exactly four cases occur for k >= 2 and two for k = 1.
inline ordered_json signature_table_json(int k) {
  int d = component_dim(Klein::a, k);
  ordered_json doc;
  doc["document"] = "signature-table";
  doc["rank"] = k;
  doc["component_dimension"] = d;
  doc["riemannian_threshold"] = rational_json(riemannian_threshold(k));
  ordered_json cases = ordered_json::array();
  auto add_case = [&](int p, int q, const std::string& when) {
    ordered_json e;
    e["signature"] = ordered_json::array({p, q});
    e["when"] = when;
    cases.push_back(std::move(e));
  };
  std::string ratio = "2*" + std::to_string(k) + "*lambda2 vs " +
                      std::to_string(k - 1) + "*lambda1";
  if (k == 1) {
    add_case(1, 0, "lambda2 > 0");
    add_case(0, 1, "lambda2 < 0");
  } else {
    add_case(d, 0, "lambda1 > 0 and " + ratio + ": greater");
    add_case(d - 1, 1, "lambda1 > 0 and " + ratio + ": less");
    add_case(1, d - 1, "lambda1 < 0 and " + ratio + ": greater");
    add_case(0, d, "lambda1 < 0 and " + ratio + ": less");
  }
  doc["component_cases"] = std::move(cases);
  return doc;
}

inline ordered_json threshold_audit_json(const ThresholdAudit& audit) {
  ordered_json doc;
  doc["document"] = "threshold-audit";
  doc["rank"] = audit.rank;
  ordered_json cands = ordered_json::array();
  for (const ThresholdCandidate& c : audit.candidates) {
    ordered_json e;
    e["name"] = c.name;
    e["value"] = rational_json(c.value);
    e["matches_boundary"] = c.matches_boundary;
    cands.push_back(std::move(e));
  }
  doc["candidates"] = std::move(cands);
  doc["boundary_found"] = audit.boundary_found;
  if (audit.boundary_found)
    doc["oracle_boundary"] = rational_json(audit.oracle_boundary);
  doc["split_consistent"] = audit.split_consistent;
  return doc;
}

}  // namespace gammasym
