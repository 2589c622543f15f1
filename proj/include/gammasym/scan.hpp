#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "gammasym/classify.hpp"
#include "gammasym/metrics.hpp"
#include "gammasym/rational.hpp"

namespace gammasym {

/// All parameter tuples over one value list, in lexicographic slot order
/// (lambda1_a outermost, lambda2_c innermost) — the canonical row order.
inline std::vector<MetricParams> grid_points(const std::vector<Rational>& values) {
  std::vector<MetricParams> out;
  for (const Rational& a1 : values)
    for (const Rational& a2 : values)
      for (const Rational& b1 : values)
        for (const Rational& b2 : values)
          for (const Rational& c1 : values)
            for (const Rational& c2 : values)
              out.push_back({{a1, a2}, {b1, b2}, {c1, c2}});
  return out;
}

/// Seeded sample: raw 64-bit draws mapped to numerators in [-20, 20] and
/// denominators in [1, 12], two draws per slot in slot order. Raw draws
/// keep the byte stream identical across platforms and standard libraries.
inline std::vector<MetricParams> seeded_points(std::uint64_t seed, int count) {
  std::mt19937_64 eng(seed);
  auto draw = [&]() {
    long num = long(eng() % 41) - 20;
    long den = long(eng() % 12) + 1;
    return rat(num, den);
  };
  std::vector<MetricParams> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    MetricParams p;
    p.a.lambda1 = draw();
    p.a.lambda2 = draw();
    p.b.lambda1 = draw();
    p.b.lambda2 = draw();
    p.c.lambda1 = draw();
    p.c.lambda2 = draw();
    out.push_back(std::move(p));
  }
  return out;
}

inline int scan_thread_count(int njobs) {
  int hw = int(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* env = std::getenv("GAMMA_SYM_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1) hw = int(v);
  }
  return hw < njobs ? hw : (njobs < 1 ? 1 : njobs);
}

inline const char* kScanHeader =
    "k,lambda1_a,lambda2_a,lambda1_b,lambda2_b,lambda1_c,lambda2_c,p,q,z,"
    "verdict,oracle";

struct ScanResult {
  std::string csv;  // header plus one row per point, canonical order
  bool all_agree = true;
  std::vector<std::string> disagreements;
};

/// Classifies every point twice (closed form and inertia oracle) and emits
/// one CSV row per point. Rows are computed in parallel but written in
/// input order, so output bytes depend only on the input list.
inline ScanResult scan_points(int k, const std::vector<MetricParams>& points) {
  int n = int(points.size());
  std::vector<std::string> rows(n);
  std::vector<char> agree_flags(n, 1);

  auto work = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i) {
      const MetricParams& p = points[i];
      ClassificationReport rep = classify(p, k);
      OracleReport oracle = classification_oracle(p, k);
      bool ok = agree(rep, oracle);
      agree_flags[i] = ok ? 1 : 0;
      std::string row = std::to_string(k);
      for (const Rational& v :
           {p.a.lambda1, p.a.lambda2, p.b.lambda1, p.b.lambda2, p.c.lambda1,
            p.c.lambda2})
        row += "," + format_rational(v);
      row += "," + std::to_string(rep.total.positive);
      row += "," + std::to_string(rep.total.negative);
      row += "," + std::to_string(rep.total.zero);
      row += "," + verdict_kind(rep.verdict);
      row += ok ? ",ok" : ",disagree";
      rows[i] = std::move(row);
    }
  };

  int nthreads = scan_thread_count(n);
  if (nthreads <= 1) {
    work(0, n);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) {
      int lo = int(std::int64_t(n) * t / nthreads);
      int hi = int(std::int64_t(n) * (t + 1) / nthreads);
      pool.emplace_back(work, lo, hi);
    }
    for (auto& th : pool) th.join();
  }

  ScanResult out;
  out.csv = std::string(kScanHeader) + "\n";
  for (int i = 0; i < n; ++i) {
    out.csv += rows[i];
    out.csv += '\n';
    if (!agree_flags[i]) {
      out.all_agree = false;
      out.disagreements.push_back(rows[i]);
    }
  }
  return out;
}

}  // namespace gammasym
