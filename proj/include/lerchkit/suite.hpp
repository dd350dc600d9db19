#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "lerchkit/identities.hpp"
#include "lerchkit/options.hpp"

namespace lerchkit {

enum class Verdict { Pass, Fail, Quarantined, Error };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Quarantined: return "QUARANTINED";
    case Verdict::Error: return "ERROR";
  }
  return "?";
}

struct CaseReport {
  std::string id;
  CaseStatus status = CaseStatus::Active;
  TolClass tol_class = TolClass::Standard;
  double tolerance = 0.0;
  Verdict verdict = Verdict::Error;
  int samples = 0;  // sampled assignments evaluated, golden excluded
  std::optional<double> golden_residual;
  std::optional<double> max_residual;   // over golden + samples
  std::optional<double> mean_residual;  // over golden + samples
  std::string message;                  // diagnostics when something threw
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int samples_per_case = 0;
  EvalOptions options;
  std::vector<CaseReport> cases;
  int passed = 0, failed = 0, quarantined = 0, errored = 0;
  bool ok = false;  // no ACTIVE case failed or errored
};

namespace detail {

inline std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

// Uniform in [0, 1) from the top 53 bits; avoids distribution objects so the
// byte stream of a report depends only on the engine, not the library.
inline double unit_real(std::mt19937_64& g) { return double(g() >> 11) * 0x1.0p-53; }

}  // namespace detail

// Draw an admissible assignment from the case's declared parameter domains.
// Parameters are drawn in declaration order, so the consumed engine stream is
// stable; inadmissible draws are rejected and retried.
inline Assignment sample_assignment(const IdentityCase& c, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Assignment a;
    for (const auto& p : c.params) {
      switch (p.kind) {
        case ParamSpec::Kind::Integer: {
          auto lo = static_cast<long long>(std::llround(p.lo));
          auto hi = static_cast<long long>(std::llround(p.hi));
          auto span = static_cast<std::uint64_t>(hi - lo + 1);
          a[p.name] = complex(double(lo + static_cast<long long>(rng() % span)));
          break;
        }
        case ParamSpec::Kind::Real:
          a[p.name] = complex(p.lo + detail::unit_real(rng) * (p.hi - p.lo));
          break;
        case ParamSpec::Kind::Complex: {
          double re = p.lo + detail::unit_real(rng) * (p.hi - p.lo);
          double im = p.im_lo + detail::unit_real(rng) * (p.im_hi - p.im_lo);
          a[p.name] = complex(re, im);
          break;
        }
      }
    }
    if (!c.admissible || c.admissible(a)) return a;
  }
  throw domain_error("sample_assignment: admissible region too thin for " + c.id);
}

// Run the verification suite over every case matching `filter` ("*" or ""
// for all).  Each case gets its own engine seeded from (seed, id), so the
// sampled points of one case are independent of which other cases run.
// QUARANTINED cases are evaluated and reported but never affect `ok`.
// `force_fail` is a test hook: matching ACTIVE cases are marked FAIL after
// evaluation, for exercising the exit-status contract.
inline SuiteReport run_suite(const std::string& filter, int samples_per_case,
                             std::uint64_t seed, const EvalOptions& opts = {},
                             const std::string& force_fail = "") {
  if (samples_per_case < 1)
    throw std::invalid_argument("run_suite: samples_per_case must be >= 1");
  auto selected = match_cases(filter);
  if (selected.empty()) throw domain_error("run_suite: no case matches pattern: " + filter);

  SuiteReport rep;
  rep.seed = seed;
  rep.samples_per_case = samples_per_case;
  rep.options = opts;

  for (const IdentityCase* pc : selected) {
    const IdentityCase& c = *pc;
    CaseReport cr;
    cr.id = c.id;
    cr.status = c.status;
    cr.tol_class = c.tol_class;
    cr.tolerance = tolerance_of(c.tol_class);

    std::mt19937_64 rng(seed ^ detail::fnv1a64(c.id));
    try {
      double g = identity_residual(c, c.golden, opts);
      double maxr = g, sum = g;
      int count = 1;
      cr.golden_residual = g;
      for (int k = 0; k < samples_per_case; ++k) {
        Assignment a = c.params.empty() ? c.golden : sample_assignment(c, rng);
        double r = identity_residual(c, a, opts);
        ++cr.samples;
        maxr = std::max(maxr, r);
        sum += r;
        ++count;
      }
      cr.max_residual = maxr;
      cr.mean_residual = sum / count;
      bool within = std::isfinite(maxr) && maxr <= cr.tolerance;
      if (c.status == CaseStatus::Quarantined)
        cr.verdict = Verdict::Quarantined;
      else
        cr.verdict = within ? Verdict::Pass : Verdict::Fail;
    } catch (const std::exception& e) {
      cr.message = e.what();
      cr.verdict =
          c.status == CaseStatus::Quarantined ? Verdict::Quarantined : Verdict::Error;
    }

    if (!force_fail.empty() && case_matches(c, force_fail) &&
        c.status == CaseStatus::Active) {
      cr.verdict = Verdict::Fail;
      cr.message = "forced failure (test hook)";
    }

    switch (cr.verdict) {
      case Verdict::Pass: ++rep.passed; break;
      case Verdict::Fail: ++rep.failed; break;
      case Verdict::Quarantined: ++rep.quarantined; break;
      case Verdict::Error: ++rep.errored; break;
    }
    rep.cases.push_back(std::move(cr));
  }
  rep.ok = rep.failed == 0 && rep.errored == 0;
  return rep;
}

// Feature table: the named-constant rows, each scored by its case's golden
// residual under default-quality evaluation.
struct TableRowReport {
  std::string feature;
  std::string case_id;
  std::optional<double> residual;
  Verdict verdict = Verdict::Error;
  std::string message;
};

inline std::vector<TableRowReport> table_report(const EvalOptions& opts = {}) {
  std::vector<TableRowReport> rows;
  for (const TableRow& row : feature_table()) {
    const IdentityCase& c = find_case(row.case_id);
    TableRowReport r;
    r.feature = row.feature;
    r.case_id = c.id;
    try {
      double g = identity_residual(c, c.golden, opts);
      r.residual = g;
      if (c.status == CaseStatus::Quarantined)
        r.verdict = Verdict::Quarantined;
      else
        r.verdict = (std::isfinite(g) && g <= tolerance_of(c.tol_class)) ? Verdict::Pass
                                                                         : Verdict::Fail;
    } catch (const std::exception& e) {
      r.message = e.what();
      r.verdict = c.status == CaseStatus::Quarantined ? Verdict::Quarantined : Verdict::Error;
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lerchkit
