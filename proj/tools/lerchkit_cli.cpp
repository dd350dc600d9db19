// lerchkit command line: evaluate the library's special functions, run the
// identity verification suite, and render the summary table.
//
// Exit codes: 0 success; 1 evaluation error or suite failure; 2 usage or
// parse error (including unknown case patterns); 3 report I/O failure.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <system_error>

#include <CLI11.hpp>

#include "lerchkit/lerchkit.hpp"

namespace {

using lerchkit::complex;

// --- complex literals ------------------------------------------------------
//
// Grammar: "re", "imi", "re+imi", "re-imi", with "i"/"-i" accepted for a
// unit imaginary part.  No whitespace, no NaN/Inf.  Everything cmd_eval
// prints reparses under this grammar to the identical double pair.

bool read_double(const char*& p, const char* end, double& out) {
  if (p >= end) return false;
  double sign = 1.0;
  const char* q = p;
  if (*q == '+' || *q == '-') {
    sign = (*q == '-') ? -1.0 : 1.0;
    ++q;
  }
  double val = 0.0;
  auto [ptr, ec] = std::from_chars(q, end, val);
  if (ec != std::errc() || ptr == q) return false;
  p = ptr;
  out = sign * val;
  return true;
}

std::optional<complex> parse_complex(const std::string& text) {
  const char* p = text.data();
  const char* end = p + text.size();
  if (p == end) return std::nullopt;

  auto unit_imag = [&](const char* q) -> std::optional<double> {
    if (q + 1 == end && *q == 'i') return 1.0;
    if (q + 2 == end && (*q == '+' || *q == '-') && q[1] == 'i') return *q == '-' ? -1.0 : 1.0;
    return std::nullopt;
  };
  if (auto im = unit_imag(p)) return complex(0.0, *im);

  double first = 0.0;
  if (!read_double(p, end, first)) return std::nullopt;
  if (!std::isfinite(first)) return std::nullopt;
  if (p == end) return complex(first, 0.0);
  if (p + 1 == end && *p == 'i') return complex(0.0, first);

  if (*p != '+' && *p != '-') return std::nullopt;
  double second = 0.0;
  if (p + 2 == end && p[1] == 'i') {
    second = (*p == '-') ? -1.0 : 1.0;
    p += 2;
  } else {
    if (!read_double(p, end, second)) return std::nullopt;
    if (p == end || *p != 'i') return std::nullopt;
    ++p;
  }
  if (p != end || !std::isfinite(second)) return std::nullopt;
  return complex(first, second);
}

// --- printing --------------------------------------------------------------

std::string fmt_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);  // shortest round-trip
  std::string s(buf, ptr);
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

std::string fmt_complex(complex w) {
  std::string s = fmt_double(w.real());
  if (w.imag() != 0.0) {
    s += (w.imag() < 0.0) ? '-' : '+';
    s += fmt_double(std::abs(w.imag()));
    s += 'i';
  }
  return s;
}

std::string fmt_err(double e) {
  if (!(e >= 1e-14)) return "<1e-14";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", e);
  return buf;
}

void print_eval(complex value, double err, const char* label) {
  std::printf("%s (±%s) [%s]\n", fmt_complex(value).c_str(), fmt_err(err).c_str(), label);
}

// --- shared option state ----------------------------------------------------

struct EvalArgs {
  std::string function;
  std::string z, s, v, a;
  int order = -1;
  double abs_tol = -1.0, rel_tol = -1.0;
};

struct SuiteArgs {
  bool all = false;
  std::string filter;
  int samples = 25;
  std::optional<std::uint64_t> seed;
  std::string format = "text";
  std::string out;
  std::string force_fail;
  double abs_tol = -1.0, rel_tol = -1.0;
};

lerchkit::EvalOptions make_options(double abs_tol, double rel_tol) {
  lerchkit::EvalOptions opts;
  if (abs_tol > 0.0) opts.abs_tol = abs_tol;
  if (rel_tol > 0.0) opts.rel_tol = rel_tol;
  return opts;
}

std::uint64_t default_seed() {
  const char* env = std::getenv("LERCHKIT_SEED");
  if (env != nullptr && *env != '\0') {
    std::uint64_t value = 0;
    const char* end = env + std::string_view(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end) return value;
    std::fprintf(stderr, "warning: ignoring non-numeric LERCHKIT_SEED '%s'\n", env);
  }
  return 42;
}

// Required-argument accessor: missing or malformed values are usage errors.
struct UsageError {
  std::string message;
};

complex need_complex(const std::string& text, const char* flag) {
  if (text.empty()) throw UsageError{std::string("missing required option ") + flag};
  auto w = parse_complex(text);
  if (!w)
    throw UsageError{std::string("cannot parse ") + flag + " value '" + text +
                     "' as a complex literal re[+imi]"};
  return *w;
}

int need_order(int order, int lo, int hi) {
  if (order < lo || order > hi)
    throw UsageError{"--order must be between " + std::to_string(lo) + " and " +
                     std::to_string(hi)};
  return order;
}

// --- subcommands -------------------------------------------------------------

int cmd_eval(const EvalArgs& args) {
  lerchkit::EvalOptions opts = make_options(args.abs_tol, args.rel_tol);
  try {
    if (args.function == "phi") {
      complex z = need_complex(args.z, "--z");
      complex s = need_complex(args.s, "--s");
      complex v = need_complex(args.v, "--v");
      lerchkit::LerchResult r = lerchkit::phi(z, s, v, opts);
      print_eval(r.value, r.err_estimate, to_string(r.strategy));
    } else if (args.function == "phi-deriv") {
      complex z = need_complex(args.z, "--z");
      complex s = need_complex(args.s, "--s");
      complex v = need_complex(args.v, "--v");
      int order = need_order(args.order, 1, 2);
      lerchkit::LerchResult r = lerchkit::phi_sderiv(z, s, v, order, opts);
      print_eval(r.value, r.err_estimate, to_string(r.strategy));
    } else if (args.function == "hurwitz") {
      complex s = need_complex(args.s, "--s");
      complex a = need_complex(args.a, "--a");
      complex value = lerchkit::hurwitz_zeta(s, a, opts);
      print_eval(value, opts.tolerance_for(std::abs(value)), "EulerMaclaurin");
    } else if (args.function == "polylog") {
      complex s = need_complex(args.s, "--s");
      complex z = need_complex(args.z, "--z");
      // Li_s(z) = z Phi(z, s, 1), evaluated through phi to surface the
      // strategy and error of the underlying Lerch call.
      lerchkit::LerchResult r = lerchkit::phi(z, s, complex(1.0), opts);
      complex value = z * r.value;
      print_eval(value, std::abs(z) * r.err_estimate + 4e-16 * std::abs(value),
                 to_string(r.strategy));
    } else if (args.function == "digamma") {
      complex a = need_complex(args.a, "--a");
      complex value = lerchkit::digamma(a);
      print_eval(value, 1e-14 * std::max(1.0, std::abs(value)), "Asymptotic");
    } else if (args.function == "gamma") {
      complex a = need_complex(args.a, "--a");
      complex value = lerchkit::gamma(a);
      print_eval(value, 1e-13 * std::max(1.0, std::abs(value)), "Lanczos");
    } else if (args.function == "stieltjes") {
      complex a = args.a.empty() ? complex(1.0) : need_complex(args.a, "--a");
      int order = need_order(args.order, 0, 2);
      lerchkit::StieltjesValue r = lerchkit::stieltjes_value(order, a, opts);
      print_eval(r.value, r.err_estimate, "CauchyContour");
    } else {
      throw UsageError{"unknown function '" + args.function +
                       "' (expected phi | phi-deriv | hurwitz | polylog | digamma | gamma | "
                       "stieltjes)"};
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "error: %s\n", e.message.c_str());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "evaluation error: %s\n", e.what());
    return 1;
  }
  return 0;
}

// Writes `body` to `path`, or stdout when path is empty.  I/O failure -> 3.
int emit(const std::string& body, const std::string& path) {
  if (path.empty()) {
    std::fputs(body.c_str(), stdout);
    return 0;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", path.c_str());
    return 3;
  }
  out << body;
  out.flush();
  if (!out) {
    std::fprintf(stderr, "error: failed writing report to '%s'\n", path.c_str());
    return 3;
  }
  return 0;
}

int cmd_verify(const SuiteArgs& args) {
  if (args.all == !args.filter.empty()) {
    // Either both given or neither: require exactly one way of selecting.
    std::fprintf(stderr, "error: pass exactly one of --all or --filter <pattern>\n");
    return 2;
  }
  if (args.format != "text" && args.format != "json" && args.format != "csv") {
    std::fprintf(stderr, "error: unknown format '%s' (expected text | json | csv)\n",
                 args.format.c_str());
    return 2;
  }
  const std::string filter = args.all ? std::string("*") : args.filter;
  lerchkit::EvalOptions opts = make_options(args.abs_tol, args.rel_tol);
  lerchkit::SuiteReport rep;
  try {
    rep = lerchkit::run_suite(filter, args.samples, args.seed.value_or(default_seed()), opts,
                              args.force_fail);
  } catch (const lerchkit::domain_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;  // unknown case pattern
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  std::string body;
  if (args.format == "json")
    body = lerchkit::format_report_json(rep);
  else if (args.format == "csv")
    body = lerchkit::format_report_csv(rep);
  else
    body = lerchkit::format_report_text(rep);
  if (int rc = emit(body, args.out); rc != 0) return rc;
  return rep.ok ? 0 : 1;
}

int cmd_table(const SuiteArgs& args) {
  if (args.format != "text" && args.format != "json" && args.format != "csv") {
    std::fprintf(stderr, "error: unknown format '%s' (expected text | json | csv)\n",
                 args.format.c_str());
    return 2;
  }
  lerchkit::EvalOptions opts = make_options(args.abs_tol, args.rel_tol);
  std::vector<lerchkit::TableRowReport> rows;
  try {
    rows = lerchkit::table_report(opts);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }

  std::string body;
  if (args.format == "json")
    body = lerchkit::format_table_json(rows);
  else if (args.format == "csv")
    body = lerchkit::format_table_csv(rows);
  else
    body = lerchkit::format_table_text(rows);
  if (int rc = emit(body, args.out); rc != 0) return rc;

  for (const auto& row : rows)
    if (row.verdict == lerchkit::Verdict::Fail || row.verdict == lerchkit::Verdict::Error)
      return 1;
  return 0;
}

int cmd_cases() {
  for (const lerchkit::IdentityCase& c : lerchkit::identity_registry()) {
    std::printf("%-40s %-11s %-8s %s\n", c.id.c_str(),
                c.status == lerchkit::CaseStatus::Quarantined ? "QUARANTINED" : "ACTIVE",
                to_string(c.tol_class), c.description.c_str());
    if (!c.quarantine_note.empty()) std::printf("%-40s   note: %s\n", "", c.quarantine_note.c_str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lerch transcendent toolkit: evaluation, identity verification, summary table"};
  app.require_subcommand(1);

  EvalArgs eval_args;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a special function at a point");
  eval->add_option("function", eval_args.function,
                   "phi | phi-deriv | hurwitz | polylog | digamma | gamma | stieltjes")
      ->required();
  eval->add_option("--z", eval_args.z, "argument z, complex literal re[+imi]");
  eval->add_option("--s", eval_args.s, "exponent s, complex literal re[+imi]");
  eval->add_option("--v", eval_args.v, "offset v, complex literal re[+imi]");
  eval->add_option("--a", eval_args.a, "argument a, complex literal re[+imi]");
  eval->add_option("--order", eval_args.order, "derivative order (1-2) or Stieltjes index (0-2)");
  eval->add_option("--abs-tol", eval_args.abs_tol, "absolute tolerance override");
  eval->add_option("--rel-tol", eval_args.rel_tol, "relative tolerance override");

  SuiteArgs verify_args;
  CLI::App* verify = app.add_subcommand("verify", "Run the identity verification suite");
  verify->add_flag("--all", verify_args.all, "verify every registered case");
  verify->add_option("--filter", verify_args.filter, "case id pattern (prefix match, '*' = all)");
  verify->add_option("--samples", verify_args.samples, "random samples per case")
      ->check(CLI::PositiveNumber);
  std::uint64_t seed_opt = 0;
  CLI::Option* seed_flag =
      verify->add_option("--seed", seed_opt, "RNG seed (default: LERCHKIT_SEED or 42)");
  verify->add_option("--format", verify_args.format, "text | json | csv");
  verify->add_option("--out", verify_args.out, "write the report to this path");
  verify->add_option("--force-fail", verify_args.force_fail,
                     "test hook: mark matching active cases FAIL");
  verify->add_option("--abs-tol", verify_args.abs_tol, "absolute tolerance override");
  verify->add_option("--rel-tol", verify_args.rel_tol, "relative tolerance override");

  SuiteArgs table_args;
  CLI::App* table = app.add_subcommand("table", "Render the summary table of special values");
  table->add_option("--format", table_args.format, "text | json | csv");
  table->add_option("--out", table_args.out, "write the table to this path");
  table->add_option("--abs-tol", table_args.abs_tol, "absolute tolerance override");
  table->add_option("--rel-tol", table_args.rel_tol, "relative tolerance override");

  CLI::App* cases = app.add_subcommand("cases", "List the identity case registry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (seed_flag->count() > 0) verify_args.seed = seed_opt;

  if (eval->parsed()) return cmd_eval(eval_args);
  if (verify->parsed()) return cmd_verify(verify_args);
  if (table->parsed()) return cmd_table(table_args);
  if (cases->parsed()) return cmd_cases();
  return 2;
}
