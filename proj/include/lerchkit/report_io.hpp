#pragma once

#include <cstdio>
#include <string>
#include <vector>

#include "lerchkit/suite.hpp"

namespace lerchkit {
namespace detail {

// 17 significant digits: enough for exact double round-trips, and stable
// byte-for-byte for equal inputs.
inline std::string json_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string text_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

inline std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

inline void json_escape_into(std::string& out, const std::string& s) {
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
}

inline std::string json_string(const std::string& s) {
  std::string out = "\"";
  json_escape_into(out, s);
  out += "\"";
  return out;
}

inline std::string json_optional(const std::optional<double>& v) {
  if (!v.has_value() || !std::isfinite(*v)) return "null";
  return json_double(*v);
}

inline std::string text_optional(const std::optional<double>& v) {
  if (!v.has_value() || !std::isfinite(*v)) return "n/a";
  return short_double(*v);
}

}  // namespace detail

// --- Verification suite reports --------------------------------------------

// JSON schema (field order is part of the contract; equal seeds give
// byte-identical documents):
//   { "seed", "samples_per_case", "options": {...},
//     "summary": { "pass", "fail", "quarantined", "error", "ok" },
//     "cases": [ { "id", "status", "tol_class", "tolerance", "verdict",
//                  "samples", "golden_residual", "max_residual",
//                  "mean_residual", "message" } ] }
inline std::string format_report_json(const SuiteReport& rep) {
  using detail::json_double;
  using detail::json_optional;
  using detail::json_string;
  std::string out;
  out += "{\n";
  out += "  \"seed\": " + std::to_string(rep.seed) + ",\n";
  out += "  \"samples_per_case\": " + std::to_string(rep.samples_per_case) + ",\n";
  out += "  \"options\": {";
  out += "\"abs_tol\": " + json_double(rep.options.abs_tol);
  out += ", \"rel_tol\": " + json_double(rep.options.rel_tol);
  out += ", \"max_terms\": " + std::to_string(rep.options.max_terms);
  out += ", \"quad_levels\": " + std::to_string(rep.options.quad_levels);
  out += ", \"deriv_radius\": " + json_double(rep.options.deriv_radius);
  out += ", \"deriv_nodes\": " + std::to_string(rep.options.deriv_nodes);
  out += "},\n";
  out += "  \"summary\": {\"pass\": " + std::to_string(rep.passed) +
         ", \"fail\": " + std::to_string(rep.failed) +
         ", \"quarantined\": " + std::to_string(rep.quarantined) +
         ", \"error\": " + std::to_string(rep.errored) +
         ", \"ok\": " + (rep.ok ? std::string("true") : std::string("false")) + "},\n";
  out += "  \"cases\": [\n";
  for (std::size_t i = 0; i < rep.cases.size(); ++i) {
    const CaseReport& c = rep.cases[i];
    out += "    {\"id\": " + json_string(c.id);
    out += ", \"status\": " + json_string(to_string(c.status));
    out += ", \"tol_class\": " + json_string(to_string(c.tol_class));
    out += ", \"tolerance\": " + json_double(c.tolerance);
    out += ", \"verdict\": " + json_string(to_string(c.verdict));
    out += ", \"samples\": " + std::to_string(c.samples);
    out += ", \"golden_residual\": " + json_optional(c.golden_residual);
    out += ", \"max_residual\": " + json_optional(c.max_residual);
    out += ", \"mean_residual\": " + json_optional(c.mean_residual);
    out += ", \"message\": " + json_string(c.message);
    out += (i + 1 < rep.cases.size()) ? "},\n" : "}\n";
  }
  out += "  ]\n";
  out += "}\n";
  return out;
}

inline std::string format_report_text(const SuiteReport& rep) {
  using detail::text_optional;
  std::string out;
  out += "identity verification: seed " + std::to_string(rep.seed) + ", " +
         std::to_string(rep.samples_per_case) + " sample(s) per case\n";
  char line[256];
  for (const CaseReport& c : rep.cases) {
    std::snprintf(line, sizeof line, "%-40s %-8s tol %-7.0e golden %-10s max %-10s %s\n",
                  c.id.c_str(), to_string(c.tol_class), c.tolerance,
                  text_optional(c.golden_residual).c_str(),
                  text_optional(c.max_residual).c_str(), to_string(c.verdict));
    out += line;
    if (!c.message.empty()) out += "    note: " + c.message + "\n";
  }
  std::snprintf(line, sizeof line,
                "summary: %d pass, %d fail, %d quarantined, %d error -> %s\n", rep.passed,
                rep.failed, rep.quarantined, rep.errored, rep.ok ? "OK" : "NOT OK");
  out += line;
  return out;
}

inline std::string format_report_csv(const SuiteReport& rep) {
  using detail::json_double;
  std::string out =
      "id,status,tol_class,tolerance,verdict,samples,golden_residual,max_residual,"
      "mean_residual\n";
  auto opt = [](const std::optional<double>& v) -> std::string {
    if (!v.has_value() || !std::isfinite(*v)) return "";
    return detail::json_double(*v);
  };
  for (const CaseReport& c : rep.cases) {
    out += c.id;
    out += ',';
    out += to_string(c.status);
    out += ',';
    out += to_string(c.tol_class);
    out += ',';
    out += json_double(c.tolerance);
    out += ',';
    out += to_string(c.verdict);
    out += ',';
    out += std::to_string(c.samples);
    out += ',';
    out += opt(c.golden_residual);
    out += ',';
    out += opt(c.max_residual);
    out += ',';
    out += opt(c.mean_residual);
    out += '\n';
  }
  return out;
}

// --- Feature table ----------------------------------------------------------

inline std::string format_table_text(const std::vector<TableRowReport>& rows) {
  std::string out;
  char line[256];
  std::snprintf(line, sizeof line, "%-28s %-40s %-10s %s\n", "feature", "case", "residual",
                "verdict");
  out += line;
  for (const TableRowReport& r : rows) {
    std::snprintf(line, sizeof line, "%-28s %-40s %-10s %s\n", r.feature.c_str(),
                  r.case_id.c_str(), detail::text_optional(r.residual).c_str(),
                  to_string(r.verdict));
    out += line;
    if (!r.message.empty()) out += "    note: " + r.message + "\n";
  }
  return out;
}

inline std::string format_table_csv(const std::vector<TableRowReport>& rows) {
  std::string out = "feature,case_id,residual,verdict\n";
  for (const TableRowReport& r : rows) {
    std::string quoted = "\"" + r.feature + "\"";  // features contain commas
    out += quoted + "," + r.case_id + ",";
    if (r.residual.has_value() && std::isfinite(*r.residual))
      out += detail::json_double(*r.residual);
    out += std::string(",") + to_string(r.verdict) + "\n";
  }
  return out;
}

inline std::string format_table_json(const std::vector<TableRowReport>& rows) {
  using detail::json_optional;
  using detail::json_string;
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const TableRowReport& r = rows[i];
    out += "  {\"feature\": " + json_string(r.feature);
    out += ", \"case_id\": " + json_string(r.case_id);
    out += ", \"residual\": " + json_optional(r.residual);
    out += ", \"verdict\": " + json_string(to_string(r.verdict));
    out += (i + 1 < rows.size()) ? "},\n" : "}\n";
  }
  out += "]\n";
  return out;
}

}  // namespace lerchkit
