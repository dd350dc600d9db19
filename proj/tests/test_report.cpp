#include <catch2/catch_amalgamated.hpp>
#include <string>
#include <vector>

#include "lerchkit/report_io.hpp"
#include "lerchkit/suite.hpp"

using namespace lerchkit;

namespace {

// Positions of needles must be strictly increasing inside haystack.
void check_ordered(const std::string& hay, const std::vector<std::string>& needles) {
  std::size_t pos = 0;
  for (const auto& n : needles) {
    std::size_t at = hay.find(n, pos);
    INFO("looking for '" << n << "' after offset " << pos);
    REQUIRE(at != std::string::npos);
    pos = at + n.size();
  }
}

}  // namespace

TEST_CASE("identical seeds give byte-identical JSON reports") {
  SuiteReport a = run_suite("I03", 5, 42);
  SuiteReport b = run_suite("I03", 5, 42);
  CHECK(format_report_json(a) == format_report_json(b));

  SuiteReport c = run_suite("I0", 3, 99);
  SuiteReport d = run_suite("I0", 3, 99);
  CHECK(format_report_json(c) == format_report_json(d));
}

TEST_CASE("different seeds are recorded in the report") {
  SuiteReport a = run_suite("I03", 5, 1);
  SuiteReport b = run_suite("I03", 5, 2);
  CHECK(format_report_json(a) != format_report_json(b));
}

TEST_CASE("JSON schema field order is stable") {
  SuiteReport rep = run_suite("I03", 2, 42);
  std::string json = format_report_json(rep);
  check_ordered(json, {"\"seed\"", "\"samples_per_case\"", "\"options\"", "\"abs_tol\"",
                       "\"rel_tol\"", "\"max_terms\"", "\"quad_levels\"", "\"deriv_radius\"",
                       "\"deriv_nodes\"", "\"summary\"", "\"pass\"", "\"fail\"",
                       "\"quarantined\"", "\"error\"", "\"ok\"", "\"cases\""});
  check_ordered(json, {"\"id\"", "\"status\"", "\"tol_class\"", "\"tolerance\"",
                       "\"verdict\"", "\"samples\"", "\"golden_residual\"",
                       "\"max_residual\"", "\"mean_residual\"", "\"message\""});
}

TEST_CASE("CSV report carries the documented header") {
  SuiteReport rep = run_suite("I03", 1, 42);
  std::string csv = format_report_csv(rep);
  CHECK(csv.rfind("id,status,tol_class,tolerance,verdict,samples,golden_residual,"
                  "max_residual,mean_residual\n",
                  0) == 0);
  CHECK(csv.find("I03-degenerate-secant,ACTIVE,TIGHT,") != std::string::npos);
}

TEST_CASE("text report ends with a summary line") {
  SuiteReport rep = run_suite("I03", 1, 42);
  std::string text = format_report_text(rep);
  CHECK(text.find("summary: 1 pass, 0 fail, 0 quarantined, 0 error -> OK") !=
        std::string::npos);
}

TEST_CASE("force_fail flips an active case to FAIL") {
  SuiteReport rep = run_suite("I03", 1, 42, {}, "I03");
  REQUIRE(rep.cases.size() == 1);
  CHECK(rep.cases.front().verdict == Verdict::Fail);
  CHECK(rep.cases.front().message == "forced failure (test hook)");
  CHECK_FALSE(rep.ok);
  CHECK(rep.failed == 1);
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(run_suite("I03", 0, 42), std::invalid_argument);
  CHECK_THROWS_AS(run_suite("NOPE", 5, 42), domain_error);
}

TEST_CASE("full suite at small sample count is green") {
  SuiteReport rep = run_suite("*", 2, 42);
  CHECK(rep.cases.size() == 31);
  CHECK(rep.failed == 0);
  CHECK(rep.errored == 0);
  CHECK(rep.quarantined == 1);
  CHECK(rep.passed == 30);
  CHECK(rep.ok);
}

TEST_CASE("feature table resolves all rows and passes") {
  auto rows = table_report();
  CHECK(rows.size() == 11);
  for (const auto& r : rows) {
    INFO(r.feature << " via " << r.case_id);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.residual.has_value());
  }
  std::string csv = format_table_csv(rows);
  CHECK(csv.rfind("feature,case_id,residual,verdict\n", 0) == 0);
  std::string json = format_table_json(rows);
  check_ordered(json, {"\"feature\"", "\"case_id\"", "\"residual\"", "\"verdict\""});
}
