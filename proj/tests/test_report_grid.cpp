#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "horadam/catalog.hpp"
#include "horadam/grid.hpp"
#include "horadam/report.hpp"

#include <sstream>

using namespace horadam;

TEST_CASE("documented example grids") {
  GridSpec grid;
  // Offsets d, a in [-6, 6]: 169 tuples, all holding.
  const auto catalan = run_grid({"catalan-F"}, grid);
  CHECK(catalan.checks() == 169);
  CHECK(catalan.holds == 169);
  CHECK(catalan.fails == 0);
  CHECK(catalan.passed());

  // u, v in [-5, 5] with w = u + v: 121 tuples.
  grid.per_symbol['u'] = {-5, 5};
  grid.per_symbol['v'] = {-5, 5};
  const auto squares = run_grid({"three-square-L"}, grid);
  CHECK(squares.checks() == 121);
  CHECK(squares.fails == 0);
}

TEST_CASE("empty ranges verify vacuously") {
  GridSpec grid;
  grid.k_binomial = {-9, -5}; // clamped to k >= 0 → empty
  const auto report = run_grid({"binomial-sum-F-v1"}, grid);
  CHECK(report.checks() == 0);
  CHECK(report.passed());

  // An explicitly empty interval is a usage error, not a vacuous pass.
  GridSpec bad;
  bad.per_symbol['a'] = {3, 1};
  CHECK_THROWS_AS(run_grid({"catalan-F"}, bad), std::invalid_argument);
  GridSpec zero;
  zero.max_tuples = 0;
  CHECK_THROWS_AS(run_grid({"catalan-F"}, zero), std::invalid_argument);
}

TEST_CASE("unknown ids are rejected together") {
  GridSpec grid;
  CHECK_THROWS_WITH_AS(run_grid({"catalan-F", "nope-1", "nope-2"}, grid),
                       "unknown identity ids: nope-1, nope-2",
                       std::invalid_argument);
}

TEST_CASE("duplicate ids are checked once") {
  GridSpec grid;
  const auto once = run_grid({"catalan-F"}, grid);
  const auto twice = run_grid({"catalan-F", "catalan-F"}, grid);
  CHECK(twice.checks() == once.checks());
}

TEST_CASE("downsampling is deterministic and capped") {
  GridSpec grid;
  grid.max_tuples = 777;
  const auto a = run_grid({"three-term-FL"}, grid); // 13^6 tuples uncapped
  CHECK(a.checks() == 777);
  const auto b = run_grid({"three-term-FL"}, grid);
  CHECK(emit_report_string(a, ReportFormat::Jsonl) ==
        emit_report_string(b, ReportFormat::Jsonl));

  // The subset is a function of the grid: a different grid picks a
  // different (still deterministic) subset.
  GridSpec other = grid;
  other.default_range = {-7, 7};
  const auto c = run_grid({"three-term-FL"}, other);
  CHECK(c.checks() == 777);
  CHECK(emit_report_string(a, ReportFormat::Jsonl) !=
        emit_report_string(c, ReportFormat::Jsonl));
}

TEST_CASE("jsonl schema") {
  GridSpec grid;
  grid.per_symbol['d'] = {2, 3};
  grid.per_symbol['a'] = {1, 1};
  const auto report = run_grid({"catalan-F"}, grid);
  const std::string jsonl = emit_report_string(report, ReportFormat::Jsonl);
  CHECK(jsonl ==
        R"({"id":"catalan-F","assignment":{"a":1,"d":2},"outcome":"Holds"}
{"id":"catalan-F","assignment":{"a":1,"d":3},"outcome":"Holds"}
{"suite":"verify","totals":{"Holds":2,"Fails":0,"Skipped":0},"skippedByReason":{},"checks":2}
)");
}

TEST_CASE("empty report emits a single totals record") {
  VerificationReport report;
  report.suite_id = "verify";
  const std::string jsonl = emit_report_string(report, ReportFormat::Jsonl);
  CHECK(jsonl ==
        "{\"suite\":\"verify\",\"totals\":{\"Holds\":0,\"Fails\":0,"
        "\"Skipped\":0},\"skippedByReason\":{},\"checks\":0}\n");
}

TEST_CASE("failing checks carry both sides in jsonl and summary") {
  // A deliberately false template: W_0(F) + 1 = 0.
  IdentityTemplate wrong;
  wrong.id = "bogus";
  wrong.parameters = {'a'};
  Monomial m1, m2;
  m1.factors = {{"F", LinExpr::sym('a')}};
  m2.coefficient = Rational(1);
  wrong.monomials = {m1, m2};
  wrong.lhs_count = 1;

  VerificationReport report;
  report.suite_id = "verify";
  SuiteBlock block;
  block.id = "bogus";
  block.symbols = {"a"};
  Assignment assignment{{'a', 0}};
  report.record(block, {0}, check_instance(wrong, assignment));
  report.blocks.push_back(std::move(block));

  CHECK(report.fails == 1);
  CHECK(!report.passed());
  REQUIRE(report.failures.size() == 1);
  CHECK(report.failures[0].lhs == "0");
  CHECK(report.failures[0].rhs == "-1");

  const std::string jsonl = emit_report_string(report, ReportFormat::Jsonl);
  CHECK(jsonl.find(R"("outcome":"Fails","lhs":"0","rhs":"-1")") !=
        std::string::npos);
  const std::string summary =
      emit_report_string(report, ReportFormat::SummaryText);
  CHECK(summary.find("FAIL bogus at {a=0}: lhs=0 rhs=-1") !=
        std::string::npos);
  CHECK(summary.find("\nFAIL\n") != std::string::npos);
}

TEST_CASE("skip reasons are serialized") {
  GridSpec grid;
  grid.per_symbol['a'] = {0, 0};
  grid.per_symbol['b'] = {0, 0};
  grid.per_symbol['c'] = {1, 1};
  grid.per_symbol['d'] = {2, 2};
  grid.per_symbol['e'] = {2, 2}; // d = e → zero determinant
  grid.per_symbol['m'] = {0, 0};
  grid.per_symbol['k'] = {3, 3};
  const auto report = run_grid({"weighted-sum-FL"}, grid);
  CHECK(report.skipped == 1);
  const std::string jsonl = emit_report_string(report, ReportFormat::Jsonl);
  CHECK(jsonl.find(R"("outcome":"Skipped","reason":"ZeroDenominator")") !=
        std::string::npos);
  CHECK(jsonl.find(R"("skippedByReason":{"ZeroDenominator":1})") !=
        std::string::npos);
}

TEST_CASE("summary counts per id") {
  GridSpec grid;
  grid.max_tuples = 50;
  const auto report = run_grid({"catalan-F", "double-L"}, grid);
  const std::string summary =
      emit_report_string(report, ReportFormat::SummaryText);
  CHECK(summary.find("catalan-F: Holds=50 Skipped=0 Fails=0\n") !=
        std::string::npos);
  CHECK(summary.find("double-L: Holds=13 Skipped=0 Fails=0\n") !=
        std::string::npos);
  CHECK(summary.find("PASS") != std::string::npos);
}
