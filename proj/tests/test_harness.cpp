#include <map>

#include "doctest.h"
#include "weylkit/harness.hpp"

using namespace weylkit;

namespace {

std::map<int, Verdict> rowVerdicts(const std::vector<ReportRecord>& recs) {
  std::map<int, Verdict> out;
  for (const auto& r : recs) {
    int row = std::stoi(r.instance.substr(4, r.instance.find(' ') - 4));
    out[row] = r.verdict;
  }
  return out;
}

}  // namespace

TEST_CASE("table rows go live with the right congruences") {
  Workspace ws;

  SUBCASE("q = 13: e = 1 and q = 1 mod 3") {
    auto v = rowVerdicts(verifyTable1(ws, 13));
    for (int row : {1, 2, 3, 5}) CHECK(v[row] == Verdict::Pass);
    for (int row : {4, 6, 7, 8, 9, 10, 11, 12}) CHECK(v[row] == Verdict::Skipped);
  }

  SUBCASE("q = 7: e = 2 and q = 1 mod 3") {
    auto v = rowVerdicts(verifyTable1(ws, 7));
    for (int row : {7, 8, 9, 11}) CHECK(v[row] == Verdict::Pass);
    for (int row : {1, 2, 3, 4, 5, 6, 10, 12}) CHECK(v[row] == Verdict::Skipped);
  }

  SUBCASE("q = 5: rows 1 and 2 are skipped, row 6 is live") {
    auto v = rowVerdicts(verifyTable1(ws, 5));
    CHECK(v[1] == Verdict::Skipped);
    CHECK(v[2] == Verdict::Skipped);
    CHECK(v[4] == Verdict::Pass);
    CHECK(v[6] == Verdict::Pass);
  }

  SUBCASE("q = 11: the remaining twisted rows") {
    auto v = rowVerdicts(verifyTable1(ws, 11));
    CHECK(v[10] == Verdict::Pass);
    CHECK(v[12] == Verdict::Pass);
  }

  SUBCASE("q = 3 is skipped entirely (the element needs invertible 3)") {
    for (auto& [row, verdict] : rowVerdicts(verifyTable1(ws, 3)))
      CHECK(verdict == Verdict::Skipped);
  }

  CHECK_THROWS_AS(verifyTable1(ws, 4), std::invalid_argument);
}

TEST_CASE("construction suite passes with the prime sweep") {
  Workspace ws;
  for (const auto& r : verifyConstruction(ws, 100)) CHECK(r.verdict == Verdict::Pass);
}

TEST_CASE("check ids and exit codes") {
  HarnessConfig cfg;
  cfg.qList = {13};
  cfg.twoAdicQMax = 99;

  SUBCASE("unknown ids yield usage errors") {
    RunResult rr = runChecks({"no-such-check"}, cfg);
    CHECK(rr.exitCode == 2);
  }

  SUBCASE("an empty set runs nothing") {
    RunResult rr = runChecks({}, cfg);
    CHECK(rr.exitCode == 0);
    CHECK(rr.records.empty());
  }

  SUBCASE("a single-type square-identity id emits exactly its subset lines") {
    RunResult rr = runChecks({"adams-he-E6"}, cfg);
    CHECK(rr.exitCode == 0);
    CHECK(rr.records.size() == 64);
    for (const auto& r : rr.records) CHECK(r.verdict == Verdict::Pass);
  }

  SUBCASE("the square-identity suite emits one line per subset") {
    RunResult rr = runChecks({"adams-he"}, cfg);
    CHECK(rr.exitCode == 0);
    int e6lines = 0;
    for (const auto& r : rr.records)
      if (r.check == "adams-he-E6") ++e6lines;
    CHECK(e6lines == 64);
    CHECK(rr.records.size() == 64 + 8 + 16);
  }

  SUBCASE("expected failures do not flip the exit code") {
    RunResult rr = runChecks({"cabanes-sweeps"}, cfg);
    CHECK(rr.exitCode == 0);
    bool sawExpected = false, sawExcluded = false;
    for (const auto& r : rr.records) {
      if (r.verdict == Verdict::ExpectedFail) sawExpected = true;
      if (r.verdict == Verdict::Excluded) sawExcluded = true;
    }
    CHECK(sawExpected);
    CHECK(sawExcluded);
  }
}

TEST_CASE("report rendering is stable") {
  ReportRecord r{"table1", "row=1 q=13", Verdict::Pass, "claim text", "detail 42"};
  CHECK(r.textLine() == "PASS  table1 [row=1 q=13]  claim text  :: detail 42");
  CHECK(r.structuredLine() ==
        "check=table1 instance=row=1%20q=13 verdict=PASS claim=claim%20text detail=detail%2042");
}

TEST_CASE("structured lines round-trip") {
  ReportRecord r{"table1", "row=1 q=13", Verdict::ExpectedFail, "claim with spaces and 100% detail",
                 ""};
  auto back = parseStructuredLine(r.structuredLine());
  REQUIRE(back.has_value());
  CHECK(*back == r);
  CHECK_FALSE(parseStructuredLine("not a record").has_value());
}
