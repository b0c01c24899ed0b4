#include <doctest.h>

#include "utlab/core.hpp"
#include "utlab/report.hpp"

using namespace utlab;

namespace {

Report sample() {
  Report r;
  r.command = "ut-lab ut --group catalog:AGL(1,13)@13 --k 3";
  r.group = GroupInfo{"AGL(1,13)", 13, "156"};
  ReportEntry e;
  e.label = "3-ut";
  e.verdict = Verdict::Fails;
  e.method = "connectivity";
  e.witness = {{"orbit", "{1,2,4}"}, {"partition", "1,2,3|4,5|6"}};
  e.info = {{"note", "quotes \" and\nnewlines"}};
  e.seconds = 0.1234567890123;
  r.entries.push_back(e);
  e.verdict = Verdict::Holds;
  e.witness.clear();
  r.entries.push_back(e);
  r.columns = {"c", "order"};
  r.rows = {{"2", "12"}, {"4", "6"}};
  r.seconds = 1.0 / 3.0;
  return r;
}

}  // namespace

TEST_CASE("reports round-trip through JSON") {
  const auto r = sample();
  CHECK(report_from_json(to_json(r)) == r);
  CHECK(report_from_json(to_json(r, -1)) == r);

  Report empty;
  empty.error = "catalog: unknown group name 'XX'";
  const auto back = report_from_json(to_json(empty));
  CHECK(back == empty);
  CHECK_FALSE(back.group);
}

TEST_CASE("exit codes follow the worst verdict") {
  auto r = sample();
  CHECK(r.exit_code() == 1);
  r.entries[0].verdict = Verdict::Holds;
  CHECK(r.exit_code() == 0);
  r.entries[1].verdict = Verdict::Undecided;
  CHECK(r.exit_code() == 2);
  r.entries[1].verdict = Verdict::Holds;
  r.error = "boom";
  CHECK(r.exit_code() == 2);
  CHECK(Report{}.exit_code() == 0);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(report_from_json("{"), InvalidArgument);
  CHECK_THROWS_AS(report_from_json("{}"), InvalidArgument);
  CHECK_THROWS_AS(parse_verdict("maybe"), InvalidArgument);
  for (Verdict v : {Verdict::Holds, Verdict::Fails, Verdict::Undecided, Verdict::Error})
    CHECK(parse_verdict(to_string(v)) == v);
}

TEST_CASE("text output hides witnesses on request") {
  const auto r = sample();
  CHECK(to_text(r).find("witness orbit: {1,2,4}") != std::string::npos);
  CHECK(to_text(r, false).find("witness") == std::string::npos);
  CHECK(to_text(r).find("c  order") != std::string::npos);
}
