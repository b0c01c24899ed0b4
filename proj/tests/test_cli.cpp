#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "utlab/catalog.hpp"
#include "utlab/cli.hpp"

using namespace utlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "ut-lab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& part) { return text.find(part) != std::string::npos; }

}  // namespace

TEST_CASE("homog exit codes") {
  CHECK(run({"homog", "--group", "catalog:ASL(2,3)@9", "--i", "3", "--j", "4"}).code == 1);
  CHECK(run({"homog", "--group", "catalog:S5@5", "--i", "2", "--j", "2"}).code == 0);
  CHECK(run({"homog", "--group", "catalog:Nope@5", "--i", "2", "--j", "2"}).code == 2);

  const auto path = std::filesystem::temp_directory_path() / "utlab_cli_s5.grp";
  save_group_file(build(parse_group_name("S5")), path);
  const auto r = run({"homog", "--group", "file:" + path.string(), "--i", "2", "--j", "2"});
  CHECK(r.code == 0);
  std::filesystem::remove(path);
}

TEST_CASE("ut exit codes and witnesses") {
  CHECK(run({"ut", "--group", "catalog:M11@12", "--k", "4"}).code == 0);
  const auto plain = run({"ut", "--group", "catalog:AGL(1,17)@17", "--k", "3"});
  CHECK(plain.code == 1);
  CHECK_FALSE(has(plain.out, "witness"));
  const auto shown = run({"ut", "--group", "catalog:AGL(1,17)@17", "--k", "3", "--witness"});
  CHECK(has(shown.out, "witness partition"));
  CHECK(run({"ut", "--group", "catalog:AGL(1,13)@13", "--k", "3", "--method", "naive"}).code == 1);
  CHECK(run({"ut", "--group", "catalog:PSL(2,11)@12", "--k", "3", "--method", "extend"}).code == 0);
  CHECK(run({"ut", "--group", "catalog:S4@4", "--k", "2", "--method", "bogus"}).code == 2);
}

TEST_CASE("regular exit codes") {
  CHECK(run({"regular", "--group", "catalog:PGL(2,7)@8", "--rank", "4"}).code == 0);
  CHECK(run({"regular", "--group", "catalog:C6@6", "--map", "1,1,3,3,5,5"}).code == 0);
  CHECK(run({"regular", "--group", "catalog:S4@4", "--map", "1,2,3,3"}).code == 0);
  CHECK(run({"regular", "--group", "catalog:ASL(2,3)@9", "--rank", "4", "--quasi"}).code == 1);
  CHECK(run({"regular", "--group", "catalog:S4@4"}).code == 2);
  CHECK(run({"regular", "--group", "catalog:S4@4", "--map", "1,2,3"}).code == 2);
}

TEST_CASE("agl exit codes") {
  const auto r = run({"agl", "--p", "13"});
  CHECK(r.code == 1);
  CHECK(has(r.out, "witness c: 4"));
  CHECK(run({"agl", "--p", "11"}).code == 0);
  CHECK(run({"agl", "--p", "4"}).code == 2);
  const auto s = run({"agl", "--sieve-limit", "200"});
  CHECK(s.code == 0);
  CHECK(has(s.out, "131  fails"));
}

TEST_CASE("json output parses back") {
  const auto r = run({"--json", "agl", "--p", "13"});
  const auto report = report_from_json(r.out);
  CHECK(report.exit_code() == r.code);
  CHECK(report.command == "ut-lab --json agl --p 13");
  REQUIRE(report.entries.size() == 1);
  CHECK(report.entries[0].witness.at("H") == "{1,3,4,9,10,12}");
  CHECK(report.rows.size() == 11);
}

TEST_CASE("help and parse errors") {
  CHECK(run({"--help"}).code == 0);
  CHECK(run({}).code == 2);
  CHECK(run({"ut", "--group", "catalog:S4@4"}).code == 2);
}
