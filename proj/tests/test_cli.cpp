// End-to-end tests of the command-line interface, driving cli_main directly
// and checking text, JSON output, and exit codes (0 pass, 1 failed claim,
// 2 input error, 3 capacity).

#include "doctest.h"

#include <ghz/cli.hpp>
#include <ghz/family.hpp>
#include <ghz/jsonio.hpp>

#include "json.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace ghz;

namespace {

struct CliRun {
  int exit_code = -1;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv;
  argv.push_back("ghzkit");
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  CliRun r;
  r.exit_code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

std::filesystem::path temp_file(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "ghzkit-tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  REQUIRE(static_cast<bool>(out));
  out << text;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  REQUIRE(static_cast<bool>(in));
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

TEST_CASE("verify: a catalog paradox passes") {
  CliRun r = run_cli({"verify", "mermin-3qubit"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "verdict: PARADOX"));
  CHECK(contains(r.out, "V_0 V_1 V_2 V_3 = -1"));
  CHECK(contains(r.out, "all requested checks pass"));
  CHECK(r.err.empty());
}

TEST_CASE("verify: oracle, genuineness and LHV checks all pass on the classic table") {
  CliRun r = run_cli({"verify", "mermin-3qubit", "--oracle", "--genuine", "--lhv"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "oracle (N=8): paradox confirmed, agrees with the symbolic verdict"));
  CHECK(contains(r.out, "genuinely 3-partite: yes"));
  CHECK(contains(r.out, "genuinely 2-dimensional: yes"));
  CHECK(contains(r.out, "LHV: infeasible"));
  CHECK(contains(r.out, "weights (1,1,1,1)"));
}

TEST_CASE("verify: the five-ququat flagship passes every check") {
  CliRun r = run_cli(
      {"verify", "ghz-ququat-5", "--oracle", "--genuine", "--lhv", "--profile", "0,0,0,0"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "V_0 V_1 V_2 V_3 V_4 V_5 = -1"));
  CHECK(contains(r.out, "oracle (N=1024): paradox confirmed"));
  CHECK(contains(r.out, "genuinely 5-partite: yes"));
  CHECK(contains(r.out, "genuinely 4-dimensional: yes"));
  CHECK(contains(r.out, "joint eigenstate"));
  CHECK(contains(r.out, "eigenvalues: +1 -1 -1 -1 -1 -1"));
}

TEST_CASE("verify: genuineness failures exit 1 with the details") {
  CliRun prod = run_cli({"verify", "prc-5qubit", "--genuine"});
  CHECK(prod.exit_code == 1);
  CHECK(contains(prod.out, "genuinely 5-partite: no"));
  CHECK(contains(prod.out, "{1,2,3}"));
  CHECK(contains(prod.out, "commuting restrictions:"));
  CHECK(contains(prod.out, "{4,5}"));
  CHECK(contains(prod.out, "SOME REQUESTED CHECKS FAILED"));

  CliRun dim = run_cli({"verify", "example6-3ququat", "--genuine"});
  CHECK(dim.exit_code == 1);
  CHECK(contains(dim.out, "genuinely 4-dimensional: no"));
  CHECK(contains(dim.out, "only 2-dimensional"));
}

TEST_CASE("verify: a non-paradox file fails with a witness") {
  const auto path = temp_file("clash.json");
  write_file(path, table_document_to_json(
                       table_from_strings(Dimension{2}, {"X X", "X Y"}, "clash")));
  CliRun r = run_cli({"verify", path.string()});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "not a paradox"));
  CHECK(contains(r.out, "witness: lines 0 and 1"));
}

TEST_CASE("verify: expected phase mismatches are claim failures") {
  ExpectedBlock exp;
  exp.phase_exp = 0; // wrong: the product is tau^2
  const auto path = temp_file("wrong-phase.json");
  write_file(path, table_document_to_json(catalog_table("mermin-3qubit"), exp));
  CliRun r = run_cli({"verify", path.string()});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "MISMATCH"));

  ExpectedBlock good;
  good.phase_exp = 2;
  write_file(path, table_document_to_json(catalog_table("mermin-3qubit"), good));
  CliRun ok = run_cli({"verify", path.string()});
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.out, "expected phase_exp 2: matches"));
}

TEST_CASE("verify: stored eigenvalue patterns are checked against the state") {
  ExpectedBlock exp;
  exp.phase_exp = 4;
  exp.eigenvalues = std::vector<int>{0, 2, 2, 2, 2, 2};
  const auto path = temp_file("flagship-eigs.json");
  write_file(path, table_document_to_json(catalog_table("ghz-ququat-5"), exp));
  CliRun r = run_cli({"verify", path.string(), "--profile", "0,0,0,0"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "expected eigenvalues: match"));

  exp.eigenvalues = std::vector<int>{0, 0, 0, 0, 0, 0};
  write_file(path, table_document_to_json(catalog_table("ghz-ququat-5"), exp));
  CliRun bad = run_cli({"verify", path.string(), "--profile", "0,0,0,0"});
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "expected eigenvalues: MISMATCH"));
}

TEST_CASE("verify: a wrong profile is not a joint eigenstate") {
  CliRun r = run_cli({"verify", "ghz-ququat-5", "--profile", "0,1,0,0"});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "NOT a joint eigenstate"));
}

TEST_CASE("verify: JSON report carries the verdict") {
  CliRun r = run_cli({"verify", "mermin-3qubit", "--lhv", "--json"});
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_checks_pass"] == true);
  CHECK(j["verdict"]["is_paradox"] == true);
  CHECK(j["verdict"]["phase_exp"] == 2);
  CHECK(j["verdict"]["phase"] == "-1");
  CHECK(j["lhv"]["solvable"] == false);
  CHECK(j["lhv"]["certificate_target"] == 1);
  CHECK(j["table"]["label"] == "mermin-3qubit");
}

TEST_CASE("verify: unknown names point at the catalog listing") {
  CliRun r = run_cli({"verify", "no-such-table"});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "generate catalog --list"));
}

TEST_CASE("generate family: defaults reproduce the flagship grid") {
  CliRun r = run_cli({"generate", "family", "--d", "4", "--M", "5"});
  CHECK(r.exit_code == 0);
  TableDocument doc = parse_table_document(r.out);
  CHECK(doc.table.rows == catalog_table("ghz-ququat-5").rows);
  REQUIRE(doc.expected.phase_exp.has_value());
  CHECK(*doc.expected.phase_exp == 4);
}

TEST_CASE("generate family: violated conditions are named on stderr") {
  CliRun odd_d = run_cli({"generate", "family", "--d", "3", "--M", "5"});
  CHECK(odd_d.exit_code == 2);
  CHECK(contains(odd_d.err, "invalid family parameters"));
  CHECK(contains(odd_d.err, "d-even"));

  CliRun bad_m = run_cli({"generate", "family", "--d", "4", "--M", "4"});
  CHECK(bad_m.exit_code == 2);
  CHECK(contains(bad_m.err, "partition"));
}

TEST_CASE("generate even-m and catalog write documents and grids") {
  CliRun shown = run_cli({"generate", "even-m", "--d", "2", "--show"});
  CHECK(shown.exit_code == 0);
  CHECK(contains(shown.out, "(d=2, parties=4, lines=6)"));

  CliRun list = run_cli({"generate", "catalog", "--list"});
  CHECK(list.exit_code == 0);
  CHECK(contains(list.out, "mermin-3qubit"));
  CHECK(contains(list.out, "ghz-ququat-5"));

  const auto path = temp_file("mermin-out.json");
  CliRun saved = run_cli({"generate", "catalog", "mermin-3qubit", "--out", path.string()});
  CHECK(saved.exit_code == 0);
  TableDocument doc = parse_table_document(slurp(path));
  CHECK(doc.table == catalog_table("mermin-3qubit"));
  REQUIRE(doc.expected.phase_exp.has_value());
  CHECK(*doc.expected.phase_exp == 2);

  CliRun missing = run_cli({"generate", "catalog", "definitely-not-there"});
  CHECK(missing.exit_code == 2);

  CliRun neither = run_cli({"generate", "catalog"});
  CHECK(neither.exit_code == 2);
  CHECK(contains(neither.err, "--list"));
}

TEST_CASE("search: family mode at d=3 finds nothing") {
  CliRun r = run_cli({"search", "--d", "3..3", "--M", "3..9"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "0 paradoxes found"));
  CHECK(contains(r.out, "consistent within searched bounds"));
}

TEST_CASE("search: exhaustive mode labels its scope and finds the classic table") {
  CliRun r = run_cli({"search", "--mode", "exhaustive", "--d", "2", "--M", "3"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "# exhaustive mode covers duplicate-free tables of single-base words only"));
  CHECK(contains(r.out, " paradox"));
  CHECK(contains(r.out, "genuine"));
  CHECK(contains(r.out, "consistent within searched bounds"));
}

TEST_CASE("search: jsonl output parses line by line") {
  const auto path = temp_file("search.jsonl");
  CliRun r = run_cli({"search", "--d", "4..4", "--M", "5..5", "--jsonl", path.string()});
  CHECK(r.exit_code == 0);
  std::istringstream lines(slurp(path));
  std::string line;
  int parsed = 0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    CHECK(j["verdict"]["is_paradox"] == true);
    CHECK(j["params"]["d"] == 4);
    CHECK(j["table"]["parties"] == 5);
    ++parsed;
  }
  CHECK(parsed > 0);
}

TEST_CASE("eigenbasis: the classic table splits into eight one-dimensional patterns") {
  CliRun r = run_cli({"eigenbasis", "mermin-3qubit"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "8 vectors, 8 distinct eigenvalue patterns"));

  CliRun j = run_cli({"eigenbasis", "mermin-3qubit", "--json"});
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["patterns"].size() == 8);
  int total = 0;
  for (const auto& p : doc["patterns"]) total += p["multiplicity"].get<int>();
  CHECK(total == 8);

  CliRun v = run_cli({"eigenbasis", "prc-5qubit", "--vectors"});
  CHECK(v.exit_code == 0);
  CHECK(contains(v.out, "["));
}

TEST_CASE("project: the parity compression keeps the three-ququat paradox") {
  CliRun r = run_cli(
      {"project", "example6-3ququat", "--span-all", "1,0,1,0;0,1,0,1"});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "compressed per-party dimensions: 2 2 2"));
  CHECK(contains(r.out, "compressed verdict: PARADOX"));
  CHECK(contains(r.out, "= -1"));
}

TEST_CASE("project: spans can come from a JSON document") {
  const auto path = temp_file("spans.json");
  write_file(path, R"({
    "schema_version": "1",
    "spans": [
      [[1, 0, 1, 0], [0, 1, 0, 1]],
      [[1, 0, 1, 0], [0, 1, 0, 1]],
      [[[1, 0], 0, [1, 0], 0], [0, 1, 0, 1]]
    ]
  })");
  CliRun r = run_cli({"project", "example6-3ququat", "--spans", path.string()});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "compressed verdict: PARADOX"));

  write_file(path, R"({"spans": [], "surprise": 1})");
  CliRun bad = run_cli({"project", "example6-3ququat", "--spans", path.string()});
  CHECK(bad.exit_code == 2);
  CHECK(contains(bad.err, "surprise"));
}

TEST_CASE("project: non-invariant spans fail the claim; missing spans are input errors") {
  CliRun r = run_cli({"project", "mermin-3qubit", "--span-all", "1,0"});
  CHECK(r.exit_code == 1);
  CHECK(contains(r.out, "not invariant"));

  CliRun none = run_cli({"project", "mermin-3qubit"});
  CHECK(none.exit_code == 2);
  CHECK(contains(none.err, "--spans"));

  CliRun short_vec = run_cli({"project", "mermin-3qubit", "--span-all", "1"});
  CHECK(short_vec.exit_code == 2);
}

TEST_CASE("capacity overruns exit with code 3") {
  CliRun r = run_cli({"verify", "ghz-ququat-5", "--oracle", "--capacity", "100"});
  CHECK(r.exit_code == 3);
  CHECK(contains(r.err, "capacity"));
}

TEST_CASE("argument errors exit with code 2, help with 0") {
  CliRun noargs = run_cli({});
  CHECK(noargs.exit_code == 2);
  CliRun badflag = run_cli({"verify", "mermin-3qubit", "--no-such-flag"});
  CHECK(badflag.exit_code == 2);
  CliRun help = run_cli({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "ghzkit"));
  CliRun badmode = run_cli({"search", "--mode", "telepathic"});
  CHECK(badmode.exit_code == 2);
  CliRun badrange = run_cli({"search", "--d", "two"});
  CHECK(badrange.exit_code == 2);
  CHECK(contains(badrange.err, "--d"));
}
