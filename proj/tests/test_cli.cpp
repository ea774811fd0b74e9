#include <doctest.h>

#include <string>

#include "test_util.hpp"

using testutil::RunResult;
using testutil::SchemaChecker;
using testutil::run_command;
using testutil::slurp;
using njson = nlohmann::ordered_json;

namespace {

const std::string kBin = FHG_BIN;
const std::string kSchema = SCHEMA_PATH;
const std::string kGolden = GOLDEN_DIR;

RunResult fhg(const std::string& args) { return run_command(kBin + " " + args); }

SchemaChecker& schema() {
  static SchemaChecker checker(njson::parse(slurp(kSchema)));
  return checker;
}

// Parse stdout as JSON and validate it against the output schema.
njson checked_json(const std::string& out) {
  njson j = njson::parse(out);
  const std::string verdict = schema().check(j);
  INFO("schema: " << verdict);
  CHECK(verdict.empty());
  return j;
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  f << body;
  REQUIRE(f.good());
}

}  // namespace

TEST_CASE("construct writes canonical files and reports provenance") {
  auto r = fhg("construct cube --k 3 -o /tmp/fhg_cli_cube.hg");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "wrote /tmp/fhg_cli_cube.hg (n=8 r=3 edges=32)\n");
  const std::string body = slurp("/tmp/fhg_cli_cube.hg");
  CHECK(body.substr(0, 7) == "8 3 32\n");
  CHECK(std::count(body.begin(), body.end(), '\n') == 33);

  auto j = fhg("construct cube --k 3 -f json");
  CHECK(j.exit_code == 0);
  auto doc = checked_json(j.out);
  CHECK(doc["report"] == "construction");
  CHECK(doc["recipe"]["kind"] == "cube");
  CHECK(doc["recipe"]["parameters"]["k"] == 3);
  CHECK(doc["edges"] == 32);
  CHECK(doc["path"].is_null());
  CHECK(doc["hg"] == body);
}

TEST_CASE("construct -> verify -> analyze pipeline") {
  REQUIRE(fhg("construct universal --t 2 --k 3 --n 7 -o /tmp/fhg_cli_u3.hg").exit_code == 0);

  auto v = fhg("verify friendship /tmp/fhg_cli_u3.hg -f json");
  CHECK(v.exit_code == 0);
  auto cert = checked_json(v.out);
  CHECK(cert["check"] == "friendship");
  CHECK(cert["verdict"] == "PASS");
  CHECK(cert["stats"]["edges"] == 28);

  auto u = fhg("verify universal /tmp/fhg_cli_u3.hg -f json");
  CHECK(u.exit_code == 0);
  auto udoc = checked_json(u.out);
  CHECK(udoc["universal_vertex"] == 7);

  auto d = fhg("decompose /tmp/fhg_cli_u3.hg -f json");
  CHECK(d.exit_code == 0);
  auto ddoc = checked_json(d.out);
  CHECK(ddoc["decomposition"]["cliques"].size() == 7);

  auto a = fhg("analyze /tmp/fhg_cli_u3.hg -f json");
  CHECK(a.exit_code == 0);
  auto adoc = checked_json(a.out);
  CHECK(adoc["status"] == "ok");
  CHECK(adoc["bounds"]["min_is_attained"] == true);
  CHECK(adoc["sociable"]["star_center"] == 7);
}

TEST_CASE("verdicts drive exit codes") {
  // FAIL -> 1 with a machine-readable witness.
  write_file("/tmp/fhg_cli_fail.hg", "4 3 1\n0 1 2\n");
  auto fail = fhg("verify friendship /tmp/fhg_cli_fail.hg -f json");
  CHECK(fail.exit_code == 1);
  auto cert = checked_json(fail.out);
  CHECK(cert["verdict"] == "FAIL");
  CHECK(cert["witness"]["r_set"] == njson::array({0, 1, 2}));
  CHECK(cert["witness"]["friends"] == njson::array());

  // ERROR (ill-posed question) -> 2.
  write_file("/tmp/fhg_cli_err.hg", "3 3 1\n0 1 2\n");
  auto err = fhg("verify friendship /tmp/fhg_cli_err.hg");
  CHECK(err.exit_code == 2);

  // Bad invocations -> 2 with one-line errors on stderr.
  auto bad = fhg("construct cube --k 2");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("3 <= k <= 6") != std::string::npos);
  CHECK(fhg("construct cube").exit_code == 2);           // missing required option
  CHECK(fhg("verify friendship /tmp/missing.hg").exit_code == 2);
  CHECK(fhg("steiner sts --n 8").exit_code == 2);
  CHECK(fhg("no-such-command").exit_code == 2);
}

TEST_CASE("steiner subcommands annotate their output") {
  auto r = fhg("steiner sts --n 7");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, 20) == "7 3 7\n# steiner t=2\n");
  auto q = fhg("steiner sqs8 -f json");
  CHECK(q.exit_code == 0);
  auto doc = checked_json(q.out);
  CHECK(doc["recipe"]["kind"] == "steiner");
  CHECK(doc["edges"] == 14);
  auto g = fhg("steiner s5612 -f json");
  CHECK(checked_json(g.out)["edges"] == 132);

  // verify steiner picks the strength up from the annotation.
  REQUIRE(fhg("steiner sts --n 9 -o /tmp/fhg_cli_sts9.hg").exit_code == 0);
  auto v = fhg("verify steiner /tmp/fhg_cli_sts9.hg -f json");
  CHECK(v.exit_code == 0);
  auto cert = checked_json(v.out);
  CHECK(cert["check"] == "steiner");
  CHECK(cert["stats"]["t"] == 2);
  CHECK(cert["stats"]["blocks"] == 12);

  // Without annotation and without --t the question is underdetermined.
  REQUIRE(fhg("construct cube --k 3 -o /tmp/fhg_cli_cube2.hg").exit_code == 0);
  CHECK(fhg("verify steiner /tmp/fhg_cli_cube2.hg").exit_code == 2);
  CHECK(fhg("verify steiner /tmp/fhg_cli_cube2.hg --t 2").exit_code == 1);
}

TEST_CASE("bounds table renders in both formats") {
  auto j = fhg("bounds --r 3 --n-from 4 --n-to 12 -f json");
  CHECK(j.exit_code == 0);
  auto doc = checked_json(j.out);
  CHECK(doc["rows"].size() == 9);
  CHECK(doc["rows"][4]["min_edges"] == "28");

  auto t = fhg("bounds --r 3 --n-from 4 --n-to 12");
  CHECK(t.exit_code == 0);
  CHECK(t.out.find("min_edges") != std::string::npos);
  CHECK(t.out.find("28") != std::string::npos);

  // Defaults: n runs from r+1 over twelve rows.
  auto d = fhg("bounds --r 4 -f json");
  CHECK(d.exit_code == 0);
  auto ddoc = checked_json(d.out);
  CHECK(ddoc["n_from"] == 5);
  CHECK(ddoc["rows"].size() == 13);
}

TEST_CASE("search emits outcome documents and censuses") {
  auto r = fhg("search --n 6 --r 3 -f json");
  CHECK(r.exit_code == 0);
  auto doc = checked_json(r.out);
  CHECK(doc["exhausted"] == true);
  CHECK(doc["solutions_found"] == 0);

  auto c = fhg("search --n 6 --r 3 --census -f json");
  CHECK(c.exit_code == 0);
  auto cdoc = checked_json(c.out);
  CHECK(cdoc["census"]["verdict"] == "PASS");

  auto g = fhg("search --n 5 --r 2 --no-symmetry --census -f json");
  CHECK(g.exit_code == 0);
  auto gdoc = checked_json(g.out);
  CHECK(gdoc["outcome"]["solutions_found"] == 15);
  CHECK(gdoc["census"]["verdict"] == "PASS");

  // Solutions can be exported as .hg files.
  REQUIRE(run_command("rm -rf /tmp/fhg_cli_sols && mkdir -p /tmp/fhg_cli_sols").exit_code == 0);
  auto s = fhg("search --n 4 --r 3 --out-dir /tmp/fhg_cli_sols -f json");
  CHECK(s.exit_code == 0);
  CHECK(slurp("/tmp/fhg_cli_sols/solution_0000.hg") == "4 3 4\n0 1 2\n0 1 3\n0 2 3\n1 2 3\n");
  auto vs = fhg("verify friendship /tmp/fhg_cli_sols/solution_0000.hg");
  CHECK(vs.exit_code == 0);

  // A symmetry-broken census outside the safe range exits 2.
  auto refuse = fhg("search --n 8 --r 3 --census -f json");
  CHECK(refuse.exit_code == 2);
}

TEST_CASE("lemma labs run from the command line") {
  auto p = fhg("lemma-lab path -f json");
  CHECK(p.exit_code == 0);
  auto pdoc = checked_json(p.out);
  CHECK(pdoc["check"] == "path_components");
  CHECK(pdoc["verdict"] == "PASS");

  auto c = fhg("lemma-lab complement --max-r 5 -f json");
  CHECK(c.exit_code == 0);
  auto cdoc = checked_json(c.out);
  CHECK(cdoc["verdict"] == "PASS");
  CHECK(cdoc["stats"]["per_r"][2]["max_edges"] == 11);
}

TEST_CASE("json output is deterministic and job-count independent") {
  const std::string cmds[] = {
      "construct truncated --r 4 -f json",
      "verify friendship /tmp/fhg_cli_u3.hg -f json",
      "analyze /tmp/fhg_cli_u3.hg -f json",
      "bounds --r 3 --n-from 4 --n-to 10 -f json",
      "search --n 7 --r 3 --census -f json",
      "lemma-lab complement --max-r 4 -f json",
  };
  for (const auto& c : cmds) {
    auto first = fhg(c);
    auto second = fhg(c);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.out == second.out);
  }
  auto j1 = fhg("verify friendship /tmp/fhg_cli_u3.hg --jobs 1 -f json");
  auto j4 = fhg("verify friendship /tmp/fhg_cli_u3.hg --jobs 4 -f json");
  CHECK(j1.out == j4.out);
  auto s1 = fhg("search --n 8 --r 3 --jobs 1 -f json");
  auto s4 = fhg("search --n 8 --r 3 --jobs 4 -f json");
  CHECK(s1.out == s4.out);

  // The FRIENDSHIP_HG_JOBS environment default must not change results.
  auto env = run_command("FRIENDSHIP_HG_JOBS=4 " + kBin +
                         " verify friendship /tmp/fhg_cli_u3.hg -f json");
  CHECK(env.out == j1.out);
  CHECK(run_command("FRIENDSHIP_HG_JOBS=junk " + kBin +
                    " verify friendship /tmp/fhg_cli_u3.hg -f json")
            .exit_code == 2);
}

TEST_CASE("outputs match the committed golden files") {
  struct Golden {
    std::string cmd;
    std::string file;
  };
  const Golden cases[] = {
      {"construct cube --k 3", "cube3.hg"},
      {"steiner sts --n 7", "sts7.hg"},
      {"construct universal --t 2 --k 3 --n 7 -f json", "construct_u3_fano.json"},
      {"bounds --r 3 --n-from 4 --n-to 12 -f json", "bounds_r3_4_12.json"},
      {"lemma-lab complement --max-r 4 -f json", "lemma_complement_r4.json"},
      {"search --n 5 --r 3 --census -f json", "search_5_3_census.json"},
  };
  for (const auto& g : cases) {
    auto r = fhg(g.cmd);
    INFO("command: " << g.cmd);
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(kGolden + "/" + g.file));
  }
}
