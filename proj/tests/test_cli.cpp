#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "gen.hpp"
#include "teleseq/cli.hpp"
#include "test_util.hpp"

using namespace teleseq;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

bool contains_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("analyze reports profile, telescopy and minimality", "[cli]") {
  CliResult r = run_cli({"analyze", "660,550,352,50,201"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "c: 6,5,11,2"));
  CHECK(contains_line(r.out, "telescopic: yes"));
  CHECK(contains_line(r.out, "minimal: no"));
  CHECK(contains_line(r.out, "minimal_generators: 660,352,50,201"));
  CHECK(contains_line(r.out, "embedding_dimension: 4"));

  CliResult t = run_cli({"analyze", "3,4,5"});
  CHECK(t.code == 0);
  CHECK(contains_line(t.out, "telescopic: no (witness j=3)"));
  CHECK(contains_line(t.out, "minimal: yes"));
  CHECK(contains_line(t.out, "frobenius: 2"));

  CliResult z = run_cli({"analyze", "0,5,10"});
  CHECK(z.code == 0);
  CHECK(contains_line(z.out, "sequence: 5,0,10"));
  CHECK(contains_line(z.out, "note: head normalized: 0,5,10 -> 5,0,10"));
}

TEST_CASE("analyze --json emits the documented schema", "[cli]") {
  CliResult r = run_cli({"analyze", "4,6,5", "--json"});
  REQUIRE(r.code == 0);
  json j = json::parse(r.out);
  CHECK(j["operation"] == "analyze");
  CHECK(j["input"]["sequence"] == "4,6,5");
  const json& res = j["result"];
  CHECK(res["sequence"] == json({"4", "6", "5"}));
  CHECK(res["k"] == 3);
  CHECK(res["gcd"] == "1");
  CHECK(res["c"] == json({"2", "2"}));
  CHECK(res["telescopic"] == true);
  CHECK(res["witness"].is_null());
  CHECK(res["z"]["z"] == json({"1", "3", "5"}));
  CHECK(res["minimal"] == true);
  CHECK(res["embedding_dimension"] == 3);
  CHECK(res["semigroup"]["frobenius"] == "7");
  CHECK(res["semigroup"]["genus"] == "4");
  CHECK(res["semigroup"]["apery"]["values"] == json({"0", "5", "6", "11"}));
  CHECK(res["semigroup"]["apery"]["method"] == "closed-form");
  CHECK(res["semigroup"]["apery"]["truncated"] == false);

  // identical argv gives byte-identical output
  CliResult again = run_cli({"analyze", "4,6,5", "--json"});
  CHECK(again.out == r.out);

  // the print cap truncates with a marker
  CliResult capped = run_cli({"analyze", "4,6,5", "--json", "--apery-cap", "2"});
  json cj = json::parse(capped.out);
  CHECK(cj["result"]["semigroup"]["apery"]["truncated"] == true);
  CHECK(cj["result"]["semigroup"]["apery"]["values"] == json({"0", "5"}));
}

TEST_CASE("minimize prints the result and its trace", "[cli]") {
  CliResult r = run_cli({"minimize", "660,550,352,902,50,201"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("660,50,352,201\n", 0) == 0);
  CHECK(contains_line(
      r.out,
      "step 1: case 2 n=2 m=5: 660,550,352,902,50,201 -> 660,50,352,902,201"));
  CHECK(contains_line(
      r.out, "step 2: case 1 n=4: 660,50,352,902,201 -> 660,50,352,201"));

  CliResult j = run_cli({"minimize", "660,550,352,902,50,201", "--json"});
  json parsed = json::parse(j.out);
  CHECK(parsed["result"]["sequence"] == json({"660", "50", "352", "201"}));
  CHECK(parsed["result"]["steps"] == 2);

  CliResult bad = run_cli({"minimize", "3,4,5"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("NotTelescopic:", 0) == 0);
}

TEST_CASE("construct builds and reports minimality", "[cli]") {
  CliResult r = run_cli({"construct", "--d", "4", "--c", "3,2,5,3", "--z",
                         "4,4,4,4"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("360,120,60,12,4\n", 0) == 0);
  CHECK(contains_line(r.out, "minimal: no (z_2 divides z_1*C_{1,2})"));

  // a z list echoing z_1 = d in front is tolerated
  CliResult echoed = run_cli({"construct", "--d", "4", "--c", "3,2,5,3", "--z",
                              "4,4,4,4,4"});
  CHECK(echoed.code == 0);
  CHECK(echoed.out.rfind("360,120,60,12,4\n", 0) == 0);

  CliResult minimal = run_cli({"construct", "--d", "1", "--c", "2,3,4,5",
                               "--z", "3,5,11,22", "--require-minimal"});
  CHECK(minimal.code == 0);
  CHECK(minimal.out.rfind("120,180,100,55,22\n", 0) == 0);
  CHECK(contains_line(minimal.out, "minimal: yes"));

  CliResult rejected = run_cli({"construct", "--d", "4", "--c", "3,2,5,3",
                                "--z", "4,4,4,4", "--require-minimal"});
  CHECK(rejected.code == 1);
  CHECK(rejected.err.rfind("NotMinimal:", 0) == 0);

  CliResult invalid = run_cli({"construct", "--d", "4", "--c", "3,2", "--z",
                               "6,4"});
  CHECK(invalid.code == 1);
  CHECK(invalid.err.rfind("GcdConditionFailed:", 0) == 0);

  CliResult mismatch = run_cli({"construct", "--d", "4", "--c", "3,2", "--z",
                                "8"});
  CHECK(mismatch.code == 2);
}

TEST_CASE("construct handles the single-term and scaled cases", "[cli]") {
  CliResult single = run_cli({"construct", "--d", "5"});
  CHECK(single.code == 0);
  CHECK(single.out.rfind("5\n", 0) == 0);

  CliResult scaled = run_cli({"enumerate", "--d", "2", "--c", "3", "--z-bound",
                              "10", "--minimal-only"});
  CHECK(scaled.code == 0);
  // z_2 in {2,4,8,10} (multiples of 2 coprime to 3 after scaling) minus
  // the divisibility exclusions: z_2 | z_1*C_{1,2} = 6 removes 2
  CHECK(scaled.out == "6,4\n6,8\n6,10\n");

  CliResult analyzed = run_cli({"analyze", "120,180,100,55,22"});
  CHECK(analyzed.code == 0);
  CHECK(contains_line(analyzed.out, "telescopic: yes"));
  CHECK(contains_line(analyzed.out, "minimal: yes"));
  CHECK(contains_line(analyzed.out, "c: 2,3,4,5"));
}

TEST_CASE("family subcommand emits the three families", "[cli]") {
  CHECK(run_cli({"family", "--geometric", "2,3,3"}).out == "4,6,9\n");
  CHECK(run_cli({"family", "--supersymmetric", "2,3,5"}).out == "15,10,6\n");
  CHECK(run_cli({"family", "--compound", "2,5;3,3"}).out == "10,15,9\n");

  CliResult bad = run_cli({"family", "--supersymmetric", "2,3,6"});
  CHECK(bad.code == 1);
  CHECK(bad.err.rfind("InvalidFamilyParameters:", 0) == 0);

  CliResult none = run_cli({"family"});
  CHECK(none.code == 2);
}

TEST_CASE("transform applies steps and program files", "[cli]") {
  CHECK(run_cli({"transform", "660,550,352,50,201", "--rho", "2"}).out ==
        "110,352,50,201\n");
  CHECK(run_cli({"transform", "660,550,352,902,50,201", "--pi", "4"}).out ==
        "660,550,352,50,201\n");
  CHECK(run_cli({"transform", "660,550,352,50,201", "--tau", "251,3"}).out ==
        "1980,1650,1056,150,603,251\n");

  // a morph program written to a file drives the same result
  CliResult prog = run_cli({"morph", "4,6,9", "30,18,20,33"});
  CHECK(prog.code == 0);
  std::string path = "cli_test_program.json";
  {
    std::ofstream f(path);
    f << prog.out;
  }
  CliResult applied = run_cli({"transform", "4,6,9", "--program", path});
  CHECK(applied.code == 0);
  CHECK(applied.out == "30,18,20,33\n");
  CliResult traced =
      run_cli({"transform", "4,6,9", "--program", path, "--trace"});
  CHECK(traced.code == 0);
  CHECK(contains_line(traced.out, "  2,3"));  // midpoint of the collapse
  std::remove(path.c_str());

  CliResult both = run_cli({"transform", "4,6,9", "--rho", "2", "--pi", "1"});
  CHECK(both.code == 2);
  CliResult invalid = run_cli({"transform", "4,6,9", "--rho", "9"});
  CHECK(invalid.code == 1);
  CHECK(invalid.err.rfind("IndexOutOfRange:", 0) == 0);
}

TEST_CASE("morph rejects mismatched inputs", "[cli]") {
  CliResult mismatch = run_cli({"morph", "4,6,9", "8,12,18"});
  CHECK(mismatch.code == 1);
  CHECK(mismatch.err.rfind("GcdMismatch:", 0) == 0);

  CliResult json_mode = run_cli({"morph", "4,6,9", "30,18,20,33", "--json"});
  json j = json::parse(json_mode.out);
  CHECK(j["result"]["source_gcd"] == "1");
  CHECK(j["result"]["program"].size() == 5);
}

TEST_CASE("verify cross-checks the closed forms", "[cli]") {
  CliResult r = run_cli({"verify", "4,6,5"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "PASS apery"));
  CHECK(contains_line(r.out, "PASS frobenius"));
  CHECK(contains_line(r.out, "PASS genus"));
  CHECK(contains_line(r.out, "PASS symmetry"));
  CHECK(contains_line(r.out, "PASS tuenter"));
  CHECK(contains_line(r.out, "PASS gap_identity"));

  CliResult cubic = run_cli({"verify", "660,550,352,50,201", "--poly",
                             "0,0,0,1", "--t", "660"});
  CHECK(cubic.code == 0);

  CliResult non_unit = run_cli({"verify", "4,6"});
  CHECK(non_unit.code == 1);
  CliResult non_tele = run_cli({"verify", "3,4,5"});
  CHECK(non_tele.code == 1);
  CHECK(non_tele.err.rfind("NotTelescopic:", 0) == 0);
}

TEST_CASE("enumerate lists sequences in lexicographic z-order", "[cli]") {
  CliResult r = run_cli({"enumerate", "--d", "1", "--c", "2", "--z-bound", "5",
                         "--minimal-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "2,3\n2,5\n");

  CliResult limited = run_cli({"enumerate", "--d", "1", "--c", "2,3",
                               "--z-bound", "4", "--limit", "3"});
  CHECK(limited.code == 0);
  json j = json::parse(
      run_cli({"enumerate", "--d", "1", "--c", "2", "--z-bound", "5", "--json"})
          .out);
  CHECK(j["result"]["count"] == 3);  // z_2 in {1, 3, 5}
}

TEST_CASE("analyze omits semigroup data when the gcd exceeds one", "[cli]") {
  CliResult r = run_cli({"analyze", "360,120,60,12,4"});
  CHECK(r.code == 0);
  CHECK(contains_line(r.out, "gcd: 4"));
  CHECK(r.out.find("frobenius:") == std::string::npos);
  json j = json::parse(run_cli({"analyze", "360,120,60,12,4", "--json"}).out);
  CHECK(j["result"]["semigroup"].is_null());
}

TEST_CASE("verify exits cleanly across a random telescopic corpus",
          "[cli][property]") {
  std::mt19937 rng(7601);
  testgen::GenOptions opt;  // gcd 1 defaults
  opt.allow_unit_c = true;
  for (int iter = 0; iter < 40; ++iter) {
    Sequence g = testgen::random_telescopic(rng, opt);
    CliResult r = run_cli({"verify", g.str(), "--poly", "1,-2,3"});
    CAPTURE(g.str());
    CHECK(r.code == 0);
  }
}

TEST_CASE("analyze reports re-parse for random constructed sequences",
          "[cli][property]") {
  std::mt19937 rng(7602);
  testgen::GenOptions opt;
  opt.max_d = 3;
  opt.allow_unit_c = true;
  for (int iter = 0; iter < 15; ++iter) {
    Sequence g = testgen::random_telescopic(rng, opt);
    CliResult r = run_cli({"analyze", g.str(), "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    for (const char* key :
         {"sequence", "k", "gcd", "d", "c", "telescopic", "witness", "z",
          "minimal", "minimal_generators", "embedding_dimension",
          "semigroup"}) {
      CAPTURE(g.str(), key);
      CHECK(j["result"].contains(key));
    }
    CHECK(sequence_from_json(j["result"]["sequence"]) == g);
    CHECK(j["result"]["telescopic"] == true);
  }
}

TEST_CASE("usage errors exit with code 2", "[cli]") {
  CHECK(run_cli({}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({"analyze"}).code == 2);
  CHECK(run_cli({"analyze", "4, 5"}).code == 2);
  CHECK(run_cli({"analyze", "4,6,5", "--bogus"}).code == 2);
  CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("domain errors carry the module error name", "[cli]") {
  CliResult r = run_cli({"analyze", "0,0,3"});
  CHECK(r.code == 1);
  CHECK(r.err.rfind("DegenerateHead:", 0) == 0);

  CliResult j = run_cli({"minimize", "3,4,5", "--json"});
  CHECK(j.code == 1);
  json parsed = json::parse(j.out);
  CHECK(parsed["error"]["name"] == "NotTelescopic");
}
