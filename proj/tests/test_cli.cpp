#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "domgame/classify.hpp"
#include "domgame/cli.hpp"
#include "domgame/families.hpp"
#include "json.hpp"

using namespace domgame;
using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json first_json_line(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  REQUIRE(std::getline(in, line));
  return json::parse(line);
}

}  // namespace

TEST_CASE("family spec parser") {
  CHECK(cli::family_spec_parse("cycle(6)") == cycle(6));
  CHECK(cli::family_spec_parse("direct(paw,complete(2))") ==
        direct_product(paw(), complete(2)));
  CHECK(cli::family_spec_parse("corona(path(3))") == corona(path(3)));
  CHECK(cli::family_spec_parse(" cartesian( path(2) , path(3) ) ") ==
        cartesian_product(path(2), path(3)));
  CHECK(cli::family_spec_parse("G_r(3)") == family_g(3));
  CHECK(cli::family_spec_parse("D15") == family_d15());
  CHECK(cli::family_spec_parse("paw()") == paw());

  CHECK_THROWS_AS(cli::family_spec_parse("blob(3)"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("path(2,3)"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("cycle(6)x"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("7"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("path(3"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("paw(2)"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("corona(5)"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("path(paw)"), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse(""), std::runtime_error);
  CHECK_THROWS_AS(cli::family_spec_parse("path(9999999)"),
                  std::runtime_error);
}

TEST_CASE("compute command") {
  RunResult human = run_cli({"compute", "--family", "D15", "--format",
                             "human"});
  CHECK(human.code == 0);
  CHECK(human.out == "9\n");

  RunResult staller = run_cli({"compute", "--family", "path(5)", "--starter",
                               "s", "--format", "human"});
  CHECK(staller.code == 0);
  CHECK(staller.out == "4\n");

  RunResult total = run_cli({"compute", "--family", "path(5)", "--variant",
                             "total", "--format", "human"});
  CHECK(total.code == 0);
  CHECK(total.out == "3\n");

  RunResult js = run_cli({"compute", "--family", "path(5)"});
  CHECK(js.code == 0);
  json j = first_json_line(js.out);
  CHECK(j["n"] == 5);
  CHECK(j["variant"] == "connected");
  CHECK(j["starter"] == "d");
  CHECK(j["value"] == 3);
  CHECK(j["line"].size() == 3);
  CHECK(j["stats"]["states"].get<std::uint64_t>() > 0);

  RunResult rev = run_cli({"compute", "--family", "path(5)",
                           "--reverse-moves", "--format", "human"});
  CHECK(rev.out == "3\n");
}

TEST_CASE("classify command") {
  RunResult r = run_cli({"classify", "--family", "G", "--r", "3"});
  CHECK(r.code == 0);
  json j = first_json_line(r.out);
  CHECK(j["n"] == 13);
  CHECK(j["gamma_cg"] == 5);
  CHECK(j["gamma_tcg"] == 7);
  CHECK(j["class"] == 2);
}

TEST_CASE("per-vertex command") {
  RunResult r = run_cli({"per-vertex", "--family", "path(5)"});
  CHECK(r.code == 0);
  json j = first_json_line(r.out);
  CHECK(j["values"] == json({{"0", 4}, {"1", 3}, {"2", 3}, {"3", 3},
                             {"4", 4}}));
  CHECK(j["min"] == 3);
}

TEST_CASE("family command") {
  RunResult tsv = run_cli({"family", "--family", "paw", "--format", "tsv"});
  CHECK(tsv.code == 0);
  CHECK(tsv.out == "u\tv\n0\t1\n0\t2\n0\t3\n1\t2\n");

  RunResult js = run_cli({"family", "--family", "F", "--k", "2"});
  CHECK(js.code == 0);
  json j = first_json_line(js.out);
  CHECK(j["n"] == 8);
  CHECK(j["m"] == 12);
  CHECK(j["labels"].size() == 8);
  CHECK(j["edges"].size() == 12);
}

TEST_CASE("verify command") {
  CHECK(run_cli({"verify", "--claim", "gr-class2", "--r", "3"}).code == 0);
  CHECK(run_cli({"verify", "--claim", "gr-class2"}).code == 1);
  CHECK(run_cli({"verify", "--suite", "paper", "--format", "human"}).code ==
        0);
  CHECK(run_cli({"verify", "--suite", "nope"}).code == 1);
  CHECK(run_cli({"verify", "--claim", "nope", "--family", "paw"}).code == 1);
  CHECK(run_cli({"verify"}).code == 1);
  CHECK(run_cli({"verify", "--suite", "paper", "--claim", "tcg-bounds"})
            .code == 1);
  CHECK(run_cli({"verify", "--claim", "tcg-bounds", "--family", "cycle(6)"})
            .code == 0);
  CHECK(run_cli({"verify", "--claim", "corona-class1", "--family", "path(3)",
                 "--hs", "complete(2);complete(1);complete(2)"})
            .code == 0);
  CHECK(run_cli({"verify", "--claim", "corona-class1", "--family", "path(3)"})
            .code == 1);

  RunResult suite = run_cli({"verify", "--suite", "paper"});
  CHECK(suite.code == 0);
  std::istringstream lines(suite.out);
  std::string line;
  std::size_t claims = 0;
  json summary;
  while (std::getline(lines, line)) {
    summary = json::parse(line);
    if (summary.contains("claim")) {
      ++claims;
      CHECK(summary["holds"] == true);
    }
  }
  CHECK(claims == 34);
  CHECK(summary["claims"] == 34);
  CHECK(summary["failed"] == 0);
}

TEST_CASE("scan command") {
  CHECK(run_cli({"scan", "--max-n", "4"}).code == 1);
  CHECK(run_cli({"scan", "--target", "bogus", "--max-n", "4"}).code == 1);
  CHECK(run_cli({"scan", "--target", "realizability"}).code == 1);

  RunResult sg = run_cli({"scan", "--target", "sgame-equality", "--max-n",
                          "4"});
  CHECK(sg.code == 0);
  json j = first_json_line(sg.out);
  CHECK(j["checked"] == 40);
  CHECK(j["skipped_complete"] == 3);
  CHECK(j["equal"] == 40);
  CHECK(j["counterexamples"] == 0);
  CHECK(j["equality_rate"] == 1.0);

  RunResult rz = run_cli({"scan", "--target", "realizability", "--max-n",
                          "5"});
  CHECK(rz.code == 0);
  json r = first_json_line(rz.out);
  CHECK(r["scanned"] == 487);
  CHECK(r["skipped"] == 284);
  REQUIRE(r["buckets"].size() == 2);
  CHECK(r["buckets"][0]["gamma_c"] == 2);
  CHECK(r["buckets"][0]["counts"] == json({{"2", 43}, {"3", 372}}));
  CHECK(r["buckets"][0]["missing"].empty());
  CHECK(r["buckets"][1]["gamma_c"] == 3);
  CHECK(r["buckets"][1]["counts"] == json({{"3", 72}}));
  CHECK(r["buckets"][1]["missing"] == json::array({4, 5}));
}

TEST_CASE("worker count does not change the bytes") {
  RunResult a = run_cli({"scan", "--target", "realizability", "--max-n", "5",
                         "--workers", "1"});
  RunResult b = run_cli({"scan", "--target", "realizability", "--max-n", "5",
                         "--workers", "2"});
  CHECK(a.code == b.code);
  CHECK(a.out == b.out);

  RunResult c = run_cli({"verify", "--suite", "paper", "--max-n", "4",
                         "--workers", "1"});
  RunResult d = run_cli({"verify", "--suite", "paper", "--max-n", "4",
                         "--workers", "3"});
  CHECK(c.code == 0);
  CHECK(c.code == d.code);
  CHECK(c.out == d.out);
  json tail;
  std::istringstream lines(c.out);
  std::string line;
  while (std::getline(lines, line)) tail = json::parse(line);
  CHECK(tail["scanned_graphs"] == 43);
}

TEST_CASE("falsified claims exit with code two") {
  VerificationResult bad;
  bad.claim = "synthetic claim";
  bad.holds = false;
  bad.counterexample = Counterexample{paw(), "observed 3, expected 4"};
  VerificationResult good;
  good.claim = "fine claim";

  std::ostringstream out;
  int code = cli::report_verification({good, bad}, "json", out);
  CHECK(code == 2);
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  CHECK(json::parse(line)["holds"] == true);
  REQUIRE(std::getline(lines, line));
  json j = json::parse(line);
  CHECK(j["holds"] == false);
  CHECK(j["counterexample"]["observed"] == "observed 3, expected 4");
  REQUIRE(std::getline(lines, line));
  CHECK(json::parse(line)["failed"] == 1);

  std::ostringstream human;
  CHECK(cli::report_verification({good}, "human", human) == 0);
  CHECK(human.str() == "ok   fine claim\nall 1 claims hold\n");

  std::ostringstream bogus;
  CHECK_THROWS_AS(cli::report_verification({good}, "yaml", bogus),
                  std::runtime_error);
}

TEST_CASE("sgame counterexamples exit with code two") {
  SGameEqualityReport rep;
  rep.checked = 5;
  rep.equal = 4;
  rep.counterexamples.push_back({"Dhc", 3, 4});

  std::ostringstream out;
  int code = cli::report_sgame_equality(rep, 5, "json", out);
  CHECK(code == 2);
  std::istringstream lines(out.str());
  std::string line;
  REQUIRE(std::getline(lines, line));
  json ce = json::parse(line);
  CHECK(ce["graph"] == "Dhc");
  CHECK(ce["cg_s"] == 3);
  CHECK(ce["tcg_s"] == 4);
  REQUIRE(std::getline(lines, line));
  json summary = json::parse(line);
  CHECK(summary["counterexamples"] == 1);
  CHECK(summary["equality_rate"] == 0.8);

  SGameEqualityReport clean;
  clean.checked = 3;
  clean.equal = 3;
  std::ostringstream tsv;
  CHECK(cli::report_sgame_equality(clean, 4, "tsv", tsv) == 0);
  CHECK(tsv.str() == "graph\tcg_s\ttcg_s\n");
}

TEST_CASE("input plumbing") {
  CHECK(run_cli({"compute"}).code == 1);
  CHECK(run_cli({"compute", "--family", "paw", "--graph6", "x"}).code == 1);
  CHECK(run_cli({"compute", "--family", "blob"}).code == 1);
  CHECK(run_cli({"compute", "--graph6", "/nonexistent/file"}).code == 1);
  CHECK(run_cli({"nonsense"}).code == 1);
  CHECK(run_cli({}).code == 1);
  CHECK(run_cli({"compute", "--family", "G"}).code == 1);

  RunResult help = run_cli({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("compute") != std::string::npos);
}

TEST_CASE("graph6 file input") {
  std::string dir = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR")
                                                      : "/tmp");
  std::string path = dir + "/domgame_cli_test.g6";
  {
    std::ofstream f(path);
    f << "A_\r\nBw\n\n";
  }
  RunResult r = run_cli({"classify", "--graph6", path, "--format", "tsv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "graph\tn\tgamma_cg\tgamma_tcg\tclass\n"
        "A_\t2\t1\t2\t1\n"
        "Bw\t3\t1\t2\t1\n");
  std::remove(path.c_str());
}
