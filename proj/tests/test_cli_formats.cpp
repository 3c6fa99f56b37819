#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "prooflab/builder.hpp"
#include "prooflab/experiment.hpp"
#include "prooflab/hard_formulas.hpp"

using namespace prooflab;

namespace {

int run_cli(const std::string& args, std::string* output = nullptr) {
  std::string cmd = std::string(PROOFLAB_BIN) + " " + args;
  if (output) {
    cmd += " > /tmp/prooflab_cli_out.txt 2>/dev/null";
  } else {
    cmd += " > /dev/null 2>&1";
  }
  int rc = std::system(cmd.c_str());
  if (output) {
    std::ifstream in("/tmp/prooflab_cli_out.txt");
    std::ostringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

} // namespace

TEST_CASE("experiments are byte-identical per seed") {
  for (const char* name : {"vass-reduction", "horn"}) {
    ExperimentSpec spec;
    spec.name = name;
    spec.seed = 42;
    spec.samples = 15;
    std::string a = run_experiment(spec);
    std::string b = run_experiment(spec);
    CHECK(a == b);
    spec.seed = 43;
    CHECK(a != run_experiment(spec));
  }
  CHECK_THROWS_AS(run_experiment(ExperimentSpec{"nope", 1, 1, false}),
                  std::invalid_argument);
}

TEST_CASE("vass-reduction experiment reports full agreement") {
  ExperimentSpec spec;
  spec.name = "vass-reduction";
  spec.seed = 7;
  spec.samples = 40;
  std::string csv = run_experiment(spec);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line); // header
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(line.substr(line.size() - 2) == ",1"); // agree column
  }
  CHECK(rows == 40);
}

TEST_CASE("cli: exit codes and basic verbs") {
  // 0 on success
  std::string out;
  CHECK(run_cli("gen theta-star --n 1 --k 1", &out) == 0);
  CHECK(parse_formula(out.substr(0, out.find('\n'))) == theta_star(1, 1));

  CHECK(run_cli("search taut \"p \\\\/ (p -> 0)\"") == 0);
  // 1 on a negative verdict
  CHECK(run_cli("search taut \"p -> q\"") == 1);
  // 2 on usage errors
  CHECK(run_cli("definitely-not-a-verb") == 2);
  CHECK(run_cli("gen theta-star") == 2); // missing --n
  // 2 on formula parse errors
  CHECK(run_cli("search taut \"p ->\"") == 2);

  CHECK(run_cli("chu classify \"p * q\"", &out) == 0);
  CHECK(out == "conservative\n");

  CHECK(run_cli("horn check \"p, p -> q => q\"") == 0);
  CHECK(run_cli("horn check \"p -> q => q\"") == 1);
}

TEST_CASE("cli: proof files round trip through check") {
  // a fixture proof: theta_star(1,1) proved by the complete oracle
  std::string out;
  REQUIRE(run_cli("search decide \"=> " + to_string(theta_star(1, 1)) +
                      "\" --calculus FL_e --out /tmp/prooflab_fixture.json",
                  &out) == 0);
  CHECK(run_cli("check /tmp/prooflab_fixture.json", &out) == 0);
  CHECK(out.find("ok") == 0);
  // wrong calculus flag: the proof re-tags and fails the language check
  CHECK(run_cli("check /tmp/prooflab_fixture.json --calculus LK") == 1);

  // a G proof through the cutfree pipeline verbs
  CHECK(run_cli("cutfree lemma33 \"p * (q -> 0)\" --goal dup --out "
                "/tmp/prooflab_dup.json") == 0);
  CHECK(run_cli("check /tmp/prooflab_dup.json", &out) == 0);
  CHECK(out.find("ok") == 0);
}

TEST_CASE("cli: machine verbs compose") {
  write_file("/tmp/prooflab_m.vass",
             "vass d=1\nstate a\nstate b\nrule a 1 a\nrule a -1 b\n");
  std::string out;
  CHECK(run_cli("vass reach /tmp/prooflab_m.vass --from a --to b", &out) == 0);
  CHECK(out.find("reachable") == 0);
  CHECK(run_cli("vass reach /tmp/prooflab_m.vass --from b --to a") == 1);
  CHECK(run_cli("vass encode /tmp/prooflab_m.vass --q a --r b", &out) == 0);
  CHECK(out.find("=> b") != std::string::npos);
  CHECK(run_cli("vass run-to-proof /tmp/prooflab_m.vass --q a --r b --out "
                "/tmp/prooflab_run.json") == 0);
  CHECK(run_cli("check /tmp/prooflab_run.json --calculus FL_ec") == 0);
  CHECK(run_cli("check /tmp/prooflab_run.json --calculus RLL") == 0);
  CHECK(run_cli("horn prove --from-vass /tmp/prooflab_m.vass a b "
                "--out /tmp/prooflab_horn.json") == 0);
  CHECK(run_cli("check /tmp/prooflab_horn.json --calculus LK_u") == 0);
  CHECK(run_cli("vass reduce /tmp/prooflab_m.vass --target b", &out) == 0);
  CHECK(out.find("q_new") != std::string::npos);
}

TEST_CASE("cli: frege text feeds the translation verbs") {
  write_file("/tmp/prooflab_frege.txt",
             "1. 1 ; ax one\n"
             "2. 1 -> (p -> p) ; ax one_to [A := p]\n"
             "3. p -> p ; mp 1 2\n"
             "4. (p -> p) /\\ 1 ; adj 3\n"
             "5. ((p -> p) /\\ 1) \\/ (q /\\ 1) ; ax to_or_1 [A := (p -> p) "
             "/\\ 1, B := q /\\ 1]\n");
  // line 5 is an implication axiom; mp against line 4 gives the disjunction
  write_file("/tmp/prooflab_frege2.txt",
             "1. 1 ; ax one\n"
             "2. 1 -> (p -> p) ; ax one_to [A := p]\n"
             "3. p -> p ; mp 1 2\n"
             "4. (p -> p) /\\ 1 ; adj 3\n"
             "5. (p -> p) /\\ 1 -> ((p -> p) /\\ 1) \\/ (q /\\ 1) ; ax to_or_1 "
             "[A := (p -> p) /\\ 1, B := q /\\ 1]\n"
             "6. ((p -> p) /\\ 1) \\/ (q /\\ 1) ; mp 4 5\n");
  std::string out;
  CHECK(run_cli("chu translate-proof /tmp/prooflab_frege2.txt --system MALL-F "
                "--out /tmp/prooflab_chu.json") == 0);
  CHECK(run_cli("check /tmp/prooflab_chu.json", &out) == 0);
  CHECK(out.find("ok") == 0);
  CHECK(run_cli("chu pipeline /tmp/prooflab_frege2.txt --system MALL-F --out "
                "/tmp/prooflab_pipe.json") == 0);
  CHECK(run_cli("check /tmp/prooflab_pipe.json --calculus IMALL", &out) == 0);
  CHECK(out.find("ok") == 0);
  CHECK(run_cli("chu translate-formula \"p -> q\" --d d0 --n-formula n0",
                &out) == 0);
  CHECK(parse_formula(out.substr(0, out.find('\n'))) ==
        parse_formula("(p -> q) /\\ (n0 -> n0)"));
}

TEST_CASE("cli: bench emits deterministic csv") {
  std::string a, b;
  CHECK(run_cli("bench vass-reduction --seed 5 --samples 10", &a) == 0);
  CHECK(run_cli("bench vass-reduction --seed 5 --samples 10", &b) == 0);
  CHECK(a == b);
  CHECK(a.find("machine,dim,states,rules") == 0);
}
