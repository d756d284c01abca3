#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"

#include <sys/wait.h>

namespace {

struct RunResult {
  int code;
  std::string out;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string("\"") + STONEWORK_CLI_PATH + "\" " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  REQUIRE(out.good());
  out << content;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("check decides sequents under the order semantics") {
  RunResult invalid = run_cli("check --logic LS '~~p |- p'");
  CHECK(invalid.code == 1);
  CHECK(contains(invalid.out, "INVALID"));
  CHECK(contains(invalid.out, "countermodel: p=a"));

  RunResult valid = run_cli("check --logic LS 'p |- ~~p'");
  CHECK(valid.code == 0);
  CHECK(contains(valid.out, "VALID"));

  RunResult four = run_cli("check --logic LDBS 'p & !p |- q | ~q'");
  CHECK(four.code == 1);
  CHECK(contains(four.out, "countermodel: p=u1 q=u2"));
}

TEST_CASE("the preservation semantics split where the order does not") {
  RunResult truth = run_cli("check --logic LS --semantics truth '~~p |- p'");
  CHECK(truth.code == 1);
  CHECK(contains(truth.out, "countermodel: p=a"));

  RunResult falsity = run_cli("check --logic LS --semantics falsity '~~p |- p'");
  CHECK(falsity.code == 0);
  CHECK(contains(falsity.out, "VALID"));

  RunResult both = run_cli("check --logic LDBS --semantics both 'p & !p |- q | ~q'");
  CHECK(both.code == 0);
}

TEST_CASE("countermodel prints just the assignment") {
  RunResult r = run_cli("countermodel --logic LDBS 'p & !p |- q | ~q'");
  CHECK(r.code == 1);
  CHECK(r.out == "countermodel: p=u1 q=u2\n");
}

TEST_CASE("roughset semantics uses the doubled one-point space by default") {
  RunResult r = run_cli("check --logic LS --semantics roughset '~~p |- p'");
  CHECK(r.code == 1);
  CHECK(contains(r.out, "countermodel: p={u}"));

  RunResult valid = run_cli("check --logic LS --semantics roughset 'p |- ~~p'");
  CHECK(valid.code == 0);

  RunResult ldbs = run_cli("check --logic LDBS --semantics roughset 'p |- p'");
  CHECK(ldbs.code == 2);
  CHECK(contains(ldbs.out, "roughset semantics covers LS and LDS only"));
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("check --logic NOPE 'p |- p'").code == 2);
  CHECK(run_cli("check --logic LS 'p |-'").code == 2);
  CHECK(run_cli("bogus").code == 2);
  CHECK(run_cli("check").code == 2);

  RunResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(contains(help.out, "check"));
}

TEST_CASE("algebra build output feeds algebra classify") {
  RunResult built = run_cli("algebra build b2 2");
  CHECK(built.code == 0);
  write_file("cli_b2.json", built.out);

  RunResult classified = run_cli("algebra classify cli_b2.json");
  CHECK(classified.code == 0);
  CHECK(contains(classified.out, "elements: 9"));
  CHECK(contains(classified.out, "bounded distributive: yes"));
  CHECK(contains(classified.out, "pseudo-complement: total"));
  CHECK(contains(classified.out, "double stone: yes"));
  std::remove("cli_b2.json");

  CHECK(run_cli("algebra build nope 2").code == 2);
}

TEST_CASE("iso prints the element map") {
  RunResult r = run_cli("iso three-two 2");
  CHECK(r.code == 0);
  CHECK(contains(r.out, "VALID ISO (9 elements)"));
  CHECK(contains(r.out, " -> "));

  CHECK(run_cli("iso four-three 1").code == 0);
  CHECK(run_cli("iso five-four 1").code == 2);
}

TEST_CASE("roughset list and algebra run from a space file") {
  write_file("cli_space.json",
             R"({"universe": ["a", "b", "c", "d"], "blocks": [["a", "b"], ["c", "d"]]})");

  RunResult listed = run_cli("roughset --space cli_space.json list");
  CHECK(listed.code == 0);
  CHECK(contains(listed.out, "rough sets: 9"));
  CHECK(contains(listed.out, "({},{a,b})"));

  RunResult alg = run_cli("roughset --space cli_space.json algebra pseudo");
  CHECK(alg.code == 0);
  CHECK(contains(alg.out, "neg_pseudo"));
  CHECK(!contains(alg.out, "neg_dual"));

  std::remove("cli_space.json");

  CHECK(run_cli("roughset --space missing_space.json list").code == 2);
}

TEST_CASE("audit flags only the as-written excluded middle") {
  RunResult bad = run_cli("audit --logic LDBS --variant as-written --algebra 4");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "Excluded-Middle"));
  CHECK(contains(bad.out, "FAIL"));
  CHECK(contains(bad.out, "A=T"));

  RunResult good = run_cli("audit --logic LDBS --algebra 4");
  CHECK(good.code == 0);
  CHECK(!contains(good.out, "FAIL"));

  CHECK(run_cli("audit --logic LS --algebra 3d").code == 2);
}

TEST_CASE("prove-check reports the verdict of a derivation file") {
  write_file("cli_derivation_ok.txt",
             "1: p & q |- q ; Conj-Elim\n"
             "2: ~q |- ~(p & q) ; S-Contraposition(1)\n");
  RunResult ok = run_cli("prove-check --logic LS cli_derivation_ok.txt");
  CHECK(ok.code == 0);
  CHECK(contains(ok.out, "OK (2 steps)"));
  std::remove("cli_derivation_ok.txt");

  write_file("cli_derivation_bad.txt", "1: p |- q ; Reflexivity\n");
  RunResult bad = run_cli("prove-check --logic LS cli_derivation_bad.txt");
  CHECK(bad.code == 1);
  CHECK(contains(bad.out, "FAIL step 1"));
  std::remove("cli_derivation_bad.txt");

  CHECK(run_cli("prove-check --logic LS no_such_file.txt").code == 2);
}
