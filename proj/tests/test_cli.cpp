// End-to-end checks of the command-line tool: output strings, exit codes,
// and determinism.  The binary path is injected by the build.

#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(ORTHOCOMPACT_CLI_PATH) + " " + args;
  std::string out;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = ::pclose(pipe);
  REQUIRE(status != -1);
  return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("help exits cleanly") {
  const auto res = run_cli("--help 2>/dev/null");
  CHECK(res.exit_code == 0);
}

TEST_CASE("trivial subcommand") {
  const auto res =
      run_cli("trivial --r 3 --lambda w:[0,1,0] --mu w:[1,0,0] 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "difference = a:[0,1,1]"));
  CHECK(contains(res.output, "q(lambda) = 2, q(mu) = 1"));
  CHECK(contains(res.output, "a_r = 1, 2*min(r - q(lambda), r - q(mu)) = 2"));
  CHECK(contains(res.output, "trivial: no"));

  const auto yes =
      run_cli("trivial --r 3 --lambda w:[2,0,0] --mu w:[0,1,0] 2>&1");
  CHECK(yes.exit_code == 0);
  CHECK(contains(yes.output, "trivial: yes"));
}

TEST_CASE("omega and leq subcommands") {
  const auto in =
      run_cli("omega --r 3 --lambda w:[1,0,0] --theta a:[2,2,2] 2>&1");
  CHECK(in.exit_code == 0);
  CHECK(contains(in.output, "in -Omega(lambda): yes"));

  const auto leq = run_cli(
      "leq --r 3 --lambda w:[1,0,0] --nu w:[0,0,0] --mu w:[0,1,0] 2>&1");
  CHECK(leq.exit_code == 0);
  CHECK(contains(leq.output, "nu <=^lambda mu: yes"));
  CHECK(contains(leq.output, "witness:"));
  CHECK(contains(leq.output, "a:[1,2,2]"));

  const auto self = run_cli(
      "leq --r 3 --lambda w:[1,0,0] --nu w:[0,1,0] --mu w:[0,1,0] 2>&1");
  CHECK(self.exit_code == 0);
  CHECK(contains(self.output, "empty sum"));
}

TEST_CASE("xi subcommand") {
  const auto res = run_cli(
      "xi --r 3 --lambda w:[1,0,0] --tau a:[2,2,2] --decompose 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "in Xi(lambda): yes"));
  CHECK(contains(res.output, "decomposition:"));
  CHECK(contains(res.output, "a:[1,2,2]"));
  CHECK(contains(res.output, "a:[1,0,0]"));

  const auto no = run_cli(
      "xi --r 3 --lambda w:[1,0,0] --tau a:[1,1,1] --decompose 2>&1");
  CHECK(no.exit_code == 0);
  CHECK(contains(no.output, "in Xi(lambda): no"));
  CHECK_FALSE(contains(no.output, "decomposition:"));
}

TEST_CASE("parse failures exit with code two") {
  CHECK(run_cli("trivial --r 3 --lambda w:[oops] --mu w:[0,0,0] 2>/dev/null")
            .exit_code == 2);
  CHECK(run_cli("trivial --r 3 --lambda w:[1,0,0] 2>/dev/null").exit_code != 0);
  CHECK(run_cli("omega --r 3 --lambda w:[1,0,0] --theta a:[3/4,0,0] 2>/dev/null")
            .exit_code == 2);
}

TEST_CASE("domain failures exit with code one") {
  // mu is not below lambda within the root lattice coset.
  const auto res =
      run_cli("trivial --r 3 --lambda w:[0,1,0] --mu w:[0,0,1] 2>&1");
  CHECK(res.exit_code == 1);
  CHECK(contains(res.output, "error [NotBelow]"));
}

TEST_CASE("poset subcommand emits deterministic json") {
  const std::string args = "poset --r 3 --support 1 --bound 3 --format json";
  const auto a = run_cli(args + " 2>/dev/null");
  const auto b = run_cli(args + " 2>/dev/null");
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);

  const nlohmann::json j = nlohmann::json::parse(a.output);
  CHECK(j.at("schema") == "orthocompact/1");
  CHECK(j.at("r") == 3);
  REQUIRE(j.at("vertices").size() == 4);
  CHECK(j.at("edges").size() == 3);
}

TEST_CASE("poset with the short root in the support explains itself") {
  const auto res = run_cli("poset --r 3 --support 3 --bound 2 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "note: the short simple root lies in the support"));

  const auto quiet = run_cli("poset --r 3 --support 3 --bound 2 2>/dev/null");
  CHECK(quiet.exit_code == 0);
  CHECK_FALSE(contains(quiet.output, "note:"));
}

TEST_CASE("tensor subcommand") {
  const auto res =
      run_cli("tensor --r 3 --lambda w:[1,0,0] --mu w:[1,0,0] 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "1 w:[0,0,0]"));
  CHECK(contains(res.output, "1 w:[0,1,0]"));
  CHECK(contains(res.output, "1 w:[2,0,0]"));
}

TEST_CASE("reduce and normal subcommands") {
  const std::string path = "/tmp/orthocompact_cli_subset.json";
  {
    std::ofstream f(path);
    f << "{\"schema\":\"orthocompact/1\",\"r\":3,"
         "\"weights\":[[0,1,0],[1,0,0],[0,0,0]],\"max\":[0,1,0]}";
  }
  const auto red = run_cli("reduce --pi " + path + " 2>/dev/null");
  CHECK(red.exit_code == 0);
  const nlohmann::json j = nlohmann::json::parse(red.output);
  CHECK(j.at("r") == 3);
  CHECK(j.at("weights") ==
        nlohmann::json::array({{0, 1, 0}, {1, 0, 0}}));
  CHECK(j.at("max") == nlohmann::json::array({0, 1, 0}));

  const auto norm = run_cli("normal --pi " + path + " 2>&1");
  CHECK(norm.exit_code == 0);
  CHECK(contains(norm.output, "normal: yes"));

  // Cross-checking --r against the file catches mismatches.
  CHECK(run_cli("reduce --pi " + path + " --r 4 2>/dev/null").exit_code == 2);
  std::remove(path.c_str());
}

TEST_CASE("morphism and iso subcommands") {
  const std::string pa = "/tmp/orthocompact_cli_a.json";
  const std::string pb = "/tmp/orthocompact_cli_b.json";
  {
    std::ofstream f(pa);
    f << "{\"schema\":\"orthocompact/1\",\"r\":3,"
         "\"weights\":[[0,1,0],[1,0,0],[0,0,0]],\"max\":[0,1,0]}";
  }
  {
    std::ofstream f(pb);
    f << "{\"schema\":\"orthocompact/1\",\"r\":3,"
         "\"weights\":[[0,1,0]],\"max\":[0,1,0]}";
  }
  const auto mor = run_cli("morphism --pi " + pa + " --pi2 " + pb + " 2>&1");
  CHECK(mor.exit_code == 0);
  CHECK(contains(mor.output, "morphism pi -> pi2: yes"));

  const auto rev = run_cli("morphism --pi " + pb + " --pi2 " + pa + " 2>&1");
  CHECK(rev.exit_code == 0);
  CHECK(contains(rev.output, "morphism pi -> pi2: no"));

  const auto iso = run_cli("iso --pi " + pa + " --pi2 " + pb + " 2>&1");
  CHECK(iso.exit_code == 0);
  CHECK(contains(iso.output, "isomorphic: no"));
  std::remove(pa.c_str());
  std::remove(pb.c_str());
}

TEST_CASE("oracle-trivial subcommand") {
  const auto res = run_cli(
      "oracle-trivial --r 3 --lambda w:[2,0,0] --mu w:[0,1,0] --nmax 4 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "witness: n = 2"));

  const auto miss = run_cli(
      "oracle-trivial --r 3 --lambda w:[0,1,0] --mu w:[1,0,0] --nmax 3 2>&1");
  CHECK(miss.exit_code == 0);
  CHECK(contains(miss.output, "no witness up to n = 3"));
}

TEST_CASE("verify subcommand, tables suite") {
  const auto res = run_cli("verify --suite tables 2>&1");
  CHECK(res.exit_code == 0);
  CHECK(contains(res.output, "PASS chain-poset-r3"));
  CHECK(contains(res.output, "PASS branch-poset-r3"));
  CHECK(contains(res.output, "PASS grid-poset-r4"));
  CHECK(contains(res.output, "PASS penultimate-support"));
  CHECK_FALSE(contains(res.output, "FAIL"));
}
