#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#ifndef AISR_CLI_PATH
#error "AISR_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
  int code = -1;
  std::string output;  // stdout and stderr merged
};

RunResult run_raw(const std::string& command) {
  RunResult r;
  FILE* pipe = popen((command + " 2>&1").c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) r.output.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

RunResult run(const std::string& args) { return run_raw(std::string(AISR_CLI_PATH) + " " + args); }

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/aisr_cli_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("validate passes the builtin catalog") {
  RunResult r = run("validate");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "ok   S_(4,276)"));
  CHECK(contains(r.output, "ok   S_60"));
  CHECK(contains(r.output, "127 of 127 entries satisfy every axiom"));
}

TEST_CASE("show prints tables and provenance") {
  RunResult r = run("show 'S_(4,277)'");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "S_(4,277) (order 4)"));
  CHECK(contains(r.output, "provenance: table"));
  CHECK(contains(r.output, "  1 2 1 1"));
  CHECK(contains(r.output, "axioms: ok"));

  r = run("show nope");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: unknown semiring: nope"));
}

TEST_CASE("check reports satisfaction with a counterexample on failure") {
  RunResult r = run("check --semiring 'S_(4,277)' --identity 'xy = yx'");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "xy ≈ yx: holds"));

  r = run("check --semiring 'S_(4,281)' --identity 'xy = yx'");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "xy ≈ yx: fails (x=3, y=4 gives 1 vs 3)"));
}

TEST_CASE("check expands optional variables") {
  RunResult r = run(
      "check --semiring 'S_(4,357)' "
      "--identity 'x1x2 + x2x3 + x4x5 = x1x2 + x2x3 + x4x5 + x4' --optional x1");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "2 of 2 instances hold in S_(4,357)"));

  r = run("check --semiring 'S_(4,360)' --identity 'xyz = xyz + y' --optional x,z");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "4 of 4 instances hold in S_(4,360)"));
}

TEST_CASE("parse errors exit with usage code") {
  RunResult r = run("check --semiring 'S_(4,277)' --identity 'x = ('");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: expected a variable (at position 4)"));
}

TEST_CASE("oracle subcommand verdicts") {
  RunResult r = run("oracle --lemma s2 --identity 'x + xy = x + xy + y'");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "x + xy >= y: holds [(2)]"));
  CHECK(contains(r.output, "identity holds [(2)]"));

  r = run("oracle --lemma s10 --identity 'xy = xy + x'");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "no odd-size combination of summands matches q's odd letters"));

  r = run("oracle --lemma s57 --identity 'x + yz = x + yz + zx'");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "fails [(2): c(p(q)) is not inside c(p(u))]"));

  r = run("oracle --lemma s9 --identity 'x = x'");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: unknown oracle: s9"));
}

TEST_CASE("enumerate counts classes") {
  RunResult r = run("enumerate --order 2");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "total: 6 classes"));

  r = run("enumerate --order 3");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "semilattice 1: 17 classes"));
  CHECK(contains(r.output, "semilattice 2: 44 classes"));
  CHECK(contains(r.output, "total: 61 classes"));

  r = run("enumerate --figure");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "shared order-4 additive table: 112 classes"));
  CHECK(contains(r.output, "112 classes matched to catalog names (perfect 1:1 match)"));
}

TEST_CASE("enumerate argument validation") {
  CHECK(run("enumerate --order 5").code == 2);
  RunResult r = run("enumerate");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: enumerate needs --order or --figure"));
}

TEST_CASE("derive-catalog verifies the proof corpus") {
  RunResult r = run("derive-catalog");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "PASS 281-collapse-square"));
  CHECK(contains(r.output, "PASS 277-commutativity"));
  CHECK(contains(r.output, "8 of 8 chains verified"));
}

TEST_CASE("verify-paper runs a claim group") {
  RunResult r = run("verify-paper --only enumeration --jobs 1");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "PASS counts-order2-6"));
  CHECK(contains(r.output, "PASS counts-order3-61"));
  CHECK(contains(r.output, "PASS counts-fig1-112"));
  CHECK(contains(r.output, "3 passed, 0 failed, 0 skipped (3 claims)"));

  r = run("verify-paper --only bogus");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: unknown claim group: bogus"));
}

TEST_CASE("verify-paper emits machine-readable json") {
  RunResult r = run("verify-paper --only catalog --jobs 1 --json");
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.output);
  CHECK(doc["ok"].get<bool>());
  CHECK(doc["passed"].get<int>() == 3);
  CHECK(doc["claims"].size() == 3);
}

TEST_CASE("export and reload through the global catalog flag") {
  TempFile tmp("export.json");
  RunResult r = run("export --out " + tmp.path);
  CHECK(r.code == 0);
  CHECK(contains(r.output, "wrote 127 entries to " + tmp.path));

  r = run("--catalog " + tmp.path + " validate");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "127 of 127 entries satisfy every axiom"));

  r = run("--catalog /nonexistent/cat.json validate");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: cannot open catalog file: /nonexistent/cat.json"));
}

TEST_CASE("validate flags a tampered catalog file") {
  TempFile good("tamper_src.json");
  REQUIRE(run("export --out " + good.path).code == 0);

  TempFile bad("tamper.json");
  {
    std::ifstream in(good.path);
    nlohmann::json doc = nlohmann::json::parse(in);
    for (auto& entry : doc)
      if (entry["name"] == "S_(4,277)") entry["mul"][3][3] = 2;
    std::ofstream out(bad.path);
    out << doc.dump();
  }
  RunResult r = run("--catalog " + bad.path + " validate");
  CHECK(r.code == 1);
  CHECK(contains(r.output, "FAIL S_(4,277): left-distributivity fails at (4, 1, 4)"));
  CHECK(contains(r.output, "126 of 127 entries satisfy every axiom"));
}

TEST_CASE("the catalog environment variable is honored") {
  TempFile tmp("env.json");
  REQUIRE(run("export --out " + tmp.path).code == 0);
  RunResult r = run_raw("AISR_CATALOG=" + tmp.path + " " + AISR_CLI_PATH + " validate");
  CHECK(r.code == 0);
  CHECK(contains(r.output, "127 of 127 entries satisfy every axiom"));

  r = run_raw("AISR_CATALOG=/nonexistent/cat.json " + std::string(AISR_CLI_PATH) + " validate");
  CHECK(r.code == 2);
  CHECK(contains(r.output, "error: cannot open catalog file"));
}
