#include <doctest.h>

#include <cstdio>
#include <string>
#include <vector>

#include "aisr/derivation.hpp"
#include "aisr/satisfaction.hpp"

using namespace aisr;

namespace {

const Registry& reg() {
  static const Registry r = Registry::builtin();
  return r;
}

Word qw(const std::string& text) { return parse_term(text).summands()[0]; }

ProofStep exact_step(std::string rule, std::map<Var, std::string> images) {
  ProofStep s;
  s.rule = std::move(rule);
  s.mode = StepMode::Exact;
  for (auto& [v, img] : images) s.subst[v] = qw(img);
  return s;
}

const std::vector<std::pair<std::string, Identity>>& demo_basis() {
  static const std::vector<std::pair<std::string, Identity>> b = {
      {"281.1", parse_identity("x^2y = xy")},
      {"281.2", parse_identity("x^2y^2 = x^2 + y^2")},
      {"281.4", parse_identity("x + yz = x + yz + yx")},
  };
  return b;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/aisr_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("the builtin corpus verifies end to end") {
  std::vector<ProofChain> corpus = builtin_proof_corpus();
  REQUIRE(corpus.size() == 8);
  for (const ProofChain& chain : corpus) {
    ChainReport report = check_chain(chain, reg());
    CAPTURE(chain.name);
    CHECK(report.ok);
    CHECK(report.detail == "ok");
    CHECK(report.steps.size() == chain.steps.size());
    // The chain's endpoints really are a consequence in its model.
    CHECK(satisfies(reg().get(chain.semiring), chain.claim()).holds);
  }
}

TEST_CASE("corpus chains carry their advertised claims") {
  std::vector<ProofChain> corpus = builtin_proof_corpus();
  const ProofChain* comm = nullptr;
  for (const ProofChain& c : corpus)
    if (c.name == "277-commutativity") comm = &c;
  REQUIRE(comm != nullptr);
  CHECK(comm->claim() == parse_identity("xy = yx"));
  CHECK(comm->semiring == "S_(4,277)");
}

TEST_CASE("an exact step applies a rule instance inside a context") {
  // x^2y = xy under x -> x, y -> yz, scaled by nothing: x^2yz -> xyz.
  StepReport r = check_step(parse_term("x^2yz"), parse_term("xyz"),
                            exact_step("281.1", {{"x", "x"}, {"y", "yz"}}), demo_basis());
  CHECK(r.ok);
  CHECK(r.detail == "rule 281.1 applies");

  // The same rule read right-to-left grows the square back.
  r = check_step(parse_term("xyz"), parse_term("x^2yz"),
                 exact_step("281.1", {{"x", "x"}, {"y", "yz"}}), demo_basis());
  CHECK(r.ok);
  CHECK(r.detail == "rule 281.1 applies (reversed)");
}

TEST_CASE("exact steps fail cleanly") {
  StepReport r = check_step(parse_term("xyz"), parse_term("zyx"),
                            exact_step("281.1", {{"x", "x"}, {"y", "y"}}), demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "no context makes rule 281.1 carry the step");

  r = check_step(parse_term("x"), parse_term("x"), exact_step("9.9", {}), demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "unknown rule tag: 9.9");

  // A substitution that misses a rule variable is reported, not thrown.
  ProofStep missing = exact_step("281.1", {{"x", "x"}});
  r = check_step(parse_term("x^2y"), parse_term("xy"), missing, demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "substitution misses variable y");
}

TEST_CASE("AI steps assert equality of summand sets") {
  ProofStep ai;
  ai.rule = "AI";
  StepReport r = check_step(parse_term("x + y + x"), parse_term("y + x"), ai, demo_basis());
  CHECK(r.ok);
  CHECK(r.detail == "sides are equal as summand sets");
  r = check_step(parse_term("x + y"), parse_term("x"), ai, demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "AI step changes the summand set");
}

TEST_CASE("search steps find multi-application rewrites") {
  ProofStep s;
  s.rule = "281.2";
  s.mode = StepMode::Search;
  s.depth = 2;
  StepReport r = check_step(parse_term("x^2y^2z"), parse_term("y^2x^2z"), s, demo_basis());
  CHECK(r.ok);
  CHECK(r.detail == "search reached the target at depth 2");

  s.depth = 1;
  r = check_step(parse_term("x^2y^2z"), parse_term("y^2x^2z"), s, demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail ==
        "needs manual expansion: search did not reach the target within depth 1");

  s.rule = "*";
  s.depth = 2;
  CHECK(check_step(parse_term("x^2y^2z"), parse_term("y^2x^2z"), s, demo_basis()).ok);

  s.rule = "nope";
  r = check_step(parse_term("x"), parse_term("x"), s, demo_basis());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "unknown rule tag: nope");
}

TEST_CASE("chain validation failure modes") {
  ProofChain chain;
  chain.name = "broken";
  chain.semiring = "S_(4,277)";
  chain.basis = demo_basis();
  chain.terms = {parse_term("x"), parse_term("y")};
  ChainReport r = check_chain(chain, reg());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "chain must have n terms and n-1 steps");

  chain.steps = {exact_step("281.1", {{"x", "x"}, {"y", "y"}})};
  chain.semiring = "S_unknown";
  r = check_chain(chain, reg());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "unknown semiring: S_unknown");

  chain.semiring = "S_(4,277)";
  r = check_chain(chain, reg());
  CHECK_FALSE(r.ok);
  CHECK(r.detail == "step 1: no context makes rule 281.1 carry the step");
}

TEST_CASE("the model cross-check refutes unsound rules") {
  // xy = yx is not a law of S_(4,281), so even though the rewrite itself
  // carries x*y to y*x, the model check must flag the step.
  ProofChain chain;
  chain.name = "unsound";
  chain.semiring = "S_(4,281)";
  chain.basis = {{"bad.1", parse_identity("xy = yx")}};
  chain.terms = {parse_term("xy"), parse_term("yx")};
  chain.steps = {exact_step("bad.1", {{"x", "x"}, {"y", "y"}})};
  ChainReport r = check_chain(chain, reg());
  CHECK_FALSE(r.ok);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].detail ==
        "rule bad.1 applies; but the model refutes the step: x=3, y=4 gives 1 vs 3");
}

TEST_CASE("chains survive a json round-trip") {
  std::vector<ProofChain> corpus = builtin_proof_corpus();
  std::string text = chains_to_json(corpus);
  std::vector<ProofChain> back = chains_from_json(text);
  REQUIRE(back.size() == corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    CHECK(back[i].name == corpus[i].name);
    CHECK(back[i].semiring == corpus[i].semiring);
    CHECK(back[i].terms == corpus[i].terms);
    REQUIRE(back[i].steps.size() == corpus[i].steps.size());
    for (std::size_t j = 0; j < corpus[i].steps.size(); ++j) {
      CHECK(back[i].steps[j].rule == corpus[i].steps[j].rule);
      CHECK(back[i].steps[j].mode == corpus[i].steps[j].mode);
      CHECK(back[i].steps[j].subst == corpus[i].steps[j].subst);
    }
    CHECK(check_chain(back[i], reg()).ok);
  }

  TempFile tmp("chains_roundtrip.json");
  save_chains(corpus, tmp.path);
  CHECK(load_chains(tmp.path).size() == corpus.size());
  CHECK_THROWS_AS(load_chains("/nonexistent/chains.json"), DataError);
}

TEST_CASE("chain json rejects malformed input") {
  CHECK_THROWS_WITH_AS(chains_from_json("{"),
                       doctest::Contains("chain JSON parse error at byte"), DataError);
  CHECK_THROWS_WITH(chains_from_json("{}"), "chain file must hold an array of chains");
  CHECK_THROWS_WITH(chains_from_json("[{\"name\":\"c\"}]"),
                    "chain c needs basis, terms, and steps");
  std::string two_terms_no_steps =
      R"x([{"name":"c","semiring":"S_(4,277)","basis":[["r","x = x"]],)x"
      R"x("terms":["x","y"],"steps":[]}])x";
  CHECK_THROWS_WITH(chains_from_json(two_terms_no_steps), "chain c needs n terms and n-1 steps");
  std::string bad_subst =
      R"x([{"name":"c","semiring":"S_(4,277)","basis":[["r","x = x"]],)x"
      R"x("terms":["x","x"],"steps":[{"rule":"r","mode":"exact","subst":{"x":"x + y"}}]}])x";
  CHECK_THROWS_WITH(chains_from_json(bad_subst), "substitution image must be a single word");
  std::string bad_mode =
      R"x([{"name":"c","semiring":"S_(4,277)","basis":[["r","x = x"]],)x"
      R"x("terms":["x","x"],"steps":[{"rule":"r","mode":"sideways"}]}])x";
  CHECK_THROWS_WITH(chains_from_json(bad_mode), "unknown step mode: sideways");
  std::string no_rule =
      R"x([{"name":"c","semiring":"S_(4,277)","basis":[["r","x = x"]],)x"
      R"x("terms":["x","x"],"steps":[{"mode":"exact"}]}])x";
  CHECK_THROWS_WITH(chains_from_json(no_rule), "step needs a rule");
}
