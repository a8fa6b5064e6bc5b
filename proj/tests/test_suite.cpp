#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "aisr/suite.hpp"

using namespace aisr;

namespace {

const Registry& reg() {
  static const Registry r = Registry::builtin();
  return r;
}

SuiteReport run_group(const std::string& group) {
  SuiteOptions opt;
  opt.only = group;
  opt.jobs = 1;
  return verify_claims(reg(), opt);
}

}  // namespace

TEST_CASE("claim groups are fixed and ordered") {
  CHECK(claim_groups() ==
        std::vector<std::string>{"catalog", "enumeration", "bases", "structure", "oracles",
                                 "derivations", "properties", "unresolved"});
}

TEST_CASE("unknown claim group is rejected") {
  SuiteOptions opt;
  opt.only = "bogus";
  CHECK_THROWS_WITH_AS(verify_claims(reg(), opt), "unknown claim group: bogus", DataError);
}

TEST_CASE("catalog claims pass against the builtin registry") {
  SuiteReport r = run_group("catalog");
  CHECK(r.claims.size() == 3);
  CHECK(r.passed == 3);
  CHECK(r.failed == 0);
  CHECK(r.ok);
  CHECK(r.claims[0].id == "catalog-validate-112");
  CHECK(r.claims[1].id == "catalog-validate-derived");
  CHECK(r.claims[2].id == "catalog-derived-recipes");
}

TEST_CASE("enumeration claims and the optional full count") {
  SuiteReport r = run_group("enumeration");
  REQUIRE(r.claims.size() == 3);
  CHECK(r.claims[0].id == "counts-order2-6");
  CHECK(r.claims[1].id == "counts-order3-61");
  CHECK(r.claims[2].id == "counts-fig1-112");
  CHECK(r.passed == 3);

  SuiteOptions opt;
  opt.only = "enumeration";
  opt.jobs = 1;
  opt.full_enumeration = true;
  SuiteReport full = verify_claims(reg(), opt);
  REQUIRE(full.claims.size() == 4);
  CHECK(full.claims[3].id == "counts-order4-all-866");
  CHECK(full.passed == 4);
  CHECK(full.claims[3].detail ==
        "866 classes: 58 + 93 + 112 + 217 + 386 over the five semilattices");
}

TEST_CASE("axiomatization claims pass for all sixteen bases") {
  SuiteReport r = run_group("bases");
  CHECK(r.claims.size() == 16);
  CHECK(r.passed == 16);
  const auto it = std::find_if(r.claims.begin(), r.claims.end(),
                               [](const ClaimResult& c) { return c.id == "prop-357-basis"; });
  REQUIRE(it != r.claims.end());
  CHECK(it->detail == "8 identities (47 after scheme expansion) hold in S_(4,357)");
}

TEST_CASE("structure claims pass") {
  SuiteReport r = run_group("structure");
  CHECK(r.claims.size() == 23);
  CHECK(r.passed == 23);
  std::set<std::string> ids;
  for (const auto& c : r.claims) ids.insert(c.id);
  CHECK(ids.count("embed-s2-277"));
  CHECK(ids.count("dual-279-281"));
  CHECK(ids.count("subdirect-285"));
}

TEST_CASE("derivation claims pass") {
  SuiteReport r = run_group("derivations");
  CHECK(r.claims.size() == 8);
  CHECK(r.passed == 8);
  for (const auto& c : r.claims) CHECK(c.detail.find("steps verified") != std::string::npos);
}

TEST_CASE("property claims pass") {
  SuiteReport r = run_group("properties");
  CHECK(r.claims.size() == 4);
  CHECK(r.passed == 4);
}

TEST_CASE("unresolved claims are skipped, not failed") {
  SuiteReport r = run_group("unresolved");
  CHECK(r.claims.size() == 7);
  CHECK(r.skipped == 7);
  CHECK(r.failed == 0);
  CHECK(r.ok);  // skipped claims do not break the suite
  for (const auto& c : r.claims) CHECK(c.status == ClaimStatus::Skipped);
}

TEST_CASE("text report format") {
  SuiteReport r = run_group("catalog");
  std::string text = r.to_text();
  CHECK(text.find("PASS catalog-validate-112") != std::string::npos);
  CHECK(text.find("3 passed, 0 failed, 0 skipped (3 claims)") != std::string::npos);
}

TEST_CASE("json report parses and tallies agree") {
  SuiteReport r = run_group("enumeration");
  nlohmann::json doc = nlohmann::json::parse(r.to_json());
  CHECK(doc["passed"].get<int>() == r.passed);
  CHECK(doc["failed"].get<int>() == r.failed);
  CHECK(doc["skipped"].get<int>() == r.skipped);
  CHECK(doc["ok"].get<bool>() == r.ok);
  REQUIRE(doc["claims"].is_array());
  REQUIRE(doc["claims"].size() == r.claims.size());
  CHECK(doc["claims"][0]["id"].get<std::string>() == "counts-order2-6");
  CHECK(doc["claims"][0]["status"].get<std::string>() == "passed");
  CHECK(doc["claims"][0]["group"].get<std::string>() == "enumeration");
  CHECK(doc["claims"][0]["seconds"].is_number());
}

TEST_CASE("a broken catalog trips the gate and skips the rest") {
  // Corrupt one numbered table through the JSON round-trip.
  nlohmann::json doc = nlohmann::json::parse(registry_to_json(reg()));
  for (auto& entry : doc)
    if (entry["name"] == "S_(4,277)") entry["mul"][3][3] = 2;
  Registry broken = registry_from_json(doc.dump());

  SuiteOptions opt;
  opt.jobs = 1;
  SuiteReport r = verify_claims(broken, opt);
  CHECK_FALSE(r.ok);
  CHECK(r.failed >= 1);
  bool saw_catalog_failure = false;
  for (const auto& c : r.claims) {
    if (c.group == "catalog" && c.status == ClaimStatus::Failed) saw_catalog_failure = true;
    if (c.group != "catalog") {
      CHECK(c.status == ClaimStatus::Skipped);
      CHECK(c.detail == "catalog gate failed");
    }
  }
  CHECK(saw_catalog_failure);
}

TEST_CASE("parallel and serial runs agree") {
  SuiteOptions serial;
  serial.only = "structure";
  serial.jobs = 1;
  SuiteOptions parallel = serial;
  parallel.jobs = 4;
  SuiteReport a = verify_claims(reg(), serial);
  SuiteReport b = verify_claims(reg(), parallel);
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) {
    CHECK(a.claims[i].id == b.claims[i].id);
    CHECK(a.claims[i].status == b.claims[i].status);
    CHECK(a.claims[i].detail == b.claims[i].detail);
  }
  CHECK(a.passed == b.passed);
}
