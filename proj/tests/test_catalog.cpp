#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/catalog.hpp"

using namespace aisr;

namespace {

const Registry& reg() {
  static const Registry r = Registry::builtin();
  return r;
}

CayleyTable table3(std::vector<Element> cells) { return CayleyTable(3, std::move(cells)); }

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name) : path("/tmp/aisr_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("builtin registry holds 127 entries") {
  CHECK(reg().entries().size() == 127);
  CHECK(reg().names().size() == 127);
}

TEST_CASE("numbered ids cover the order-4 range") {
  const std::vector<int>& ids = numbered_ids();
  REQUIRE(ids.size() == 112);
  CHECK(ids.front() == 276);
  CHECK(ids.back() == 387);
  CHECK(numbered_name(276) == "S_(4,276)");
  CHECK(numbered_name(387) == "S_(4,387)");
}

TEST_CASE("every numbered entry shares the figure additive table") {
  const CayleyTable add = figure_add();
  CHECK(add.rows() ==
        std::vector<std::vector<int>>{{1, 2, 1, 1}, {2, 2, 2, 2}, {1, 2, 3, 1}, {1, 2, 1, 4}});
  for (int id : numbered_ids()) {
    const Semiring& s = reg().get(numbered_name(id));
    CHECK(s.add == add);
  }
}

TEST_CASE("derived small algebras carry frozen tables") {
  const CayleyTable add3 = table3({0, 0, 0, 0, 1, 0, 0, 0, 2});
  CHECK(reg().get("S_2").add == add3);
  CHECK(reg().get("S_2").mul == table3({0, 0, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(reg().get("S_4").mul == table3({0, 0, 0, 0, 0, 0, 0, 1, 2}));
  CHECK(reg().get("S_10").mul == table3({0, 0, 0, 0, 1, 2, 0, 2, 1}));
  const CayleyTable add_chain = table3({0, 1, 0, 1, 1, 1, 0, 1, 2});
  CHECK(reg().get("S_53").add == add_chain);
  CHECK(reg().get("S_53").mul == table3({1, 1, 0, 1, 1, 1, 0, 1, 2}));
  CHECK(reg().get("S_54").mul == table3({1, 1, 0, 1, 1, 1, 1, 1, 2}));
  CHECK(reg().get("S_56").mul == table3({1, 1, 2, 1, 1, 2, 1, 1, 2}));
  CHECK(reg().get("S_57").mul == table3({1, 1, 1, 1, 1, 1, 0, 1, 2}));
  CHECK(reg().get("S_59").mul == table3({1, 1, 1, 1, 1, 1, 1, 1, 0}));
  CHECK(reg().get("S_60").mul == table3({1, 1, 1, 1, 1, 1, 1, 1, 2}));
  CHECK(reg().get("S_54").mul == reg().get("S_57").mul.transposed());
}

TEST_CASE("provenance strings describe how entries were built") {
  const auto& entries = reg().entries();
  auto prov = [&](const std::string& name) -> std::string {
    for (const auto& e : entries)
      if (e.semiring.name == name) return e.provenance;
    return "";
  };
  CHECK(prov("S_(4,277)") == "table");
  CHECK(prov("N_2") == "definition: xy = bottom");
  CHECK(prov("S_2") == "subalgebra {1,3,4} of S_(4,277)");
  CHECK(prov("S_10") == "quotient of S_(4,285) by {1,2|3|4}");
  CHECK(prov("S_53") == "quotient of S_(4,357) by {1,4|2|3}");
}

TEST_CASE("all builtin entries satisfy the axioms") {
  for (const auto& e : reg().entries()) CHECK(validate_axioms(e.semiring).ok);
}

TEST_CASE("lookup by name") {
  CHECK(reg().find("S_(4,300)") != nullptr);
  CHECK(reg().find("S_(4,999)") == nullptr);
  CHECK_THROWS_AS(reg().get("nope"), DataError);
  CHECK_THROWS_WITH(reg().get("nope"), "unknown semiring: nope");
}

TEST_CASE("names referenced but unavailable as tables") {
  const auto& names = Registry::unresolved_names();
  CHECK(names.size() == 17);
  CHECK(names.front() == "S_6");
  CHECK(names.back() == "S_61");
  for (const auto& n : names) CHECK(reg().find(n) == nullptr);
}

TEST_CASE("json round-trip preserves every entry") {
  std::string text = registry_to_json(reg());
  Registry back = registry_from_json(text);
  REQUIRE(back.entries().size() == reg().entries().size());
  for (std::size_t i = 0; i < back.entries().size(); ++i) {
    const CatalogEntry& a = reg().entries()[i];
    const CatalogEntry& b = back.entries()[i];
    CHECK(a.semiring.name == b.semiring.name);
    CHECK(a.semiring.same_tables(b.semiring));
    CHECK(a.provenance == b.provenance);
  }
}

TEST_CASE("file round-trip") {
  TempFile tmp("catalog_roundtrip.json");
  save_registry(reg(), tmp.path);
  Registry back = load_registry(tmp.path);
  CHECK(back.entries().size() == 127);
  CHECK(back.get("S_(4,277)").same_tables(reg().get("S_(4,277)")));
  CHECK_THROWS_AS(load_registry("/nonexistent/catalog.json"), DataError);
}

TEST_CASE("malformed json is rejected with a location") {
  CHECK_THROWS_WITH_AS(registry_from_json("{"),
                       doctest::Contains("catalog JSON parse error at byte"), DataError);
  CHECK_THROWS_WITH(registry_from_json("{}"), "catalog JSON must be an array of entries");
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_WITH(registry_from_json("[{}]"), "entry 0: missing field 'name'");
  CHECK_THROWS_WITH_AS(
      registry_from_json(R"([{"name":"A","order":2,"add":[[1,2],[2,2]],"mul":[[1,1]],)"
                         R"("provenance":"table"}])"),
      "entry 0 (A) mul: expected 2 rows", DataError);
  CHECK_THROWS_WITH_AS(
      registry_from_json(R"([{"name":"A","order":2,"add":[[1,2],[2,9]],)"
                         R"("mul":[[1,1],[1,1]],"provenance":"table"}])"),
      "table entry out of range", DataError);
  std::string dup = R"([{"name":"A","order":1,"add":[[1]],"mul":[[1]],"provenance":"table"},)"
                    R"({"name":"A","order":1,"add":[[1]],"mul":[[1]],"provenance":"table"}])";
  CHECK_THROWS_WITH_AS(registry_from_json(dup), "entry 1: duplicate name A", DataError);
}

TEST_CASE("loading does not validate axioms; validation is a separate pass") {
  // A broken table loads fine so tools can inspect it; the axiom checker
  // is what rejects it.
  std::string text =
      R"([{"name":"broken","order":2,"add":[[1,2],[1,2]],"mul":[[1,1],[1,1]],)"
      R"("provenance":"table"}])";
  Registry r = registry_from_json(text);
  REQUIRE(r.entries().size() == 1);
  ValidationReport rep = validate_axioms(r.get("broken"));
  CHECK_FALSE(rep.ok);
  CHECK(rep.law == "add-commutativity");
}
