#include <doctest.h>

#include <set>
#include <vector>

#include "aisr/enumerate.hpp"

using namespace aisr;

namespace {

const Registry& reg() {
  static const Registry r = Registry::builtin();
  return r;
}

// Applies a relabeling permutation to an operation table.
CayleyTable permuted(const CayleyTable& t, const std::vector<Element>& p) {
  CayleyTable out = t;
  for (int a = 0; a < t.order(); ++a)
    for (int b = 0; b < t.order(); ++b) out.set(p[a], p[b], p[t.at(a, b)]);
  return out;
}

}  // namespace

TEST_CASE("semilattice counts by order") {
  CHECK(enumerate_semilattices(1).size() == 1);
  CHECK(enumerate_semilattices(2).size() == 1);
  CHECK(enumerate_semilattices(3).size() == 2);
  CHECK(enumerate_semilattices(4).size() == 5);
  CHECK_THROWS_AS(enumerate_semilattices(6), DataError);
  CHECK_THROWS_AS(enumerate_semilattices(0), DataError);
}

TEST_CASE("semilattice representatives are canonical and valid") {
  for (const CayleyTable& t : enumerate_semilattices(4)) {
    // Join as both operations forms an ai-semiring, so one validation pass
    // covers commutativity, idempotency, and associativity of the table.
    CHECK(validate_axioms(t, t).ok);
    for (int a = 0; a < 4; ++a) CHECK(t.at(a, a) == a);
  }
}

TEST_CASE("class counts for small orders") {
  CHECK(count_ai_semirings(2) == 6);
  CHECK(count_ai_semirings(3) == 61);
}

TEST_CASE("order-3 classes split 17 + 44 across the two semilattices") {
  std::vector<CayleyTable> lattices = enumerate_semilattices(3);
  REQUIRE(lattices.size() == 2);
  CHECK(enumerate_ai_semirings(lattices[0]).size() == 17);
  CHECK(enumerate_ai_semirings(lattices[1]).size() == 44);
}

TEST_CASE("the shared order-4 additive table carries 112 classes") {
  std::vector<IsoClass> classes = enumerate_ai_semirings(figure_add());
  REQUIRE(classes.size() == 112);

  // Each representative really is an ai-semiring over the table.
  const CayleyTable add = figure_add();
  std::set<std::vector<Element>> seen;
  for (const IsoClass& c : classes) {
    CHECK(validate_axioms(add, c.mul).ok);
    CHECK((c.orbit_size == 1 || c.orbit_size == 2));
    CHECK(seen.insert(c.mul.cells()).second);  // reps are distinct
  }

  // Representatives are canonical: no automorphism image is lex-smaller.
  const auto autos = table_automorphisms(add);
  REQUIRE(autos.size() == 2);
  for (const IsoClass& c : classes)
    for (const auto& p : autos) CHECK_FALSE(permuted(c.mul, p) < c.mul);
}

TEST_CASE("enumerated classes match the catalog one-to-one") {
  const CayleyTable add = figure_add();
  std::vector<IsoClass> classes = enumerate_ai_semirings(add);
  MatchReport report = match_catalog(classes, add, reg());
  CHECK(report.perfect());
  REQUIRE(report.matches.size() == 112);
  CHECK(report.unmatched_classes.empty());
  CHECK(report.unmatched_names.empty());
  CHECK(report.duplicate_names.empty());

  // Each returned permutation genuinely carries the class representative
  // onto the named catalog table.
  for (const MatchReport::Row& row : report.matches) {
    const IsoClass& cls = classes[static_cast<std::size_t>(row.class_index)];
    CHECK(permuted(cls.mul, row.iso) == reg().get(row.name).mul);
    CHECK(permuted(add, row.iso) == add);
  }
}

TEST_CASE("matching reports gaps honestly") {
  const CayleyTable add = figure_add();
  std::vector<IsoClass> classes = enumerate_ai_semirings(add);

  // Against an order-2 registry slice nothing lines up: every class is
  // unmatched and no order-4 name exists.
  Registry tiny;
  tiny.add({reg().get("N_2"), "definition"});
  MatchReport r = match_catalog(classes, add, tiny);
  CHECK_FALSE(r.perfect());
  CHECK(r.matches.empty());
  CHECK(r.unmatched_classes.size() == 112);
  CHECK(r.unmatched_names.empty());

  // Duplicating an entry under a fresh name flags the collision.
  Registry dup;
  for (const auto& e : reg().entries()) dup.add(e);
  Semiring copy = reg().get("S_(4,277)");
  copy.name = "copycat";
  dup.add({copy, "table"});
  MatchReport d = match_catalog(classes, add, dup);
  CHECK_FALSE(d.perfect());
  REQUIRE(d.duplicate_names.size() == 1);
  CHECK(d.duplicate_names[0] == "copycat");
}
