#pragma once

#include <string>
#include <vector>

#include "aisr/catalog.hpp"

namespace aisr {

// Canonical representatives (lex-least table under relabeling) of all
// join-semilattices of the given order, sorted. Guarded to order <= 5.
std::vector<CayleyTable> enumerate_semilattices(int order);

// One isomorphism class of semirings over a fixed additive table; classes
// are distinguished by the lex-least multiplication table under the
// additive table's automorphisms.
struct IsoClass {
  CayleyTable mul;     // canonical representative
  int orbit_size = 0;  // distinct tables in the class
};

// All multiplication tables completing `add` to an additively idempotent
// semiring, one canonical representative per isomorphism class, sorted.
std::vector<IsoClass> enumerate_ai_semirings(const CayleyTable& add);

// Total class count over every semilattice of the order.
int count_ai_semirings(int order);

// Pairing of enumerated classes with same-order catalog entries sharing the
// additive table, via an automorphism of that table.
struct MatchReport {
  struct Row {
    int class_index;
    std::string name;
    std::vector<Element> iso;  // permutation carrying the class rep to the entry
  };
  std::vector<Row> matches;
  std::vector<int> unmatched_classes;
  std::vector<std::string> unmatched_names;
  std::vector<std::string> duplicate_names;  // entries landing on an already-matched class

  bool perfect() const {
    return unmatched_classes.empty() && unmatched_names.empty() && duplicate_names.empty();
  }
};

// Matches classes from enumerate_ai_semirings(add) against the registry
// entries whose additive table equals `add`.
MatchReport match_catalog(const std::vector<IsoClass>& classes, const CayleyTable& add,
                          const Registry& registry);

}  // namespace aisr
