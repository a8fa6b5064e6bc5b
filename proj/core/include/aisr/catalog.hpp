#pragma once

#include <string>
#include <vector>

#include "aisr/algebra.hpp"

namespace aisr {

struct CatalogEntry {
  Semiring semiring;
  std::string provenance;
};

// Named collection of finite additively idempotent semirings: the 112
// numbered order-4 algebras over the shared additive semilattice, six
// definitional 2-element algebras, and the small algebras obtained from
// catalog entries by subalgebra or quotient recipes.
class Registry {
 public:
  static Registry builtin();

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const Semiring* find(const std::string& name) const;
  const Semiring& get(const std::string& name) const;  // throws DataError
  std::vector<std::string> names() const;
  void add(CatalogEntry entry);

  // Names used in source material whose operation tables are not
  // reconstructible from the catalog; kept so reports can mark claims
  // touching them as skipped rather than silently dropping them.
  static const std::vector<std::string>& unresolved_names();

 private:
  std::vector<CatalogEntry> entries_;
};

// Shared order-4 additive table: 3 < 1 < 2, 4 < 1 < 2, 3 and 4 incomparable.
CayleyTable figure_add();

const std::vector<int>& numbered_ids();  // 276..387
std::string numbered_name(int id);       // "S_(4,276)"

// JSON array of {"name","order","add","mul","provenance"} with 1-based
// row-major tables. Load throws DataError on malformed input, annotated
// with the byte position for syntax errors.
Registry load_registry(const std::string& path);
void save_registry(const Registry& registry, const std::string& path);
std::string registry_to_json(const Registry& registry);
Registry registry_from_json(const std::string& text);

}  // namespace aisr
