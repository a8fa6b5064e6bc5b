#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aisr {

// Elements are 0-based internally; all user-facing I/O is 1-based.
using Element = std::uint8_t;

struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Square operation table, row-major, row = left operand.
class CayleyTable {
 public:
  CayleyTable() = default;
  CayleyTable(int order, std::vector<Element> cells);

  // Rows with 1-based entries, as they appear in serialized form.
  static CayleyTable from_rows(const std::vector<std::vector<int>>& rows);

  int order() const { return order_; }
  Element at(int a, int b) const {
    return cells_[static_cast<std::size_t>(a) * order_ + b];
  }
  void set(int a, int b, Element v) {
    cells_[static_cast<std::size_t>(a) * order_ + b] = v;
  }
  const std::vector<Element>& cells() const { return cells_; }
  std::vector<std::vector<int>> rows() const;  // 1-based entries
  CayleyTable transposed() const;

  friend bool operator==(const CayleyTable&, const CayleyTable&) = default;
  friend bool operator<(const CayleyTable& a, const CayleyTable& b) {
    return a.cells_ < b.cells_;
  }

 private:
  int order_ = 0;
  std::vector<Element> cells_;
};

struct Semiring {
  std::string name;
  CayleyTable add;
  CayleyTable mul;

  int order() const { return add.order(); }
  Element plus(int a, int b) const { return add.at(a, b); }
  Element times(int a, int b) const { return mul.at(a, b); }

  bool same_tables(const Semiring& other) const {
    return add == other.add && mul == other.mul;
  }
};

// Axiom check: additive commutative idempotent semigroup, multiplicative
// semigroup, multiplication distributing over addition from both sides.
struct ValidationReport {
  bool ok = true;
  std::string law;                // first violated law, empty when ok
  std::vector<int> witness;       // 1-based elements, one per law argument
  std::string message() const;
};

ValidationReport validate_axioms(const CayleyTable& add, const CayleyTable& mul);
ValidationReport validate_axioms(const Semiring& s);

struct Homomorphism {
  std::vector<Element> map;  // image of each source element
  bool injective = false;
  bool surjective = false;
};

std::vector<Homomorphism> all_homomorphisms(const Semiring& from, const Semiring& to);
std::optional<std::vector<Element>> find_isomorphism(const Semiring& a, const Semiring& b);

// Throws DataError if the subset is empty, out of range, or not closed.
Semiring subalgebra(const Semiring& s, const std::vector<int>& subset_one_based);

struct Congruence {
  std::vector<std::vector<int>> blocks;  // 0-based, each block sorted, blocks by least element
  std::vector<int> block_of;             // element -> block index

  std::size_t size() const { return blocks.size(); }
  bool is_equality() const { return blocks.size() == block_of.size(); }
  std::string to_string() const;  // e.g. "{1,2|3|4}" with 1-based elements
};

// All congruences, ordered by their restricted-growth encoding. Guarded to
// order <= 6 (throws DataError beyond).
std::vector<Congruence> congruences(const Semiring& s);

Semiring quotient(const Semiring& s, const Congruence& theta);

// Pair of congruences with trivial intersection whose quotients are
// isomorphic to a and b respectively; first such pair in congruence order.
struct SubdirectWitness {
  Congruence theta1, theta2;
};
std::optional<SubdirectWitness> subdirect_witness(const Semiring& s,
                                                  const Semiring& a,
                                                  const Semiring& b);

// Same additive table, transposed multiplication.
Semiring dual(const Semiring& s);

// Permutations p of {0..n-1} with p(t(a,b)) = t(p(a), p(b)).
std::vector<std::vector<Element>> table_automorphisms(const CayleyTable& t);

}  // namespace aisr
