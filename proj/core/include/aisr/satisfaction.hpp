#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "aisr/algebra.hpp"
#include "aisr/term.hpp"

namespace aisr {

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Counterexample {
  std::vector<std::pair<Var, int>> assignment;  // 1-based values, vars sorted
  int lhs_value = 0, rhs_value = 0;             // 1-based
  std::string to_string() const;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;
};

Element eval_word(const Semiring& s, const Word& w,
                  const std::vector<std::pair<Var, Element>>& assignment);
Element eval_term(const Semiring& s, const Term& t,
                  const std::vector<std::pair<Var, Element>>& assignment);

// Exhaustive check over all |S|^k assignments, variables in sorted order,
// first variable most significant; the reported counterexample is the
// lexicographically least. Throws BudgetError beyond 12 variables.
Verdict satisfies(const Semiring& s, const Identity& id);
bool satisfies_all(const Semiring& s, const std::vector<Identity>& ids);

// Elementary inclusions (u, q) standing for u ≈ u + q whose conjunction is
// equivalent to the identity; pairs with q already a summand of u are
// pruned. Left-side pairs (lhs, q in rhs) come first.
std::vector<std::pair<Term, Word>> inclusion_decomposition(const Identity& id);

// Deterministic generation of words, terms, and identities within bounds.
struct GeneratorBounds {
  int max_vars = 2;
  int max_len = 2;
  int max_summands = 2;
  bool commutative = false;  // only nondecreasing words
};

// Variable names in generation order: x, y, z, z1, z2, ... (string-ordered).
std::vector<Var> generator_variables(int count);

// All words within bounds, in canonical (length-lex) order.
std::vector<Word> word_universe(const GeneratorBounds& b);

// All terms with at most max_summands summands; throws BudgetError when the
// universe would exceed 2^22 terms.
std::vector<Term> term_universe(const GeneratorBounds& b);

// All ordered pairs of terms from the universe, as identities.
std::vector<Identity> exhaustive_identities(const GeneratorBounds& b);

// Seeded uniform sampling over the bounded term space: summand count k is
// drawn with weight C(|words|, k), then a uniform k-subset.
class RandomTermStream {
 public:
  RandomTermStream(const GeneratorBounds& b, std::uint64_t seed);
  Term next_term();
  Word next_word();
  Identity next_identity();

 private:
  std::vector<Word> words_;
  std::vector<std::uint64_t> cumulative_;
  std::mt19937_64 engine_;

  std::uint64_t uniform_below(std::uint64_t n);
};

}  // namespace aisr
