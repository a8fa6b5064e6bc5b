#pragma once

#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace aisr {

// Variables are lowercase letters with an optional numeric suffix: x, y1, z12.
using Var = std::string;

// Nonempty sequence of variables under juxtaposition.
struct Word {
  std::vector<Var> letters;

  std::size_t length() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
  // Container ordering only; the canonical summand order is word_less.
  friend bool operator<(const Word& a, const Word& b) { return a.letters < b.letters; }
};

// Length-lexicographic order; the canonical order on summands.
bool word_less(const Word& a, const Word& b);

// Finite nonempty set of words; summands kept sorted and deduplicated.
class Term {
 public:
  Term() = default;
  explicit Term(std::vector<Word> summands);  // canonicalizes

  const std::vector<Word>& summands() const { return summands_; }
  std::size_t size() const { return summands_.size(); }
  bool contains(const Word& w) const;

  friend bool operator==(const Term&, const Term&) = default;
  friend bool operator<(const Term& a, const Term& b) { return a.summands_ < b.summands_; }

 private:
  std::vector<Word> summands_;
};

struct Identity {
  Term lhs, rhs;
  friend bool operator==(const Identity&, const Identity&) = default;
};

// Identity with variables that may be uniformly deleted; every deletion
// pattern must leave all words nonempty.
struct IdentityScheme {
  Identity base;
  std::vector<Var> optional_vars;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// Grammar: term := word ('+' word)*; word := factor+; factor := var ('^' int)?
// with optional '*' between factors; identity := term ('=' | '≈') term.
Term parse_term(std::string_view text);
Identity parse_identity(std::string_view text);
IdentityScheme parse_scheme(std::string_view text, const std::vector<Var>& optional_vars);

std::string format_word(const Word& w);    // power-compressed: xxy -> x^2y
std::string format_term(const Term& t);
std::string format_identity(const Identity& id);

// Per-word statistics.
struct WordStats {
  Var head, tail;                    // first and last letter
  std::vector<Var> content;          // distinct letters, sorted
  std::size_t length = 0;
  std::map<Var, int> multiplicity;
  Word prefix;                       // w with its last letter removed; may be empty
};
WordStats word_stats(const Word& w);

// Letter selections on a single word.
std::vector<Var> odd_letters(const Word& w);     // letters of odd multiplicity
std::vector<Var> single_letters(const Word& w);  // letters of multiplicity one

enum class SubwordMode { Contiguous, Scattered };

// Two-letter subwords of a word: contiguous takes adjacent pairs, scattered
// takes every ordered pair of positions i < j. Sorted and deduplicated.
std::vector<Word> two_letter_subwords(const Word& w, SubwordMode mode);
std::vector<Word> two_letter_subwords(const Term& t, SubwordMode mode);

// Term-level selections relative to a comparison word q.
struct TermSets {
  std::vector<Var> content;          // union of summand contents, sorted
  std::vector<Var> tails;            // distinct last letters, sorted
  std::vector<Word> prefixes;        // prefixes of summands of length >= 2
  std::vector<Word> longer, shorter, exact;   // length >= k, <= k, == k
  std::vector<Word> tail_matched;    // summands whose tail equals q's tail
  std::vector<Word> content_inside;  // summands with content inside q's content
};
TermSets term_sets(const Term& t, std::size_t k, const Word& q);

// All identities obtained by deleting subsets of the optional variables,
// deduplicated, deletion subsets in bitmask order.
std::vector<Identity> expand_scheme(const IdentityScheme& scheme);

Term term_sum(const Term& a, const Term& b);
Term term_product(const Term& a, const Term& b);  // pairwise concatenation

Word sorted_word(const Word& w);                  // letters sorted
Term commutative_normal_form(const Term& t);      // sort each summand's letters

std::vector<Var> term_variables(const Identity& id);  // sorted distinct

}  // namespace aisr
