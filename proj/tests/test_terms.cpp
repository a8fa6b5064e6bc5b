#include <doctest.h>

#include <string>
#include <vector>

#include "aisr/term.hpp"

using namespace aisr;

namespace {

Word w(std::vector<Var> letters) { return Word{std::move(letters)}; }

}  // namespace

TEST_CASE("parsing accepts powers, separators, and numbered variables") {
  CHECK(parse_term("x^2y") == Term({w({"x", "x", "y"})}));
  CHECK(parse_term("x1x2") == Term({w({"x1", "x2"})}));
  CHECK(parse_term("x*y") == parse_term("xy"));
  CHECK(parse_term("  x +  y z ") == Term({w({"x"}), w({"y", "z"})}));
  Identity a = parse_identity("xy = yx");
  Identity b = parse_identity("xy ≈ yx");
  CHECK(a == b);
  CHECK(a.lhs == parse_term("xy"));
  CHECK(a.rhs == parse_term("yx"));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_WITH_AS(parse_term("x^0"), "exponent must be positive (at position 2)",
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_term("xY"), "expected a variable (at position 1)", ParseError);
  CHECK_THROWS_WITH_AS(parse_term(""), "expected a word (at position 0)", ParseError);
  CHECK_THROWS_WITH_AS(parse_term("x +"), "expected a word (at position 3)", ParseError);
  CHECK_THROWS_WITH_AS(parse_term("*x"), "unexpected '*' (at position 0)", ParseError);
  CHECK_THROWS_WITH_AS(parse_identity("xy"), "expected '=' or '≈' (at position 2)", ParseError);
  CHECK_THROWS_WITH_AS(parse_identity("x = y = z"),
                       "multiple identity separators (at position 6)", ParseError);
  try {
    parse_term("x^0");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position == 2);
  }
}

TEST_CASE("terms canonicalize: deduplicated summands in length-lex order") {
  Term t = parse_term("yx + x + yx + xx");
  REQUIRE(t.size() == 3);
  CHECK(t.summands()[0] == w({"x"}));
  CHECK(t.summands()[1] == w({"x", "x"}));
  CHECK(t.summands()[2] == w({"y", "x"}));
  CHECK(t.contains(w({"y", "x"})));
  CHECK_FALSE(t.contains(w({"x", "y"})));
  CHECK(word_less(w({"z"}), w({"x", "x"})));   // shorter first
  CHECK(word_less(w({"x", "y"}), w({"y", "x"})));  // then lexicographic
}

TEST_CASE("term construction rejects empty pieces") {
  CHECK_THROWS_WITH_AS(Term({w({})}), "empty word in term", std::invalid_argument);
  CHECK_THROWS_WITH_AS(Term(std::vector<Word>{}), "term must have at least one summand",
                       std::invalid_argument);
}

TEST_CASE("formatting compresses powers") {
  CHECK(format_word(w({"x", "x", "y"})) == "x^2y");
  CHECK(format_word(w({"x", "x", "x"})) == "x^3");
  CHECK(format_word(w({"x1", "x2"})) == "x1x2");
  CHECK(format_term(parse_term("yx + x")) == "x + yx");
  CHECK(format_identity(parse_identity("x y = y x")) == "xy ≈ yx");
}

TEST_CASE("word statistics") {
  WordStats s = word_stats(w({"y", "x", "z"}));
  CHECK(s.head == "y");
  CHECK(s.tail == "z");
  CHECK(s.content == std::vector<Var>{"x", "y", "z"});
  CHECK(s.length == 3);
  CHECK(s.prefix == w({"y", "x"}));
  CHECK(s.multiplicity.at("y") == 1);

  WordStats one = word_stats(w({"x"}));
  CHECK(one.head == "x");
  CHECK(one.tail == "x");
  CHECK(one.prefix.letters.empty());
}

TEST_CASE("odd and single letter selections") {
  Word v = w({"x", "y", "x", "x", "z"});  // x^3 y z interleaved
  CHECK(odd_letters(v) == std::vector<Var>{"x", "y", "z"});
  CHECK(single_letters(v) == std::vector<Var>{"y", "z"});
  Word sq = w({"x", "y", "y", "x"});
  CHECK(odd_letters(sq).empty());
  CHECK(single_letters(sq).empty());
}

TEST_CASE("two-letter subwords of xyx") {
  Word v = w({"x", "y", "x"});
  std::vector<Word> contiguous = two_letter_subwords(v, SubwordMode::Contiguous);
  CHECK(contiguous == std::vector<Word>{w({"x", "y"}), w({"y", "x"})});
  std::vector<Word> scattered = two_letter_subwords(v, SubwordMode::Scattered);
  CHECK(scattered == std::vector<Word>{w({"x", "x"}), w({"x", "y"}), w({"y", "x"})});
}

TEST_CASE("term-level sets relative to a comparison word") {
  Term t = parse_term("x + yxz + y^2 + xzy");
  Word q = w({"z", "x", "y"});  // tail y, content {x,y,z}
  TermSets sets = term_sets(t, 2, q);
  CHECK(sets.content == std::vector<Var>{"x", "y", "z"});
  CHECK(sets.tails == std::vector<Var>{"x", "y", "z"});
  REQUIRE(sets.prefixes.size() == 3);
  CHECK(sets.prefixes[0] == w({"y"}));        // from y^2
  CHECK(sets.prefixes[1] == w({"x", "z"}));   // from xzy
  CHECK(sets.prefixes[2] == w({"y", "x"}));   // from yxz
  CHECK(sets.longer == std::vector<Word>{w({"y", "y"}), w({"x", "z", "y"}), w({"y", "x", "z"})});
  CHECK(sets.shorter == std::vector<Word>{w({"x"}), w({"y", "y"})});
  CHECK(sets.exact == std::vector<Word>{w({"y", "y"})});
  CHECK(sets.tail_matched == std::vector<Word>{w({"y", "y"}), w({"x", "z", "y"})});
  REQUIRE(sets.content_inside.size() == 4);  // all contents are within {x,y,z}
}

TEST_CASE("scheme expansion enumerates deletion patterns") {
  CHECK(expand_scheme(parse_scheme("x1x2x3 = x1x2x3 + y1y2", {"x1"})).size() == 2);
  IdentityScheme s7 = parse_scheme("x1x2x3x4 + x5x6x7 = x5x6x7 + x1x2x3x4", {"x1", "x4", "x7"});
  CHECK(expand_scheme(s7).size() == 8);
  std::vector<Identity> ids = expand_scheme(parse_scheme("xy = xy + xz", {"z"}));
  REQUIRE(ids.size() == 2);
  CHECK(ids[0] == parse_identity("xy = xy + xz"));  // empty deletion first
  CHECK(ids[1] == parse_identity("xy = xy + x"));
}

TEST_CASE("scheme parsing validates the optional variables") {
  CHECK_THROWS_WITH_AS(parse_scheme("xy = yx", {"q"}),
                       "optional variable q does not occur in the identity",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_scheme("x = x + y", {"x"}),
                       "deleting all optional variables would empty a word",
                       std::invalid_argument);
}

TEST_CASE("sum and product of terms") {
  Term a = parse_term("x + y");
  Term b = parse_term("y + z");
  CHECK(term_sum(a, b) == parse_term("x + y + z"));
  CHECK(term_product(a, b) == parse_term("xy + xz + yy + yz"));
  CHECK(term_product(parse_term("x"), parse_term("y")) == parse_term("xy"));
}

TEST_CASE("commutative normal form sorts letters within summands") {
  CHECK(sorted_word(w({"z", "x", "y", "x"})) == w({"x", "x", "y", "z"}));
  CHECK(commutative_normal_form(parse_term("yx + zyx")) == parse_term("xy + xyz"));
  // Sorting can merge summands.
  CHECK(commutative_normal_form(parse_term("xy + yx")).size() == 1);
}

TEST_CASE("variables of an identity") {
  CHECK(term_variables(parse_identity("x1x3 = z + x1")) ==
        std::vector<Var>{"x1", "x3", "z"});
}
