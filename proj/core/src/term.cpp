#include "aisr/term.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace aisr {

bool word_less(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.letters < b.letters;
}

Term::Term(std::vector<Word> summands) : summands_(std::move(summands)) {
  for (const auto& w : summands_)
    if (w.letters.empty()) throw std::invalid_argument("empty word in term");
  if (summands_.empty()) throw std::invalid_argument("term must have at least one summand");
  std::sort(summands_.begin(), summands_.end(), word_less);
  summands_.erase(std::unique(summands_.begin(), summands_.end()), summands_.end());
}

bool Term::contains(const Word& w) const {
  return std::binary_search(summands_.begin(), summands_.end(), w,
                            [](const Word& a, const Word& b) { return word_less(a, b); });
}

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  // True when the next token is the identity separator '=' or UTF-8 '≈'.
  bool at_separator() const {
    if (pos < text.size() && text[pos] == '=') return true;
    return text.size() - pos >= 3 && static_cast<unsigned char>(text[pos]) == 0xE2 &&
           static_cast<unsigned char>(text[pos + 1]) == 0x89 &&
           static_cast<unsigned char>(text[pos + 2]) == 0x88;
  }
  void eat_separator() { pos += text[pos] == '=' ? 1 : 3; }
};

Var parse_var(Cursor& c) {
  if (c.done() || !std::islower(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected a variable", c.pos);
  std::string v(1, c.text[c.pos++]);
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) v += c.text[c.pos++];
  return v;
}

int parse_exponent(Cursor& c) {
  ++c.pos;  // '^'
  c.skip_space();
  if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
    throw ParseError("expected an exponent", c.pos);
  std::size_t start = c.pos;
  long v = 0;
  while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
    v = v * 10 + (c.text[c.pos++] - '0');
    if (v > 1000) throw ParseError("exponent too large", start);
  }
  if (v < 1) throw ParseError("exponent must be positive", start);
  return static_cast<int>(v);
}

Word parse_word(Cursor& c) {
  Word w;
  while (true) {
    c.skip_space();
    if (c.done() || c.at_separator() || c.peek() == '+') break;
    if (c.peek() == '*') {
      if (w.letters.empty()) throw ParseError("unexpected '*'", c.pos);
      ++c.pos;
      c.skip_space();
    }
    Var v = parse_var(c);
    int e = 1;
    c.skip_space();
    if (!c.done() && c.peek() == '^') e = parse_exponent(c);
    for (int i = 0; i < e; ++i) w.letters.push_back(v);
  }
  if (w.letters.empty()) throw ParseError("expected a word", c.pos);
  return w;
}

Term parse_term_at(Cursor& c) {
  std::vector<Word> words;
  words.push_back(parse_word(c));
  while (true) {
    c.skip_space();
    if (c.done() || c.at_separator()) break;
    if (c.peek() != '+') throw ParseError("unexpected character", c.pos);
    ++c.pos;
    words.push_back(parse_word(c));
  }
  return Term(std::move(words));
}

}  // namespace

Term parse_term(std::string_view text) {
  Cursor c{text};
  Term t = parse_term_at(c);
  c.skip_space();
  if (!c.done()) throw ParseError("unexpected trailing input", c.pos);
  return t;
}

Identity parse_identity(std::string_view text) {
  Cursor c{text};
  Term lhs = parse_term_at(c);
  c.skip_space();
  if (c.done() || !c.at_separator()) throw ParseError("expected '=' or '≈'", c.pos);
  c.eat_separator();
  Term rhs = parse_term_at(c);
  c.skip_space();
  if (!c.done()) {
    if (c.at_separator()) throw ParseError("multiple identity separators", c.pos);
    throw ParseError("unexpected trailing input", c.pos);
  }
  return Identity{std::move(lhs), std::move(rhs)};
}

IdentityScheme parse_scheme(std::string_view text, const std::vector<Var>& optional_vars) {
  IdentityScheme s;
  s.base = parse_identity(text);
  s.optional_vars = optional_vars;
  std::sort(s.optional_vars.begin(), s.optional_vars.end());
  s.optional_vars.erase(std::unique(s.optional_vars.begin(), s.optional_vars.end()),
                        s.optional_vars.end());
  auto vars = term_variables(s.base);
  for (const auto& v : s.optional_vars)
    if (!std::binary_search(vars.begin(), vars.end(), v))
      throw std::invalid_argument("optional variable " + v + " does not occur in the identity");
  auto survives = [&](const Term& t) {
    for (const auto& w : t.summands()) {
      bool any = false;
      for (const auto& l : w.letters)
        if (!std::binary_search(s.optional_vars.begin(), s.optional_vars.end(), l)) {
          any = true;
          break;
        }
      if (!any) return false;
    }
    return true;
  };
  if (!survives(s.base.lhs) || !survives(s.base.rhs))
    throw std::invalid_argument("deleting all optional variables would empty a word");
  return s;
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    os << w.letters[i];
    if (j - i > 1) os << "^" << j - i;
    i = j;
  }
  return os.str();
}

std::string format_term(const Term& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.summands().size(); ++i) {
    if (i) os << " + ";
    os << format_word(t.summands()[i]);
  }
  return os.str();
}

std::string format_identity(const Identity& id) {
  return format_term(id.lhs) + " ≈ " + format_term(id.rhs);
}

WordStats word_stats(const Word& w) {
  WordStats s;
  s.length = w.length();
  s.head = w.letters.front();
  s.tail = w.letters.back();
  for (const auto& l : w.letters) ++s.multiplicity[l];
  for (const auto& [v, m] : s.multiplicity) s.content.push_back(v);
  s.prefix.letters.assign(w.letters.begin(), w.letters.end() - 1);
  return s;
}

std::vector<Var> odd_letters(const Word& w) {
  std::vector<Var> out;
  for (const auto& [v, m] : word_stats(w).multiplicity)
    if (m % 2 == 1) out.push_back(v);
  return out;
}

std::vector<Var> single_letters(const Word& w) {
  std::vector<Var> out;
  for (const auto& [v, m] : word_stats(w).multiplicity)
    if (m == 1) out.push_back(v);
  return out;
}

std::vector<Word> two_letter_subwords(const Word& w, SubwordMode mode) {
  std::set<std::vector<Var>> seen;
  if (mode == SubwordMode::Contiguous) {
    for (std::size_t i = 0; i + 1 < w.length(); ++i)
      seen.insert({w.letters[i], w.letters[i + 1]});
  } else {
    for (std::size_t i = 0; i < w.length(); ++i)
      for (std::size_t j = i + 1; j < w.length(); ++j)
        seen.insert({w.letters[i], w.letters[j]});
  }
  std::vector<Word> out;
  for (const auto& l : seen) out.push_back(Word{l});
  std::sort(out.begin(), out.end(), word_less);
  return out;
}

std::vector<Word> two_letter_subwords(const Term& t, SubwordMode mode) {
  std::vector<Word> all;
  for (const auto& w : t.summands()) {
    auto part = two_letter_subwords(w, mode);
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end(), word_less);
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

TermSets term_sets(const Term& t, std::size_t k, const Word& q) {
  TermSets s;
  std::set<Var> content, tails;
  const Var q_tail = q.letters.back();
  std::set<Var> q_content(q.letters.begin(), q.letters.end());
  for (const auto& w : t.summands()) {
    for (const auto& l : w.letters) content.insert(l);
    tails.insert(w.letters.back());
    if (w.length() >= 2) {
      Word p;
      p.letters.assign(w.letters.begin(), w.letters.end() - 1);
      s.prefixes.push_back(std::move(p));
    }
    if (w.length() >= k) s.longer.push_back(w);
    if (w.length() <= k) s.shorter.push_back(w);
    if (w.length() == k) s.exact.push_back(w);
    if (w.letters.back() == q_tail) s.tail_matched.push_back(w);
    bool inside = true;
    for (const auto& l : w.letters)
      if (!q_content.count(l)) {
        inside = false;
        break;
      }
    if (inside) s.content_inside.push_back(w);
  }
  s.content.assign(content.begin(), content.end());
  s.tails.assign(tails.begin(), tails.end());
  std::sort(s.prefixes.begin(), s.prefixes.end(), word_less);
  s.prefixes.erase(std::unique(s.prefixes.begin(), s.prefixes.end()), s.prefixes.end());
  return s;
}

std::vector<Identity> expand_scheme(const IdentityScheme& scheme) {
  const auto& opts = scheme.optional_vars;
  std::vector<Identity> out;
  auto strip = [&](const Term& t, unsigned mask) {
    std::vector<Word> words;
    for (const auto& w : t.summands()) {
      Word nw;
      for (const auto& l : w.letters) {
        auto it = std::lower_bound(opts.begin(), opts.end(), l);
        bool deleted = it != opts.end() && *it == l &&
                       (mask >> (it - opts.begin())) & 1u;
        if (!deleted) nw.letters.push_back(l);
      }
      words.push_back(std::move(nw));
    }
    return Term(std::move(words));
  };
  for (unsigned mask = 0; mask < (1u << opts.size()); ++mask) {
    Identity id{strip(scheme.base.lhs, mask), strip(scheme.base.rhs, mask)};
    if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(std::move(id));
  }
  return out;
}

Term term_sum(const Term& a, const Term& b) {
  std::vector<Word> words = a.summands();
  words.insert(words.end(), b.summands().begin(), b.summands().end());
  return Term(std::move(words));
}

Term term_product(const Term& a, const Term& b) {
  std::vector<Word> words;
  for (const auto& u : a.summands())
    for (const auto& v : b.summands()) {
      Word w = u;
      w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
      words.push_back(std::move(w));
    }
  return Term(std::move(words));
}

Word sorted_word(const Word& w) {
  Word s = w;
  std::sort(s.letters.begin(), s.letters.end());
  return s;
}

Term commutative_normal_form(const Term& t) {
  std::vector<Word> words;
  for (const auto& w : t.summands()) words.push_back(sorted_word(w));
  return Term(std::move(words));
}

std::vector<Var> term_variables(const Identity& id) {
  std::set<Var> vars;
  for (const Term* t : {&id.lhs, &id.rhs})
    for (const auto& w : t->summands())
      for (const auto& l : w.letters) vars.insert(l);
  return std::vector<Var>(vars.begin(), vars.end());
}

}  // namespace aisr
