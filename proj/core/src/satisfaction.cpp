#include "aisr/satisfaction.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>

namespace aisr {

namespace {

Element lookup(const std::vector<std::pair<Var, Element>>& assignment, const Var& v) {
  for (const auto& [var, val] : assignment)
    if (var == v) return val;
  throw DataError("unassigned variable: " + v);
}

// Identity compiled to variable indices for fast repeated evaluation.
struct Compiled {
  std::vector<Var> vars;
  std::vector<std::vector<int>> lhs, rhs;  // words as index sequences
};

Compiled compile(const Identity& id) {
  Compiled c;
  c.vars = term_variables(id);
  std::map<Var, int> index;
  for (std::size_t i = 0; i < c.vars.size(); ++i) index[c.vars[i]] = static_cast<int>(i);
  auto side = [&](const Term& t) {
    std::vector<std::vector<int>> words;
    for (const auto& w : t.summands()) {
      std::vector<int> seq;
      seq.reserve(w.length());
      for (const auto& l : w.letters) seq.push_back(index[l]);
      words.push_back(std::move(seq));
    }
    return words;
  };
  c.lhs = side(id.lhs);
  c.rhs = side(id.rhs);
  return c;
}

Element eval_side(const Semiring& s, const std::vector<std::vector<int>>& words,
                  const std::vector<Element>& values) {
  Element acc = 0;
  bool first = true;
  for (const auto& w : words) {
    Element v = values[w[0]];
    for (std::size_t i = 1; i < w.size(); ++i) v = s.times(v, values[w[i]]);
    acc = first ? v : s.plus(acc, v);
    first = false;
  }
  return acc;
}

}  // namespace

std::string Counterexample::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (i) os << ", ";
    os << assignment[i].first << "=" << assignment[i].second;
  }
  os << " gives " << lhs_value << " vs " << rhs_value;
  return os.str();
}

Element eval_word(const Semiring& s, const Word& w,
                  const std::vector<std::pair<Var, Element>>& assignment) {
  Element v = lookup(assignment, w.letters[0]);
  for (std::size_t i = 1; i < w.length(); ++i)
    v = s.times(v, lookup(assignment, w.letters[i]));
  return v;
}

Element eval_term(const Semiring& s, const Term& t,
                  const std::vector<std::pair<Var, Element>>& assignment) {
  Element acc = 0;
  bool first = true;
  for (const auto& w : t.summands()) {
    Element v = eval_word(s, w, assignment);
    acc = first ? v : s.plus(acc, v);
    first = false;
  }
  return acc;
}

Verdict satisfies(const Semiring& s, const Identity& id) {
  Compiled c = compile(id);
  const std::size_t k = c.vars.size();
  if (k > 12) {
    std::ostringstream os;
    os << "identity has " << k << " variables; checking needs " << s.order() << "^" << k
       << " assignments, beyond the 12-variable budget";
    throw BudgetError(os.str());
  }
  const Element n = static_cast<Element>(s.order());
  std::vector<Element> values(k, 0);
  while (true) {
    Element l = eval_side(s, c.lhs, values);
    Element r = eval_side(s, c.rhs, values);
    if (l != r) {
      Counterexample cex;
      for (std::size_t i = 0; i < k; ++i) cex.assignment.emplace_back(c.vars[i], values[i] + 1);
      cex.lhs_value = l + 1;
      cex.rhs_value = r + 1;
      return Verdict{false, std::move(cex)};
    }
    // Odometer with the last variable least significant.
    std::size_t i = k;
    while (i > 0 && values[i - 1] == n - 1) values[--i] = 0;
    if (i == 0) break;
    ++values[i - 1];
  }
  return Verdict{true, std::nullopt};
}

bool satisfies_all(const Semiring& s, const std::vector<Identity>& ids) {
  for (const auto& id : ids)
    if (!satisfies(s, id).holds) return false;
  return true;
}

std::vector<std::pair<Term, Word>> inclusion_decomposition(const Identity& id) {
  std::vector<std::pair<Term, Word>> out;
  for (const auto& q : id.rhs.summands())
    if (!id.lhs.contains(q)) out.emplace_back(id.lhs, q);
  for (const auto& q : id.lhs.summands())
    if (!id.rhs.contains(q)) out.emplace_back(id.rhs, q);
  return out;
}

std::vector<Var> generator_variables(int count) {
  static const Var base[] = {"x", "y", "z"};
  std::vector<Var> out;
  for (int i = 0; i < count; ++i)
    out.push_back(i < 3 ? base[i] : "z" + std::to_string(i - 2));
  return out;
}

std::vector<Word> word_universe(const GeneratorBounds& b) {
  if (b.max_vars < 1 || b.max_vars > 9 || b.max_len < 1)
    throw BudgetError("generator bounds out of range");
  const auto vars = generator_variables(b.max_vars);
  std::vector<Word> out;
  for (int len = 1; len <= b.max_len; ++len) {
    std::vector<int> digits(len, 0);
    while (true) {
      bool ok = true;
      if (b.commutative)
        for (int i = 0; i + 1 < len; ++i)
          if (digits[i] > digits[i + 1]) {
            ok = false;
            break;
          }
      if (ok) {
        Word w;
        for (int d : digits) w.letters.push_back(vars[d]);
        out.push_back(std::move(w));
      }
      int i = len;
      while (i > 0 && digits[i - 1] == b.max_vars - 1) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
  return out;
}

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<Term> term_universe(const GeneratorBounds& b) {
  const auto words = word_universe(b);
  const std::size_t w = words.size();
  std::uint64_t total = 0;
  for (int k = 1; k <= b.max_summands; ++k) total += binomial(w, k);
  if (total > (1u << 22)) throw BudgetError("term universe too large to materialize");
  std::vector<Term> out;
  out.reserve(total);
  std::vector<int> pick;
  auto emit = [&]() {
    std::vector<Word> ws;
    for (int i : pick) ws.push_back(words[i]);
    out.push_back(Term(std::move(ws)));
  };
  // Subsets by size, indices increasing; the universe order is canonical, so
  // index order matches summand order.
  for (int k = 1; k <= b.max_summands && k <= static_cast<int>(w); ++k) {
    pick.assign(k, 0);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      emit();
      int i = k - 1;
      while (i >= 0 && pick[i] == static_cast<int>(w) - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return out;
}

std::vector<Identity> exhaustive_identities(const GeneratorBounds& b) {
  const auto terms = term_universe(b);
  if (terms.size() * terms.size() > (1u << 22))
    throw BudgetError("identity universe too large to materialize");
  std::vector<Identity> out;
  out.reserve(terms.size() * terms.size());
  for (const auto& l : terms)
    for (const auto& r : terms) out.push_back(Identity{l, r});
  return out;
}

RandomTermStream::RandomTermStream(const GeneratorBounds& b, std::uint64_t seed)
    : words_(word_universe(b)), engine_(seed) {
  std::uint64_t acc = 0;
  for (int k = 1; k <= b.max_summands && k <= static_cast<int>(words_.size()); ++k) {
    acc += binomial(words_.size(), k);
    cumulative_.push_back(acc);
  }
}

std::uint64_t RandomTermStream::uniform_below(std::uint64_t n) {
  const std::uint64_t limit = n * (std::numeric_limits<std::uint64_t>::max() / n);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % n;
}

Word RandomTermStream::next_word() {
  return words_[uniform_below(words_.size())];
}

Term RandomTermStream::next_term() {
  std::uint64_t r = uniform_below(cumulative_.back());
  int k = 1;
  while (r >= cumulative_[k - 1]) ++k;
  std::vector<int> idx;
  while (static_cast<int>(idx.size()) < k) {
    int c = static_cast<int>(uniform_below(words_.size()));
    if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
  }
  std::sort(idx.begin(), idx.end());
  std::vector<Word> ws;
  for (int i : idx) ws.push_back(words_[i]);
  return Term(std::move(ws));
}

Identity RandomTermStream::next_identity() {
  Term l = next_term();
  Term r = next_term();
  return Identity{std::move(l), std::move(r)};
}

}  // namespace aisr
