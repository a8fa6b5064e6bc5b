#include "aisr/oracles.hpp"

#include <algorithm>
#include <map>

#include "oracle_core.hpp"

namespace aisr {

bool lemma_is_exact(Lemma l) {
  return l == Lemma::S2 || l == Lemma::S4 || l == Lemma::S10;
}

bool lemma_commutative(Lemma l) {
  return l == Lemma::S44 || l == Lemma::S53;
}

const char* lemma_name(Lemma l) {
  switch (l) {
    case Lemma::S2: return "s2";
    case Lemma::S4: return "s4";
    case Lemma::S10: return "s10";
    case Lemma::S44: return "s44";
    case Lemma::S46: return "s46";
    case Lemma::S47: return "s47";
    case Lemma::S53: return "s53";
    case Lemma::S56: return "s56";
    case Lemma::S57: return "s57";
    case Lemma::S59: return "s59";
    case Lemma::S60: return "s60";
  }
  return "";
}

std::optional<Lemma> lemma_from_name(std::string_view name) {
  static const std::pair<std::string_view, Lemma> table[] = {
      {"s2", Lemma::S2},   {"s4", Lemma::S4},   {"s10", Lemma::S10}, {"s44", Lemma::S44},
      {"s46", Lemma::S46}, {"s47", Lemma::S47}, {"s53", Lemma::S53}, {"s56", Lemma::S56},
      {"s57", Lemma::S57}, {"s59", Lemma::S59}, {"s60", Lemma::S60}};
  for (const auto& [n, l] : table)
    if (n == name) return l;
  return std::nullopt;
}

namespace {

struct Packed {
  std::vector<detail::PackedWord> u;
  detail::PackedWord q;
  bool trivial = false;
  std::vector<std::string> letter_names;
};

Packed pack(const Term& u, const Word& q, bool commutative) {
  Packed out;
  std::map<Var, int> ids;
  auto intern = [&](const Word& w) {
    std::vector<int> seq;
    for (const auto& l : w.letters) {
      auto [it, fresh] = ids.emplace(l, static_cast<int>(ids.size()));
      if (fresh && it->second >= 62) throw DataError("too many distinct variables for the oracle");
      seq.push_back(it->second);
    }
    if (commutative) std::sort(seq.begin(), seq.end());
    return seq;
  };
  std::vector<std::vector<int>> summands;
  for (const auto& w : u.summands()) {
    auto seq = intern(w);
    if (std::find(summands.begin(), summands.end(), seq) == summands.end())
      summands.push_back(std::move(seq));
  }
  auto qseq = intern(q);
  out.trivial = std::find(summands.begin(), summands.end(), qseq) != summands.end();
  for (const auto& seq : summands) out.u.push_back(detail::pack_word(seq));
  out.q = detail::pack_word(qseq);
  out.letter_names.resize(ids.size());
  for (const auto& [name, id] : ids) out.letter_names[id] = name;
  return out;
}

std::string clause_text(Lemma l, const detail::CoreVerdict& v,
                        const std::vector<std::string>& letters) {
  using detail::Clause;
  auto id = [&]() -> std::string {
    switch (v.clause) {
      case Clause::Trivial: return "trivial";
      case Clause::C1: return "(1)";
      case Clause::C2: return "(2)";
      case Clause::C3: return "(3)";
      case Clause::All: return "(all)";
    }
    return "";
  }();
  if (v.result != OracleResult::Fails) return id;
  switch (l) {
    case Lemma::S2:
      return id + ": q must be a two-letter word over the length-2 summand content";
    case Lemma::S4:
      if (v.clause == Clause::C1) return id + ": c(q) is not inside c(u)";
      if (v.clause == Clause::C2) return id + ": u has no summand of length >= 2";
      return id + ": adding q breaks the prefix/tail separation of u";
    case Lemma::S10:
      if (v.clause == Clause::C1) return id + ": c(q) is not inside c(u)";
      return id + ": no odd-size combination of summands matches q's odd letters";
    case Lemma::S44:
      if (v.clause == Clause::C1) return id + ": q has a single letter";
      if (v.clause == Clause::C2) return id + ": no summand has content inside c(q)";
      return id + ": letter " + (v.letter >= 0 ? letters[v.letter] : "?") +
             " occurs once in q but at least twice in every candidate summand";
    case Lemma::S46:
      if (v.clause == Clause::C1) return id + ": q has a single letter";
      return id + ": q's tail occurs once, but every summand inside c(q) uses it early";
    case Lemma::S47:
      if (v.clause == Clause::C1) return id + ": q has a single letter";
      return id + ": no summand of length <= 2 has content inside c(q)";
    case Lemma::S53:
      if (v.clause == Clause::C1) return id + ": u has no summand of length >= 2";
      if (v.clause == Clause::C2) return id + ": c(q) is not inside c(u)";
      return id + ": a two-letter subword of q has no counterpart in u";
    case Lemma::S56:
      if (v.clause == Clause::C1) return id + ": u has no summand of length >= 2";
      if (v.clause == Clause::C2) return id + ": no summand ends with q's last letter";
      return id + ": no summand of length >= 2 ends with q's last letter";
    case Lemma::S57:
      if (v.clause == Clause::C1) return id + ": u has no summand of length >= 2";
      if (v.clause == Clause::C2) return id + ": c(p(q)) is not inside c(p(u))";
      return id + ": q's tail does not occur in u";
    case Lemma::S59:
      return id + ": q does not fit the short-summand structure of u";
    case Lemma::S60:
      if (v.clause == Clause::C1) return id + ": u has no summand of length >= 2";
      return id + ": c(q) is not inside the content of the long summands";
  }
  return id;
}

}  // namespace

bool parity_xor_achievable(const Term& u, const Word& q) {
  Packed p = pack(u, q, false);
  std::vector<const detail::PackedWord*> ptrs;
  for (const auto& w : p.u) ptrs.push_back(&w);
  detail::CoreInput in{ptrs.data(), static_cast<int>(ptrs.size()), &p.q};
  return detail::rmask_system_solvable(in);
}

bool product_multiset_achievable(const Term& u, const Word& q, int max_level) {
  Packed p = pack(u, q, false);
  std::vector<detail::Mask> rs;
  for (const auto& w : p.u) rs.push_back(w.rmask);
  const detail::Mask target = p.q.rmask;
  // Only the parity of each multiplicity matters: the product's odd-letter
  // mask is the XOR over summands repeated an odd number of times.
  for (int level = 0; level <= max_level; ++level) {
    long long size = 1;
    for (int i = 0; i < level; ++i) size *= 3;
    bool found = false;
    auto walk = [&](auto&& self, std::size_t i, long long left, detail::Mask acc) -> void {
      if (found) return;
      if (i + 1 == rs.size()) {
        if ((acc ^ (left % 2 ? rs[i] : 0)) == target) found = true;
        return;
      }
      for (long long c = 0; c <= left && !found; ++c)
        self(self, i + 1, left - c, acc ^ (c % 2 ? rs[i] : 0));
    };
    if (!rs.empty()) walk(walk, 0, size, 0);
    if (found) return true;
  }
  return false;
}

OracleVerdict inclusion_oracle(Lemma l, const Term& u, const Word& q) {
  Packed p = pack(u, q, lemma_commutative(l));
  if (p.trivial) {
    return {lemma_is_exact(l) ? OracleResult::Holds : OracleResult::NecessaryPassed, "trivial"};
  }
  std::vector<const detail::PackedWord*> ptrs;
  for (const auto& w : p.u) ptrs.push_back(&w);
  detail::CoreInput in{ptrs.data(), static_cast<int>(ptrs.size()), &p.q};
  detail::CoreVerdict v = detail::dispatch(l, in);
  return {v.result, clause_text(l, v, p.letter_names)};
}

OracleVerdict identity_oracle(Lemma l, const Identity& id) {
  auto pairs = inclusion_decomposition(id);
  if (pairs.empty())
    return {lemma_is_exact(l) ? OracleResult::Holds : OracleResult::NecessaryPassed, "trivial"};
  std::string last_clause;
  for (const auto& [u, q] : pairs) {
    OracleVerdict v = inclusion_oracle(l, u, q);
    if (v.result == OracleResult::Fails)
      return {OracleResult::Fails, "inclusion of " + format_word(q) + " " + v.clause};
    last_clause = v.clause;
  }
  OracleResult r = lemma_is_exact(l) ? OracleResult::Holds : OracleResult::NecessaryPassed;
  return {r, pairs.size() == 1 ? last_clause : "all inclusions"};
}

}  // namespace aisr
