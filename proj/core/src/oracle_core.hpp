#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "aisr/oracles.hpp"

// Allocation-free oracle cores shared by the public identity-level API and
// the exhaustive sweep engine. Words are packed into letter-set bitmasks
// once; verdicts carry a clause id instead of formatted text.

namespace aisr::detail {

using Mask = std::uint64_t;

struct PackedWord {
  Mask content = 0, rmask = 0, m1mask = 0, mult_ge2 = 0, prefix_content = 0;
  int length = 0;
  int tail = -1;
  std::vector<Mask> pair_contents;  // contents of scattered two-letter subwords
};

inline PackedWord pack_word(const std::vector<int>& letters) {
  PackedWord p;
  p.length = static_cast<int>(letters.size());
  p.tail = letters.back();
  std::map<int, int> mult;
  for (int l : letters) ++mult[l];
  for (const auto& [l, m] : mult) {
    p.content |= Mask{1} << l;
    if (m % 2 == 1) p.rmask |= Mask{1} << l;
    if (m == 1) p.m1mask |= Mask{1} << l;
    if (m >= 2) p.mult_ge2 |= Mask{1} << l;
  }
  for (std::size_t i = 0; i + 1 < letters.size(); ++i)
    p.prefix_content |= Mask{1} << letters[i];
  std::set<Mask> pairs;
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      pairs.insert((Mask{1} << letters[i]) | (Mask{1} << letters[j]));
  p.pair_contents.assign(pairs.begin(), pairs.end());
  return p;
}

// Deciding clause; C1/C2/C3 refer to the per-oracle conditions in order.
enum class Clause : std::uint8_t { Trivial, C1, C2, C3, All };

struct CoreVerdict {
  OracleResult result;
  Clause clause;
  int letter = -1;  // offending letter for s44's per-letter condition
};

struct CoreInput {
  const PackedWord* const* u;
  int count;
  const PackedWord* q;
};

inline Mask content_union(const CoreInput& in) {
  Mask m = 0;
  for (int i = 0; i < in.count; ++i) m |= in.u[i]->content;
  return m;
}

inline bool has_summand_at_least(const CoreInput& in, int len) {
  for (int i = 0; i < in.count; ++i)
    if (in.u[i]->length >= len) return true;
  return false;
}

inline CoreVerdict core_holds(Clause c) { return {OracleResult::Holds, c, -1}; }
inline CoreVerdict core_passed(Clause c) { return {OracleResult::NecessaryPassed, c, -1}; }
inline CoreVerdict core_fails(Clause c, int letter = -1) {
  return {OracleResult::Fails, c, letter};
}

inline CoreVerdict s2_core(const CoreInput& in) {
  if (has_summand_at_least(in, 3)) return core_holds(Clause::C1);
  Mask c1 = 0, c2 = 0;
  for (int i = 0; i < in.count; ++i)
    (in.u[i]->length == 1 ? c1 : c2) |= in.u[i]->content;
  if (c1 & c2) return core_holds(Clause::C2);
  if (in.q->length > 2 || in.q->length == 1) return core_fails(Clause::C3);
  if ((in.q->content & ~c2) == 0) return core_holds(Clause::C3);
  return core_fails(Clause::C3);
}

inline CoreVerdict s4_core(const CoreInput& in) {
  if (in.q->content & ~content_union(in)) return core_fails(Clause::C1);
  if (!has_summand_at_least(in, 2)) return core_fails(Clause::C2);
  Mask pu = 0, tu = 0;
  for (int i = 0; i < in.count; ++i) {
    pu |= in.u[i]->prefix_content;
    tu |= Mask{1} << in.u[i]->tail;
  }
  Mask puq = pu | in.q->prefix_content;
  Mask tuq = tu | (Mask{1} << in.q->tail);
  if ((pu & tu) == 0 && (puq & tuq) != 0) return core_fails(Clause::C3);
  return core_holds(Clause::C3);
}

inline bool rmask_system_solvable(const CoreInput& in) {
  // Odd-size subset of summands whose odd-letter masks XOR to q's; bit 0
  // tracks subset-size parity.
  Mask basis[64] = {};
  auto insert = [&](Mask v) {
    for (int b = 63; b >= 0 && v; --b) {
      if (!((v >> b) & 1)) continue;
      if (!basis[b]) {
        basis[b] = v;
        return;
      }
      v ^= basis[b];
    }
  };
  for (int i = 0; i < in.count; ++i) insert((in.u[i]->rmask << 1) | 1);
  Mask v = (in.q->rmask << 1) | 1;
  for (int b = 63; b >= 0 && v; --b)
    if (((v >> b) & 1) && basis[b]) v ^= basis[b];
  return v == 0;
}

inline CoreVerdict s10_core(const CoreInput& in) {
  if (in.q->content & ~content_union(in)) return core_fails(Clause::C1);
  if (rmask_system_solvable(in)) return core_holds(Clause::C2);
  return core_fails(Clause::C2);
}

inline CoreVerdict s44_core(const CoreInput& in) {
  if (in.q->length < 2) return core_fails(Clause::C1);
  bool any_inside = false;
  Mask pending = in.q->m1mask;  // letters still needing a witness
  for (int i = 0; i < in.count; ++i) {
    if (in.u[i]->content & ~in.q->content) continue;
    any_inside = true;
    pending &= in.u[i]->mult_ge2;
  }
  if (!any_inside) return core_fails(Clause::C2);
  if (pending) {
    int letter = 0;
    while (!((pending >> letter) & 1)) ++letter;
    return core_fails(Clause::C3, letter);
  }
  return core_passed(Clause::All);
}

inline CoreVerdict s46_core(const CoreInput& in) {
  if (in.q->length < 2) return core_fails(Clause::C1);
  if ((in.q->m1mask >> in.q->tail) & 1) {
    for (int i = 0; i < in.count; ++i)
      if (!(in.u[i]->content & ~in.q->content) &&
          !((in.u[i]->prefix_content >> in.q->tail) & 1))
        return core_passed(Clause::C2);
    return core_fails(Clause::C2);
  }
  return core_passed(Clause::All);
}

inline CoreVerdict s47_core(const CoreInput& in) {
  if (in.q->length >= 3) return core_passed(Clause::C1);
  if (in.q->length == 1) return core_fails(Clause::C1);
  for (int i = 0; i < in.count; ++i)
    if (in.u[i]->length <= 2 && !(in.u[i]->content & ~in.q->content))
      return core_passed(Clause::C2);
  return core_fails(Clause::C2);
}

inline CoreVerdict s53_core(const CoreInput& in) {
  if (!has_summand_at_least(in, 2)) return core_fails(Clause::C1);
  if (in.q->content & ~content_union(in)) return core_fails(Clause::C2);
  for (Mask qc : in.q->pair_contents) {
    bool found = false;
    for (int i = 0; i < in.count && !found; ++i)
      for (Mask uc : in.u[i]->pair_contents)
        if ((uc & ~qc) == 0) {
          found = true;
          break;
        }
    if (!found) return core_fails(Clause::C3);
  }
  return core_passed(Clause::All);
}

inline CoreVerdict s56_core(const CoreInput& in) {
  if (!has_summand_at_least(in, 2)) return core_fails(Clause::C1);
  bool tail_match = false, long_tail_match = false;
  for (int i = 0; i < in.count; ++i)
    if (in.u[i]->tail == in.q->tail) {
      tail_match = true;
      if (in.u[i]->length >= 2) long_tail_match = true;
    }
  if (!tail_match) return core_fails(Clause::C2);
  if (in.q->length >= 2 && !long_tail_match) return core_fails(Clause::C3);
  return core_passed(Clause::All);
}

inline CoreVerdict s57_core(const CoreInput& in) {
  if (!has_summand_at_least(in, 2)) return core_fails(Clause::C1);
  Mask pu = 0;
  for (int i = 0; i < in.count; ++i) pu |= in.u[i]->prefix_content;
  if (in.q->prefix_content & ~pu) return core_fails(Clause::C2);
  if (!((content_union(in) >> in.q->tail) & 1)) return core_fails(Clause::C3);
  return core_passed(Clause::All);
}

inline CoreVerdict s59_core(const CoreInput& in) {
  if (has_summand_at_least(in, 3)) return core_passed(Clause::C1);
  if (in.q->length > 2) return core_fails(Clause::C2);
  if (in.q->length == 1) {
    if ((in.q->content & ~content_union(in)) == 0) return core_passed(Clause::C2);
    return core_fails(Clause::C2);
  }
  Mask c2 = 0;
  for (int i = 0; i < in.count; ++i)
    if (in.u[i]->length == 2) c2 |= in.u[i]->content;
  if ((in.q->content & ~c2) == 0) return core_passed(Clause::C2);
  return core_fails(Clause::C2);
}

inline CoreVerdict s60_core(const CoreInput& in) {
  if (!has_summand_at_least(in, 2)) return core_fails(Clause::C1);
  Mask c2 = 0;
  for (int i = 0; i < in.count; ++i)
    if (in.u[i]->length >= 2) c2 |= in.u[i]->content;
  if (in.q->content & ~c2) return core_fails(Clause::C2);
  return core_passed(Clause::All);
}

inline CoreVerdict dispatch(Lemma l, const CoreInput& in) {
  switch (l) {
    case Lemma::S2: return s2_core(in);
    case Lemma::S4: return s4_core(in);
    case Lemma::S10: return s10_core(in);
    case Lemma::S44: return s44_core(in);
    case Lemma::S46: return s46_core(in);
    case Lemma::S47: return s47_core(in);
    case Lemma::S53: return s53_core(in);
    case Lemma::S56: return s56_core(in);
    case Lemma::S57: return s57_core(in);
    case Lemma::S59: return s59_core(in);
    case Lemma::S60: return s60_core(in);
  }
  return core_fails(Clause::C1);
}

}  // namespace aisr::detail
