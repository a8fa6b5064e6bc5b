#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "aisr/satisfaction.hpp"

namespace aisr {

// Syntactic decision procedures for elementary inclusions u ≈ u + q in the
// named small algebras. Exact oracles decide satisfaction outright;
// necessity oracles check a condition every satisfied inclusion must meet,
// so Fails refutes while NecessaryPassed leaves the question open.
enum class Lemma { S2, S4, S10, S44, S46, S47, S53, S56, S57, S59, S60 };

bool lemma_is_exact(Lemma l);
// Whether the oracle's algebra is commutative, in which case inputs are
// rewritten to commutative normal form first.
bool lemma_commutative(Lemma l);
const char* lemma_name(Lemma l);  // "s2", "s4", ...
std::optional<Lemma> lemma_from_name(std::string_view name);

enum class OracleResult { Holds, Fails, NecessaryPassed };

struct OracleVerdict {
  OracleResult result;
  std::string clause;  // deciding clause, e.g. "(2)" or "trivial"
};

OracleVerdict inclusion_oracle(Lemma l, const Term& u, const Word& q);

// Verdict for a full identity via its inclusion decomposition: exact
// lemmas hold iff every elementary inclusion holds; for necessity lemmas a
// single failing inclusion refutes the identity.
OracleVerdict identity_oracle(Lemma l, const Identity& id);

// Subset-XOR solvability used by the s10 oracle: some odd-size subset of
// u's summands has odd-multiplicity letter sets combining to q's.
bool parity_xor_achievable(const Term& u, const Word& q);

// Reference search the XOR system compresses: a multiset of summands of
// size 3^level (level <= max_level) whose product has q's odd letters.
bool product_multiset_achievable(const Term& u, const Word& q, int max_level);

}  // namespace aisr
