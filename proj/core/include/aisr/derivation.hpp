#pragma once

#include <map>
#include <string>
#include <vector>

#include "aisr/catalog.hpp"
#include "aisr/term.hpp"

namespace aisr {

enum class StepMode { Exact, Search };

// One rewrite in an equational derivation. Exact mode gives the rule tag
// and the substitution; the word context scaling the instance is found
// automatically. Search mode proves the step by bounded bidirectional
// rewriting with the named rules ("*" or empty = every rule of the chain).
struct ProofStep {
  std::string rule;  // "AI" for pure set reasoning, otherwise rule tags, comma-separated
  StepMode mode = StepMode::Exact;
  std::map<Var, Word> subst;
  int depth = 3;
};

struct ProofChain {
  std::string name;
  std::string semiring;  // registry name used for model cross-checks
  std::vector<std::pair<std::string, Identity>> basis;
  std::vector<Term> terms;
  std::vector<ProofStep> steps;  // one per adjacent term pair

  Identity claim() const { return Identity{terms.front(), terms.back()}; }
};

struct StepReport {
  bool ok = false;
  std::string detail;
};

struct ChainReport {
  bool ok = false;
  std::vector<StepReport> steps;
  std::string detail;
};

// Validates from -> to as one application of the step's rule: for some
// substitution instance L' ≈ R' of the rule scaled by a word context on
// each side (either orientation), L' lies in `from` and `to` is `from`
// with L' rewritten to R', keeping any subset of L'.
StepReport check_step(const Term& from, const Term& to, const ProofStep& step,
                      const std::vector<std::pair<std::string, Identity>>& basis);

// Runs every step and cross-checks each adjacent pair by exhaustive model
// checking in the chain's semiring.
ChainReport check_chain(const ProofChain& chain, const Registry& registry);

std::vector<ProofChain> builtin_proof_corpus();

std::string chains_to_json(const std::vector<ProofChain>& chains);
std::vector<ProofChain> chains_from_json(const std::string& text);
std::vector<ProofChain> load_chains(const std::string& path);
void save_chains(const std::vector<ProofChain>& chains, const std::string& path);

}  // namespace aisr
