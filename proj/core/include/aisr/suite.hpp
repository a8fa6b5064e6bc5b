#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "aisr/catalog.hpp"

namespace aisr {

enum class ClaimStatus { Passed, Failed, Skipped };

struct ClaimResult {
  std::string id;
  std::string group;
  ClaimStatus status = ClaimStatus::Skipped;
  std::string detail;
  double seconds = 0.0;
};

struct SuiteOptions {
  std::string only;               // restrict to one group ("" = all)
  std::uint64_t seed = 20260816;  // drives the randomized spot checks
  int jobs = 0;                   // worker threads; 0 picks hardware concurrency
  bool full_enumeration = false;  // add the order-4 count over all semilattices
};

struct SuiteReport {
  std::vector<ClaimResult> claims;
  int passed = 0, failed = 0, skipped = 0;
  bool ok = false;

  std::string to_text() const;
  std::string to_json() const;
};

// Claim groups in execution order; `only` must name one of these.
const std::vector<std::string>& claim_groups();

// Runs every checkable claim against the registry. Claims in the catalog
// group act as a gate: if one fails, the remaining groups are skipped.
SuiteReport verify_claims(const Registry& registry, const SuiteOptions& options = {});

}  // namespace aisr
