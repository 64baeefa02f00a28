#pragma once

// Seeded property campaigns over the coherence relations. Sample i of a
// campaign draws from its own stream (sampling::derive_seed), so results do
// not depend on how samples are sharded across threads.

#include <cstdint>
#include <optional>
#include <string>

#include "geocoh/qubit.hpp"

namespace geocoh::verification {

enum class Campaign { kT1, kC1, kL1, kT2, kT3, kLemma2, kC4, kOracle1, kOracle2, kOracle3 };

Campaign parse_campaign(const std::string& name);
const char* campaign_name(Campaign c);
bool campaign_uses_state(Campaign c);

struct CampaignOptions {
  std::uint64_t seed = 0;
  int samples = 10000;
  int threads = 0;  // 0 = hardware concurrency
  // Replaces every random state with this one (state campaigns only).
  std::optional<QubitState> forced_state;
};

struct CampaignReport {
  std::string name;
  int samples = 0;          // samples actually evaluated
  int skipped = 0;          // excluded as degenerate
  double worst_slack = 0.0;  // min over samples; +inf if the campaign has no slack
  long long worst_index = -1;
  double max_abs_diff = 0.0;  // for equivalence campaigns
  double tolerance = 0.0;
  int violations = 0;
  int saturated = 0;

  bool passed() const { return violations == 0; }
};

CampaignReport run_campaign(Campaign which, const CampaignOptions& options);

}  // namespace geocoh::verification
