#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperlat/json_io.hpp"

namespace hyperlat {

struct ClaimConfig {
  std::uint64_t seed = 1;
  std::size_t samples = 0;       // 0: the claim's default instance count
  std::optional<Rational> bound;  // census claims: |height|^2 bound
  std::size_t budget = 2'000'000;
  unsigned threads = 0;
};

struct ClaimReport {
  std::string claim;
  bool pass = false;
  Json evidence;
  std::vector<std::string> citations;  // library operations the check relies on
  double seconds = 0;                  // wall time, kept out of the JSON
};

/// Every claim id, sorted.
std::vector<std::string> claim_ids();
bool is_claim(const std::string& id);
/// Throws std::invalid_argument for an unknown id.
ClaimReport run_claim(const std::string& id, const ClaimConfig& config = {});

/// {"format": 1, "claim", "status": "pass"|"fail", "evidence", "citations"}.
Json to_json(const ClaimReport& report);

}  // namespace hyperlat
