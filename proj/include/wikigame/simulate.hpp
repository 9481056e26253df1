#pragma once

#include <cstdint>
#include <vector>

#include "wikigame/game.hpp"
#include "wikigame/wiki.hpp"

namespace wikigame::sim {

struct SimConfig {
  std::size_t editors = 0;   // N, must match efforts.size()
  std::size_t edits = 0;     // E >= editors
  EffortProfile efforts;     // per-editor unit-contribution cost
  std::uint64_t seed = 0;
  std::size_t sentences = 0; // final sentence count; 0 picks 3 * editors
};

// "e001", "e002", ...
std::vector<std::string> editor_ids(std::size_t n);

// Largest-remainder apportionment of `total` units proportionally to
// non-negative weights.
std::vector<std::size_t> apportion(const std::vector<double>& weights, std::size_t total);

// Deterministic synthetic revision history. Edit counts are apportioned
// proportionally to the equilibrium strategies of `efforts` (at least one
// edit each), final sentence ownership is apportioned proportionally to the
// equilibrium ownership shares, and every edit by editor i records effort
// exactly beta_i, so downstream effort estimation recovers the profile.
std::vector<wiki::Edit> generate_history(const SimConfig& config);

}  // namespace wikigame::sim
