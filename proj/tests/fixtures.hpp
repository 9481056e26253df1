#pragma once

// Shared generators for the unit and acceptance suites.

#include <cstddef>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "wikigame/game.hpp"

namespace fixtures {

// Effort profile that is feasible for every contributor: sample positive
// ownership shares summing to one and invert the equilibrium ownership map.
inline wikigame::EffortProfile feasible_profile(std::mt19937_64& rng, std::size_t n,
                                                double scale = 1.0) {
  std::uniform_real_distribution<double> unit(0.1, 1.0);
  std::vector<double> raw(n);
  double sum = 0.0;
  for (double& r : raw) sum += (r = unit(rng));
  std::vector<double> betas(n);
  for (std::size_t i = 0; i < n; ++i) betas[i] = scale * (1.0 - raw[i] / sum);
  return wikigame::EffortProfile(std::move(betas));
}

// Per-editor sentence counts with exactly `levels` distinct values (1..levels)
// summing to `total`. Deterministic.
inline std::vector<std::size_t> level_targets(std::size_t editors, std::size_t total,
                                              std::size_t levels) {
  if (levels < 2 || editors < levels) throw std::invalid_argument("bad level fixture shape");
  // One editor pinned per level, the rest start at level 1 and are promoted
  // greedily until the sum matches.
  std::vector<std::size_t> value;
  for (std::size_t v = levels; v >= 1; --v) value.push_back(v);
  value.resize(editors, 1);
  std::size_t sum = levels * (levels + 1) / 2 + (editors - levels);
  if (total < sum || total > levels * editors) {
    throw std::invalid_argument("level fixture total out of range");
  }
  std::size_t need = total - sum;
  std::size_t pool = editors - levels;  // promotable level-1 editors
  for (std::size_t v = levels; v >= 2 && need > 0; --v) {
    const std::size_t gain = v - 1;
    const std::size_t promote = std::min(pool, need / gain);
    for (std::size_t k = 0; k < promote; ++k) value[editors - pool + k] = v;
    pool -= promote;
    need -= promote * gain;
  }
  if (need != 0) throw std::logic_error("level fixture greedy failed");
  return value;
}

// Effort profile whose equilibrium ownership is exactly targets[i] / total.
// `total` a power of two keeps every quantity exactly representable.
inline wikigame::EffortProfile profile_from_targets(const std::vector<std::size_t>& targets,
                                                    std::size_t total) {
  std::vector<double> betas;
  betas.reserve(targets.size());
  for (std::size_t t : targets) {
    betas.push_back(1.0 - static_cast<double>(t) / static_cast<double>(total));
  }
  return wikigame::EffortProfile(std::move(betas));
}

struct PageShape {
  std::string name;
  std::size_t edits;
  std::size_t editors;
  std::size_t sentences;  // power of two
  std::size_t levels;
};

// Nine-article corpus shape (edit and editor counts per article).
inline std::vector<PageShape> corpus_shapes() {
  return {
      {"aikido", 72, 62, 256, 5},
      {"angel", 341, 277, 1024, 6},
      {"baryon", 73, 62, 256, 5},
      {"board_game", 220, 155, 512, 6},
      {"buckminster_fuller", 65, 55, 256, 5},
      {"cdc", 65, 58, 256, 5},
      {"classical_mechanics", 202, 165, 512, 6},
      {"dartmouth_college", 70, 55, 256, 5},
      {"erin_brockovich", 59, 54, 256, 6},
  };
}

}  // namespace fixtures
