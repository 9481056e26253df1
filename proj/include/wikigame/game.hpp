#pragma once

#include <cstddef>
#include <vector>

namespace wikigame {

// Per-contributor cost of making a unit contribution. One entry per
// contributor; a profile defines a game instance.
struct EffortProfile {
  std::vector<double> betas;

  // Throws std::invalid_argument unless size >= 2 and every beta > 0.
  explicit EffortProfile(std::vector<double> b);

  std::size_t size() const { return betas.size(); }
  double total() const;
  double mean() const;
};

// Non-negative content amounts, one per contributor.
struct StrategyProfile {
  std::vector<double> contributions;

  explicit StrategyProfile(std::vector<double> x);

  std::size_t size() const { return contributions.size(); }
  double total() const;
};

struct UtilityVector {
  std::vector<double> ownership;  // x_i / sum(x), in [0,1]
  std::vector<double> net;        // ownership_i - beta_i * x_i
};

// Fractional ownership and net utility at an arbitrary strategy profile.
// Throws on dimension mismatch or an all-zero profile (ownership is 0/0).
UtilityVector utility(const StrategyProfile& profile, const EffortProfile& efforts);

// Stationarity residual of each contributor's net utility:
//   r_i = (sum_{k != i} x_k) / (sum_j x_j)^2 - beta_i.
// All entries vanish at an interior equilibrium.
std::vector<double> foc_residual(const StrategyProfile& profile, const EffortProfile& efforts);

}  // namespace wikigame
