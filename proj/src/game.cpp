#include "wikigame/game.hpp"

#include <numeric>
#include <stdexcept>

namespace wikigame {

EffortProfile::EffortProfile(std::vector<double> b) : betas(std::move(b)) {
  if (betas.size() < 2) {
    throw std::invalid_argument("effort profile needs at least two contributors");
  }
  for (double beta : betas) {
    if (!(beta > 0.0)) {
      throw std::invalid_argument("effort coefficients must be strictly positive");
    }
  }
}

double EffortProfile::total() const {
  return std::accumulate(betas.begin(), betas.end(), 0.0);
}

double EffortProfile::mean() const { return total() / static_cast<double>(betas.size()); }

StrategyProfile::StrategyProfile(std::vector<double> x) : contributions(std::move(x)) {
  for (double xi : contributions) {
    if (!(xi >= 0.0)) {
      throw std::invalid_argument("contributions must be non-negative");
    }
  }
}

double StrategyProfile::total() const {
  return std::accumulate(contributions.begin(), contributions.end(), 0.0);
}

namespace {

double checked_total(const StrategyProfile& profile, const EffortProfile& efforts) {
  if (profile.size() != efforts.size()) {
    throw std::invalid_argument("strategy and effort profiles differ in length");
  }
  double total = profile.total();
  if (!(total > 0.0)) {
    throw std::invalid_argument("degenerate strategy profile: total content is zero");
  }
  return total;
}

}  // namespace

UtilityVector utility(const StrategyProfile& profile, const EffortProfile& efforts) {
  const double total = checked_total(profile, efforts);
  UtilityVector out;
  out.ownership.reserve(profile.size());
  out.net.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double u = profile.contributions[i] / total;
    out.ownership.push_back(u);
    out.net.push_back(u - efforts.betas[i] * profile.contributions[i]);
  }
  return out;
}

std::vector<double> foc_residual(const StrategyProfile& profile, const EffortProfile& efforts) {
  const double total = checked_total(profile, efforts);
  std::vector<double> residuals;
  residuals.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const double others = total - profile.contributions[i];
    residuals.push_back(others / (total * total) - efforts.betas[i]);
  }
  return residuals;
}

}  // namespace wikigame
