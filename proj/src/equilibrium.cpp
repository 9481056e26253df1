#include "wikigame/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace wikigame {

const char* to_string(SolveMethod m) {
  switch (m) {
    case SolveMethod::ClosedForm: return "closed-form";
    case SolveMethod::Spectral: return "spectral";
    case SolveMethod::BestResponseDynamics: return "best-response-dynamics";
  }
  return "unknown";
}

std::vector<bool> feasibility(const EffortProfile& efforts) {
  const double sum = efforts.total();
  const double n_minus_1 = static_cast<double>(efforts.size()) - 1.0;
  std::vector<bool> out;
  out.reserve(efforts.size());
  for (double beta : efforts.betas) {
    out.push_back(n_minus_1 * beta < sum);
  }
  return out;
}

std::vector<std::size_t> prune_active(const EffortProfile& efforts) {
  std::vector<std::size_t> active(efforts.size());
  std::iota(active.begin(), active.end(), std::size_t{0});

  for (;;) {
    const double na = static_cast<double>(active.size());
    double sum = 0.0;
    for (std::size_t i : active) sum += efforts.betas[i];

    // Highest-beta violator of the positivity condition on the current set;
    // ties resolved towards the larger index.
    std::ptrdiff_t worst = -1;
    for (std::size_t pos = 0; pos < active.size(); ++pos) {
      const double beta = efforts.betas[active[pos]];
      if ((na - 1.0) * beta >= sum) {
        if (worst < 0 || beta >= efforts.betas[active[static_cast<std::size_t>(worst)]]) {
          worst = static_cast<std::ptrdiff_t>(pos);
        }
      }
    }
    if (worst < 0) break;
    if (active.size() <= 2) {
      throw InfeasibleGame("pruning would leave fewer than two contributors");
    }
    active.erase(active.begin() + worst);
  }

  // A removed contributor must have best response zero against the surviving
  // equilibrium, otherwise the restricted profile is not an equilibrium of
  // the full game.
  double sum = 0.0;
  for (std::size_t i : active) sum += efforts.betas[i];
  const double eq_total = (static_cast<double>(active.size()) - 1.0) / sum;
  for (std::size_t i = 0; i < efforts.size(); ++i) {
    if (std::find(active.begin(), active.end(), i) != active.end()) continue;
    if (best_response(eq_total, efforts.betas[i]) > 1e-12) {
      throw std::logic_error("pruned contributor has a profitable deviation");
    }
  }
  return active;
}

EquilibriumSolution closed_form(const EffortProfile& efforts) {
  EquilibriumSolution sol;
  sol.method = SolveMethod::ClosedForm;
  sol.active = prune_active(efforts);
  sol.strategies.assign(efforts.size(), 0.0);
  sol.ownership.assign(efforts.size(), 0.0);

  const double na = static_cast<double>(sol.active.size());
  double sum = 0.0;
  for (std::size_t i : sol.active) sum += efforts.betas[i];

  for (std::size_t i : sol.active) {
    const double beta = efforts.betas[i];
    sol.strategies[i] = (na - 1.0) * (sum - (na - 1.0) * beta) / (sum * sum);
    sol.ownership[i] = 1.0 - (na - 1.0) * beta / sum;
  }
  return sol;
}

SpectralWork spectral_work(const EffortProfile& efforts) {
  const auto feasible = feasibility(efforts);
  if (std::find(feasible.begin(), feasible.end(), false) != feasible.end()) {
    throw std::invalid_argument("spectral route requires every contributor feasible; prune first");
  }

  const std::size_t n = efforts.size();
  const double nd = static_cast<double>(n);

  SpectralWork work;
  work.g = efforts.total();
  work.alphas.reserve(n);
  for (double beta : efforts.betas) work.alphas.push_back(1.0 / beta);

  // Column 0 is the normalized all-one vector; column c (c >= 1) has c
  // leading entries 1/sqrt(c(c+1)), then -c/sqrt(c(c+1)), then zeros.
  work.basis.assign(n, std::vector<double>(n, 0.0));
  for (std::size_t r = 0; r < n; ++r) work.basis[0][r] = 1.0 / std::sqrt(nd);
  for (std::size_t c = 1; c < n; ++c) {
    const double cd = static_cast<double>(c);
    const double denom = std::sqrt(cd * (cd + 1.0));
    for (std::size_t r = 0; r < c; ++r) work.basis[c][r] = 1.0 / denom;
    work.basis[c][c] = -cd / denom;
  }

  // Coordinates of the equilibrium in that basis, by backward substitution.
  work.coords.assign(n, 0.0);
  work.coords[0] = (nd - 1.0) / (std::sqrt(nd) * work.g);
  double suffix = 0.0;  // sum of betas strictly after position c
  std::vector<double> suffixes(n, 0.0);
  for (std::size_t c = n; c-- > 0;) {
    suffixes[c] = suffix;
    suffix += efforts.betas[c];
  }
  for (std::size_t c = 1; c < n; ++c) {
    const double k = static_cast<double>(c) + 1.0;
    const double kk = k * (k - 1.0);
    const double term = k * efforts.betas[c] + suffixes[c];
    work.coords[c] = std::sqrt(kk) * (nd - 1.0) * (nd - 1.0) / kk / work.g * (term / work.g - 1.0);
  }
  return work;
}

EquilibriumSolution spectral_solve(const EffortProfile& efforts) {
  const SpectralWork work = spectral_work(efforts);
  const std::size_t n = efforts.size();

  EquilibriumSolution sol;
  sol.method = SolveMethod::Spectral;
  sol.strategies.assign(n, 0.0);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      sol.strategies[r] += work.coords[c] * work.basis[c][r];
    }
  }
  const double total = std::accumulate(sol.strategies.begin(), sol.strategies.end(), 0.0);
  sol.ownership.reserve(n);
  sol.active.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    sol.ownership.push_back(sol.strategies[i] / total);
    sol.active.push_back(i);
  }
  return sol;
}

double best_response(double opponent_total, double beta) {
  if (!(opponent_total > 0.0)) {
    throw std::invalid_argument("best response undefined without opposing content");
  }
  if (!(beta > 0.0)) {
    throw std::invalid_argument("effort coefficient must be positive");
  }
  return std::max(0.0, std::sqrt(opponent_total / beta) - opponent_total);
}

StrategyProfile default_dynamics_init(const EffortProfile& efforts) {
  std::vector<double> x;
  x.reserve(efforts.size());
  for (double beta : efforts.betas) {
    x.push_back(1.0 / (static_cast<double>(efforts.size()) * beta));
  }
  return StrategyProfile(std::move(x));
}

EquilibriumSolution best_response_dynamics(const EffortProfile& efforts,
                                           const StrategyProfile& init,
                                           double tol, int max_iters) {
  if (init.size() != efforts.size()) {
    throw std::invalid_argument("init and effort profiles differ in length");
  }
  if (!(init.total() > 0.0)) {
    throw std::invalid_argument("dynamics need a positive starting profile");
  }
  if (!(tol > 0.0) || max_iters < 1) {
    throw std::invalid_argument("tol must be positive and max_iters at least 1");
  }

  const std::size_t n = efforts.size();
  std::vector<double> x = init.contributions;

  // Undamped sweeps are locally unstable when efforts are strongly
  // heterogeneous (for two players the composed best-response slopes multiply
  // to (G/2b1 - 1)(G/2b2 - 1), which leaves the unit disk once the effort
  // ratio grows), while the underlying best-response flow stays stable. A
  // relaxation factor shrinking with the effort ratio restores convergence;
  // mild profiles keep the plain sweep and its exact zero clamps.
  const auto [min_it, max_it] = std::minmax_element(efforts.betas.begin(), efforts.betas.end());
  const double omega = std::min(1.0, 2.0 / (1.0 + *max_it / *min_it / 2.0));

  for (int sweep = 1; sweep <= max_iters; ++sweep) {
    double total = std::accumulate(x.begin(), x.end(), 0.0);
    double max_change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double others = total - x[i];
      // With no opposing content the maximizer does not exist (net utility
      // improves as the contribution shrinks); decay towards zero and let
      // the other players re-enter.
      const double target =
          others > 0.0 ? best_response(others, efforts.betas[i]) : x[i] / 2.0;
      const double next = x[i] + omega * (target - x[i]);
      max_change = std::max(max_change, std::abs(target - x[i]));
      total += next - x[i];
      x[i] = next;
    }
    if (max_change < tol) {
      EquilibriumSolution sol;
      sol.method = SolveMethod::BestResponseDynamics;
      sol.iterations = sweep;
      sol.strategies = x;
      sol.ownership.assign(n, 0.0);
      for (std::size_t i = 0; i < n; ++i) {
        sol.ownership[i] = x[i] / total;
        if (x[i] > 0.0) sol.active.push_back(i);
      }
      return sol;
    }
  }
  throw NoConvergence("best-response dynamics did not converge", std::move(x), max_iters);
}

std::vector<double> asymptotic_ownership(const EffortProfile& efforts) {
  const double mean = efforts.mean();
  std::vector<double> out;
  out.reserve(efforts.size());
  for (double beta : efforts.betas) {
    out.push_back(std::max(0.0, 1.0 - beta / mean));
  }
  return out;
}

}  // namespace wikigame
