#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wikigame/game.hpp"

namespace wikigame {

enum class SolveMethod { ClosedForm, Spectral, BestResponseDynamics };

const char* to_string(SolveMethod m);

struct EquilibriumSolution {
  std::vector<double> strategies;      // x*, zero outside the active set
  std::vector<double> ownership;       // u*, zero outside the active set
  std::vector<std::size_t> active;     // sorted indices with x* > 0
  SolveMethod method = SolveMethod::ClosedForm;
  int iterations = 0;                  // sweeps used (dynamics only)
};

// Intermediate objects of the orthogonal-basis derivation.
struct SpectralWork {
  std::vector<std::vector<double>> basis;  // basis[j] = j-th orthonormal column
  std::vector<double> coords;              // z, coordinates of x* in that basis
  double g = 0.0;                          // sum of betas
  std::vector<double> alphas;              // 1 / beta_i
};

// Thrown when pruning would leave fewer than two contributors.
struct InfeasibleGame : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown by best_response_dynamics when max_iters is exhausted.
struct NoConvergence : std::runtime_error {
  NoConvergence(std::string msg, std::vector<double> iterate, int iters)
      : std::runtime_error(std::move(msg)), last_iterate(std::move(iterate)), iterations(iters) {}
  std::vector<double> last_iterate;
  int iterations = 0;
};

// Exact equilibrium over the pruned active set; excluded contributors get
// x* = 0, u* = 0.
EquilibriumSolution closed_form(const EffortProfile& efforts);

// Entry i is true iff (N-1) * beta_i < sum(beta), evaluated on the full set.
std::vector<bool> feasibility(const EffortProfile& efforts);

// Iteratively removes the highest-beta contributor whose positivity condition
// fails on the remaining set, until all survivors satisfy it. The removed
// contributors' best response against the surviving equilibrium is zero.
std::vector<std::size_t> prune_active(const EffortProfile& efforts);

// Basis, coordinates and scalars of the orthogonal-diagonalization route.
// Requires every contributor feasible (prune first).
SpectralWork spectral_work(const EffortProfile& efforts);

// Equilibrium via the orthogonal-basis route; agrees with closed_form to
// 1e-9 componentwise. Requires every contributor feasible.
EquilibriumSolution spectral_solve(const EffortProfile& efforts);

// Unique maximizer of x/(x+S) - beta*x over x >= 0: max(0, sqrt(S/beta) - S).
// Requires S > 0 and beta > 0.
double best_response(double opponent_total, double beta);

// Sequential (player-by-player) best-response sweeps from `init` until the
// largest componentwise change in a sweep drops below `tol`.
EquilibriumSolution best_response_dynamics(const EffortProfile& efforts,
                                           const StrategyProfile& init,
                                           double tol, int max_iters);

// Large-population ownership: (1 - beta_i / mean(beta))^+.
std::vector<double> asymptotic_ownership(const EffortProfile& efforts);

// Default dynamics start: x_i = 1 / (N * beta_i).
StrategyProfile default_dynamics_init(const EffortProfile& efforts);

}  // namespace wikigame
