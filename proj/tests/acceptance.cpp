// Acceptance suite: prints one pass/fail line per criterion and exits
// non-zero if any criterion fails.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "wikigame/empirics.hpp"
#include "wikigame/equilibrium.hpp"
#include "wikigame/simulate.hpp"
#include "wikigame/wiki.hpp"

using namespace wikigame;

namespace {

int failures = 0;
int checks = 0;
std::string current_detail;

void require(bool ok, const std::string& what) {
  ++checks;
  if (!ok && current_detail.empty()) {
    current_detail = what;
  }
  failures += !ok;
}

void criterion(int number, const std::string& name, const std::function<void()>& body) {
  const int before = failures;
  checks = 0;
  current_detail.clear();
  body();
  if (failures == before) {
    std::printf("[PASS] criterion %d: %s (%d checks)\n", number, name.c_str(), checks);
  } else {
    std::printf("[FAIL] criterion %d: %s (%d of %d checks failed; first: %s)\n", number,
                name.c_str(), failures - before, checks, current_detail.c_str());
  }
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

// Criterion 1: equal efforts give ownership exactly 1/N for all N in 2..100.
void symmetric_exactness() {
  for (double c : {0.3, 1.0, 2.5, 7.0}) {
    for (std::size_t n = 2; n <= 100; ++n) {
      const auto sol = closed_form(EffortProfile(std::vector<double>(n, c)));
      const double expect = 1.0 / static_cast<double>(n);
      for (double u : sol.ownership) {
        require(std::abs(u - expect) <= 1e-12, "u != 1/N at N=" + std::to_string(n));
      }
    }
  }
}

// Criterion 2: closed form, spectral route and best-response dynamics agree
// on 200 random feasible profiles; closed-form stationarity <= 1e-9.
void route_agreement() {
  std::mt19937_64 rng(1002);
  std::uniform_real_distribution<double> bdist(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 49;
    std::vector<double> betas(n);
    for (auto& b : betas) b = bdist(rng);
    // Restrict to the self-feasible sub-profile of the uniform draw.
    const auto active = prune_active(EffortProfile(betas));
    std::vector<double> sub;
    for (std::size_t i : active) sub.push_back(betas[i]);
    const EffortProfile efforts(sub);

    const auto closed = closed_form(efforts);
    const auto spectral = spectral_solve(efforts);
    const auto dynamics =
        best_response_dynamics(efforts, default_dynamics_init(efforts), 1e-10, 2000000);
    require(max_abs_diff(closed.strategies, spectral.strategies) <= 1e-6,
            "closed vs spectral at trial " + std::to_string(trial));
    require(max_abs_diff(closed.strategies, dynamics.strategies) <= 1e-6,
            "closed vs dynamics at trial " + std::to_string(trial));
    require(max_abs(foc_residual(StrategyProfile(closed.strategies), efforts)) <= 1e-9,
            "foc residual at trial " + std::to_string(trial));
  }
}

// Criterion 3: zero ownership exactly when the positivity condition fails on
// the pruned set; excluded players best-respond with zero.
void feasibility_boundary() {
  std::mt19937_64 rng(1003);
  std::uniform_real_distribution<double> bdist(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<double> betas(n);
    for (auto& b : betas) b = bdist(rng);
    if (trial % 2 == 1 && n > 2) {
      betas[rng() % n] *= static_cast<double>(2 * n);  // constructed violator
    }
    const EffortProfile efforts(betas);
    const auto sol = closed_form(efforts);
    const double na = static_cast<double>(sol.active.size());
    double active_sum = 0.0, total = 0.0;
    for (std::size_t i : sol.active) active_sum += betas[i];
    for (double x : sol.strategies) total += x;
    for (std::size_t i = 0; i < n; ++i) {
      const bool zero = sol.ownership[i] == 0.0;
      const bool violates = (na - 1.0) * betas[i] >= active_sum;
      require(zero == violates, "boundary mismatch at trial " + std::to_string(trial));
      if (zero) {
        require(best_response(total, betas[i]) <= 1e-10,
                "excluded player deviates at trial " + std::to_string(trial));
      }
    }
  }
}

// Criterion 4: deviation between exact and asymptotic ownership equals
// beta_i / sum(beta) wherever the asymptotic clamp is inactive, and the
// deviation decays like 1/N for i.i.d. efforts.
void asymptotic_identity() {
  std::mt19937_64 rng(1004);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 40;
    const auto efforts = fixtures::feasible_profile(rng, n);
    const auto exact = closed_form(efforts).ownership;
    const auto asym = asymptotic_ownership(efforts);
    const double sum = efforts.total();
    const double mean = efforts.mean();
    for (std::size_t i = 0; i < n; ++i) {
      const double dev = std::abs(exact[i] - asym[i]);
      if (efforts.betas[i] <= mean) {
        require(std::abs(dev - efforts.betas[i] / sum) <= 1e-12,
                "identity off at trial " + std::to_string(trial));
      } else {
        require(dev <= efforts.betas[i] / sum + 1e-12,
                "bound off at trial " + std::to_string(trial));
      }
    }
  }

  // Fully feasible profiles at every size, so no contributor drops out as
  // the population grows.
  auto worst_dev = [&](std::size_t n) {
    const auto efforts = fixtures::feasible_profile(rng, n);
    const auto sol = closed_form(efforts);
    const auto asym = asymptotic_ownership(efforts);
    double dev = 0.0;
    for (std::size_t i : sol.active) {
      if (asym[i] > 0.0) dev = std::max(dev, std::abs(sol.ownership[i] - asym[i]));
    }
    return dev;
  };
  const double d20 = worst_dev(20), d200 = worst_dev(200), d2000 = worst_dev(2000);
  require(d200 < d20 && d2000 < d200, "deviation not decreasing");
  require(d2000 < d20 / 20.0, "deviation decay slower than O(1/N)");
}

// Criterion 5: ownership transfers exactly when strictly more than half of
// the pre-edit tokens are deleted or substituted (1000 random revisions with
// a change count known by construction).
void ownership_rule() {
  std::mt19937_64 rng(1005);
  int transfers = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 1 + rng() % 14;
    std::vector<std::string> before;
    for (std::size_t i = 0; i < len; ++i) {
      before.push_back("o" + std::to_string(trial) + "_" + std::to_string(i));
    }
    std::vector<std::string> after;
    std::size_t kept = 0;
    for (const auto& tok : before) {
      if (rng() % 2) {
        after.push_back(tok);
        ++kept;
      }
      if (rng() % 4 == 0) after.push_back("n" + std::to_string(after.size()));
    }
    if (after.empty()) after.push_back("fresh");

    wiki::WikiPage page;
    wiki::Edit add;
    add.editor = "A";
    add.kind = wiki::EditKind::AddContent;
    add.scope = 4;
    add.add_sentences = {before};
    page = wiki::apply_edit(page, add);

    wiki::Edit revise;
    revise.editor = "B";
    revise.kind = wiki::EditKind::ReviseSentence;
    revise.scope = 3;
    revise.target = 1;
    revise.new_tokens = after;
    page = wiki::apply_edit(page, revise);

    const bool should_transfer = 2 * (len - kept) > len;  // exact integer comparison
    const bool transferred = page.sentences[0].owner == "B";
    require(transferred == should_transfer, "rule mismatch at trial " + std::to_string(trial));
    transfers += transferred;
  }
  require(transfers > 100 && transfers < 900, "oracle not exercising both outcomes");
}

std::vector<empirics::PageData> build_corpus() {
  std::vector<empirics::PageData> pages;
  std::uint64_t seed = 77;
  for (const auto& shape : fixtures::corpus_shapes()) {
    const auto targets = fixtures::level_targets(shape.editors, shape.sentences, shape.levels);
    sim::SimConfig config{shape.editors, shape.edits,
                          fixtures::profile_from_targets(targets, shape.sentences), seed++,
                          shape.sentences};
    pages.push_back(empirics::analyze_history(shape.name, sim::generate_history(config)));
  }
  return pages;
}

// Criterion 6: the noise-free nine-page synthetic corpus round-trips through
// effort estimation and prediction with perfect correlation and fit.
void round_trip_validation() {
  const auto pages = build_corpus();
  require(pages.size() == 9, "corpus size");

  std::uint64_t seed = 77;
  for (const auto& shape : fixtures::corpus_shapes()) {
    const auto targets = fixtures::level_targets(shape.editors, shape.sentences, shape.levels);
    const auto betas = fixtures::profile_from_targets(targets, shape.sentences);
    sim::SimConfig config{shape.editors, shape.edits, betas, seed++, shape.sentences};
    const auto log = empirics::EditLog::from_history(sim::generate_history(config));
    const auto estimated = empirics::estimate_beta(log);
    const auto ids = sim::editor_ids(shape.editors);
    require(estimated.size() == shape.editors, "estimated profile size for " + shape.name);
    for (std::size_t i = 0; i < estimated.size(); ++i) {
      const auto pos = std::find(ids.begin(), ids.end(), log.contributors[i]) - ids.begin();
      require(estimated.betas[i] == betas.betas[static_cast<std::size_t>(pos)],
              "beta recovery not exact for " + shape.name);
    }
  }

  const std::vector<empirics::PageData> train(pages.begin(), pages.begin() + 4);
  const std::vector<empirics::PageData> holdout(pages.begin() + 4, pages.end());
  const auto report = empirics::validate_pages(train, holdout);
  require(std::abs(report.pooled_pearson - 1.0) <= 1e-9, "pooled pearson");
  require(std::abs(report.fit.slope - 1.0) <= 1e-6, "fit slope");
  require(std::abs(report.fit.intercept) <= 1e-6, "fit intercept");
  require(report.train_error_pct <= 1e-6, "training error");
  for (const auto& page : report.pages) {
    if (page.holdout) {
      require(page.error_pct <= 1e-6, "holdout error for " + page.data.name);
    }
  }
}

// Criterion 7: injected observation noise lowers the pooled correlation
// monotonically in the noise amplitude (averaged over 20 seeds), under the
// 4-train / 5-holdout protocol.
void noise_monotonicity() {
  const auto pages = build_corpus();
  std::vector<double> pooled_a, pooled_d;
  for (const auto& page : pages) {
    pooled_a.insert(pooled_a.end(), page.predicted.begin(), page.predicted.end());
    pooled_d.insert(pooled_d.end(), page.observed.begin(), page.observed.end());
  }

  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  auto mean_pearson = [&](double eta) {
    double sum = 0.0;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      std::mt19937_64 rng(seed);
      auto noisy = pooled_d;
      for (double& d : noisy) d = std::max(0.0, d * (1.0 + eta * unit(rng)));
      sum += empirics::pearson(pooled_a, noisy);
    }
    return sum / 20.0;
  };
  const double r05 = mean_pearson(0.05), r10 = mean_pearson(0.10), r20 = mean_pearson(0.20);
  require(r05 > r10, "pearson(0.05) <= pearson(0.10)");
  require(r10 > r20, "pearson(0.10) <= pearson(0.20)");

  // The split protocol itself still runs on the noisy corpus.
  std::vector<empirics::PageData> noisy_pages = pages;
  std::mt19937_64 rng(99);
  for (auto& page : noisy_pages) {
    for (double& d : page.observed) d = std::max(0.0, d * (1.0 + 0.1 * unit(rng)));
  }
  const auto report = empirics::validate_pages(
      {noisy_pages.begin(), noisy_pages.begin() + 4}, {noisy_pages.begin() + 4, noisy_pages.end()});
  require(report.has_fit, "fit missing under split protocol");
  require(report.pooled_pearson < 1.0 && report.pooled_pearson > 0.5,
          "noisy pooled pearson out of range");
}

// Criterion 8: five effort levels among 62 contributors give exactly five
// equivalence classes, and equal efforts always share a class.
void equivalence_structure() {
  const auto targets = fixtures::level_targets(62, 256, 5);
  const auto efforts = fixtures::profile_from_targets(targets, 256);
  const auto ownership = empirics::predict_ownership(efforts);
  const auto classes = empirics::equivalence_classes(ownership, 1e-9);
  require(classes.size() == 5, "class count " + std::to_string(classes.size()));
  for (const auto& group : classes) {
    for (std::size_t i : group) {
      require(efforts.betas[i] == efforts.betas[group.front()], "mixed betas within a class");
    }
  }
  for (std::size_t i = 0; i < efforts.size(); ++i) {
    for (std::size_t j = i + 1; j < efforts.size(); ++j) {
      if (efforts.betas[i] != efforts.betas[j]) continue;
      const auto in_same = [&](const std::vector<std::size_t>& group) {
        const bool has_i = std::find(group.begin(), group.end(), i) != group.end();
        const bool has_j = std::find(group.begin(), group.end(), j) != group.end();
        return has_i == has_j;
      };
      bool same = true;
      for (const auto& group : classes) same = same && in_same(group);
      require(same, "equal betas split across classes");
    }
  }
}

}  // namespace

int main() {
  criterion(1, "symmetric exactness", symmetric_exactness);
  criterion(2, "route agreement", route_agreement);
  criterion(3, "feasibility boundary", feasibility_boundary);
  criterion(4, "asymptotic identity", asymptotic_identity);
  criterion(5, "ownership-rule oracle", ownership_rule);
  criterion(6, "round-trip validation", round_trip_validation);
  criterion(7, "noise monotonicity", noise_monotonicity);
  criterion(8, "equivalence-class structure", equivalence_structure);
  if (failures) {
    std::printf("%d check(s) failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
