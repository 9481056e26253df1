#include "wikigame/simulate.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <random>
#include <stdexcept>

#include "wikigame/equilibrium.hpp"

namespace wikigame::sim {

std::vector<std::string> editor_ids(std::size_t n) {
  std::size_t width = 3;
  for (std::size_t v = n; v >= 1000; v /= 10) ++width;
  std::vector<std::string> ids;
  ids.reserve(n);
  char buf[32];
  for (std::size_t i = 1; i <= n; ++i) {
    std::snprintf(buf, sizeof buf, "e%0*zu", static_cast<int>(width), i);
    ids.emplace_back(buf);
  }
  return ids;
}

std::vector<std::size_t> apportion(const std::vector<double>& weights, std::size_t total) {
  std::vector<std::size_t> out(weights.size(), 0);
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (total == 0 || !(sum > 0.0)) return out;

  std::vector<double> fractions(weights.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double share = weights[i] / sum * static_cast<double>(total);
    out[i] = static_cast<std::size_t>(share);
    fractions[i] = share - static_cast<double>(out[i]);
    assigned += out[i];
  }
  std::vector<std::size_t> order(weights.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return fractions[a] > fractions[b]; });
  for (std::size_t k = 0; assigned < total; ++k) {
    ++out[order[k % order.size()]];
    ++assigned;
  }
  return out;
}

namespace {

struct PlannedEdit {
  std::size_t editor = 0;
  bool add = false;
  std::size_t sentence_count = 0;  // AddContent only
};

std::vector<std::string> make_sentence(wiki::SentenceId id, std::mt19937_64& rng) {
  const std::size_t len = 4 + static_cast<std::size_t>(rng() % 4);
  std::vector<std::string> tokens;
  tokens.reserve(len);
  for (std::size_t k = 0; k < len; ++k) {
    tokens.push_back("w" + std::to_string(id) + "_" + std::to_string(k));
  }
  return tokens;
}

}  // namespace

std::vector<wiki::Edit> generate_history(const SimConfig& config) {
  const std::size_t n = config.editors;
  if (n < 2 || config.efforts.size() != n) {
    throw std::invalid_argument("config needs editors >= 2 matching the effort profile");
  }
  if (config.edits < n) {
    throw std::invalid_argument("config needs at least one edit per editor");
  }

  const EquilibriumSolution sol = closed_form(config.efforts);
  const std::size_t total_sentences = config.sentences ? config.sentences : 3 * n;

  // Final ownership follows equilibrium shares; edit counts follow
  // equilibrium strategies, with every editor making at least one edit.
  const std::vector<std::size_t> targets = apportion(sol.ownership, total_sentences);
  std::vector<std::size_t> edit_counts = apportion(sol.strategies, config.edits - n);
  for (auto& e : edit_counts) ++e;

  std::mt19937_64 rng(config.seed);
  std::vector<PlannedEdit> plan;
  plan.reserve(config.edits);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t adds = targets[i] == 0 ? 0 : std::min(edit_counts[i], targets[i]);
    for (std::size_t a = 0; a < adds; ++a) {
      // Near-equal split of the sentence target over this editor's adds.
      const std::size_t count = targets[i] / adds + (a < targets[i] % adds ? 1 : 0);
      plan.push_back(PlannedEdit{i, true, count});
    }
    for (std::size_t r = adds; r < edit_counts[i]; ++r) {
      plan.push_back(PlannedEdit{i, false, 0});
    }
  }
  std::shuffle(plan.begin(), plan.end(), rng);
  // Content must exist before any touch edit can reference it.
  auto first_add = std::find_if(plan.begin(), plan.end(),
                                [](const PlannedEdit& p) { return p.add; });
  if (first_add != plan.end()) std::iter_swap(plan.begin(), first_add);

  const std::vector<std::string> ids = editor_ids(n);
  std::vector<wiki::Edit> history;
  history.reserve(plan.size());
  std::vector<wiki::SentenceId> existing;
  wiki::SentenceId next_id = 1;
  for (const PlannedEdit& p : plan) {
    wiki::Edit edit;
    edit.editor = ids[p.editor];
    edit.effort = config.efforts.betas[p.editor];
    if (p.add) {
      edit.kind = wiki::EditKind::AddContent;
      edit.scope = p.sentence_count > 1 ? 4 : 3;
      for (std::size_t s = 0; s < p.sentence_count; ++s) {
        edit.add_sentences.push_back(make_sentence(next_id, rng));
        existing.push_back(next_id++);
      }
    } else {
      switch (rng() % 3) {
        case 0: edit.kind = wiki::EditKind::Proofread; edit.scope = 1; break;
        case 1: edit.kind = wiki::EditKind::AddHyperlink; edit.scope = 2; break;
        default: edit.kind = wiki::EditKind::ImproveNavigation; edit.scope = 2; break;
      }
      edit.target = existing.empty() ? 0 : existing[rng() % existing.size()];
    }
    history.push_back(std::move(edit));
  }
  return history;
}

}  // namespace wikigame::sim
