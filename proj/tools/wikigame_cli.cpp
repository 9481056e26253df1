#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wikigame/empirics.hpp"
#include "wikigame/equilibrium.hpp"
#include "wikigame/game.hpp"
#include "wikigame/simulate.hpp"
#include "wikigame/wiki.hpp"

namespace {

using json = nlohmann::json;
using namespace wikigame;

constexpr int kExitParse = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitDegenerate = 4;

struct ParseFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

// Numbers in json-lines output are rounded to the same 12 significant digits
// the text formats print.
double round12(double v) { return std::strtod(num(v).c_str(), nullptr); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseFailure("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ParseFailure("cannot write " + out_path);
  out << text;
}

// One positive decimal per line or comma-separated; '#' starts a comment.
EffortProfile parse_betas(const std::string& path) {
  std::istringstream in(read_file(path));
  std::vector<double> betas;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      try {
        std::size_t used = 0;
        const double beta = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        betas.push_back(beta);
      } catch (const std::exception&) {
        throw ParseFailure("bad number in " + path + ": " + tok);
      }
    }
  }
  try {
    return EffortProfile(std::move(betas));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

sim::SimConfig parse_sim_config(const std::string& path) {
  json doc;
  try {
    doc = json::parse(read_file(path));
    sim::SimConfig config{
        doc.at("editors").get<std::size_t>(),
        doc.at("edits").get<std::size_t>(),
        EffortProfile(doc.at("betas").get<std::vector<double>>()),
        doc.value("seed", std::uint64_t{0}),
        doc.value("sentences", std::size_t{0}),
    };
    return config;
  } catch (const ParseFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

std::string format_solve(const EffortProfile& efforts, const std::string& format) {
  const EquilibriumSolution sol = closed_form(efforts);
  const std::vector<bool> feasible = feasibility(efforts);
  const std::vector<double> asym = asymptotic_ownership(efforts);

  // Stationarity on the active sub-game.
  std::vector<double> sub_x, sub_beta;
  for (std::size_t i : sol.active) {
    sub_x.push_back(sol.strategies[i]);
    sub_beta.push_back(efforts.betas[i]);
  }
  const auto residuals = foc_residual(StrategyProfile(sub_x), EffortProfile(sub_beta));
  double max_residual = 0.0;
  for (double r : residuals) max_residual = std::max(max_residual, std::abs(r));

  auto is_active = [&](std::size_t i) {
    return std::find(sol.active.begin(), sol.active.end(), i) != sol.active.end();
  };

  std::ostringstream out;
  if (format == "json-lines") {
    for (std::size_t i = 0; i < efforts.size(); ++i) {
      json row{{"index", i + 1},          {"beta", round12(efforts.betas[i])},
               {"x", round12(sol.strategies[i])}, {"u", round12(sol.ownership[i])},
               {"feasible", (bool)feasible[i]},   {"active", is_active(i)},
               {"u_asymptotic", round12(asym[i])}};
      out << row.dump() << "\n";
    }
    json summary{{"method", to_string(sol.method)},
                 {"active_count", sol.active.size()},
                 {"max_foc_residual", round12(max_residual)}};
    out << summary.dump() << "\n";
  } else if (format == "csv") {
    out << "index,beta,x,u,feasible,active,u_asymptotic\n";
    for (std::size_t i = 0; i < efforts.size(); ++i) {
      out << i + 1 << ',' << num(efforts.betas[i]) << ',' << num(sol.strategies[i]) << ','
          << num(sol.ownership[i]) << ',' << (feasible[i] ? "true" : "false") << ','
          << (is_active(i) ? "true" : "false") << ',' << num(asym[i]) << '\n';
    }
    out << "# method=" << to_string(sol.method) << " active_count=" << sol.active.size()
        << " max_foc_residual=" << num(max_residual) << '\n';
  } else {
    out << "equilibrium (" << to_string(sol.method) << ")\n";
    out << "  idx        beta           x           u  feasible  active      u_asym\n";
    for (std::size_t i = 0; i < efforts.size(); ++i) {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%5zu %11s %11s %11s  %8s  %6s %11s\n", i + 1,
                    num(efforts.betas[i]).c_str(), num(sol.strategies[i]).c_str(),
                    num(sol.ownership[i]).c_str(), feasible[i] ? "yes" : "no",
                    is_active(i) ? "yes" : "no", num(asym[i]).c_str());
      out << buf;
    }
    out << "active contributors: " << sol.active.size() << " of " << efforts.size() << "\n";
    out << "max |foc residual|:  " << num(max_residual) << "\n";
  }
  return out.str();
}

std::string format_census(const wiki::OwnershipCensus& counts, const std::string& format) {
  std::ostringstream out;
  if (format == "json-lines") {
    for (const auto& [editor, owned] : counts.counts) {
      out << json{{"editor", editor}, {"owned", owned}}.dump() << "\n";
    }
    out << json{{"revision", counts.revision}}.dump() << "\n";
  } else if (format == "csv") {
    out << "editor,owned\n";
    for (const auto& [editor, owned] : counts.counts) {
      out << editor << ',' << owned << '\n';
    }
  } else {
    out << "census at revision " << counts.revision << "\n";
    for (const auto& [editor, owned] : counts.counts) {
      out << "  " << editor << "  " << owned << "\n";
    }
  }
  return out.str();
}

empirics::PageData analyze_file(const std::string& path) {
  try {
    return empirics::analyze_history(path, wiki::parse_history(read_file(path)));
  } catch (const std::invalid_argument& e) {
    throw ParseFailure(path + ": " + e.what());
  }
}

// Per-page analyses run concurrently; results merge in argument order.
std::vector<empirics::PageData> analyze_files(const std::vector<std::string>& paths) {
  std::vector<std::future<empirics::PageData>> futures;
  futures.reserve(paths.size());
  for (const std::string& path : paths) {
    futures.push_back(std::async(std::launch::async, analyze_file, path));
  }
  std::vector<empirics::PageData> pages;
  pages.reserve(paths.size());
  for (auto& f : futures) pages.push_back(f.get());
  return pages;
}

int run(int argc, char** argv) {
  CLI::App app{"content-contribution game: equilibrium solver, wiki revision "
               "simulator and validation pipeline"};
  app.require_subcommand(1);

  std::string betas_path, config_path, out_path;
  std::string format = "table";
  std::vector<std::string> train_paths, holdout_paths;
  double tol = 1e-9;
  std::int64_t seed = -1;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json-lines", "csv"}));
    cmd->add_option("--out", out_path, "write output to this path instead of stdout");
  };

  CLI::App* solve = app.add_subcommand("solve", "equilibrium for an effort profile");
  solve->add_option("--betas", betas_path, "effort coefficients file")->required();
  add_format(solve);

  CLI::App* simulate = app.add_subcommand("simulate", "deterministic synthetic revision history");
  simulate->add_option("--config", config_path, "JSON simulation config")->required();
  simulate->add_option("--seed", seed, "override the config seed");
  std::string history_out;
  simulate->add_option("--history", history_out, "write the revision history to this path")
      ->required();
  add_format(simulate);

  CLI::App* validate = app.add_subcommand("validate", "model validation over history files");
  validate->add_option("--train", train_paths, "training history files")->required();
  validate->add_option("--holdout", holdout_paths, "holdout history files");
  validate->add_option("--tol", tol, "equivalence-class tolerance");
  add_format(validate);

  CLI::App* classes = app.add_subcommand("classes", "ownership equivalence classes");
  classes->add_option("--betas", betas_path, "effort coefficients file")->required();
  classes->add_option("--tol", tol, "equivalence-class tolerance");
  add_format(classes);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  if (solve->parsed()) {
    write_output(out_path, format_solve(parse_betas(betas_path), format));
  } else if (simulate->parsed()) {
    sim::SimConfig config = parse_sim_config(config_path);
    if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
    const auto history = sim::generate_history(config);
    std::ofstream hist(history_out);
    if (!hist) throw ParseFailure("cannot write " + history_out);
    hist << wiki::serialize_history(history);
    write_output(out_path, format_census(wiki::census(wiki::replay(history)), format));
  } else if (validate->parsed()) {
    const auto train = analyze_files(train_paths);
    const auto holdout = analyze_files(holdout_paths);
    const auto report = empirics::validate_pages(train, holdout, tol);
    if (format == "csv") {
      write_output(out_path, empirics::report_table_csv(report));
    } else {
      write_output(out_path, empirics::report_to_text(report) + "\nflat table:\n" +
                                 empirics::report_table_csv(report));
    }
  } else if (classes->parsed()) {
    const EffortProfile efforts = parse_betas(betas_path);
    const auto ownership = empirics::predict_ownership(efforts);
    const auto groups = empirics::equivalence_classes(ownership, tol);
    std::ostringstream out;
    out << groups.size() << " equivalence classes\n";
    for (std::size_t k = 0; k < groups.size(); ++k) {
      out << "  class " << k + 1 << " (u=" << num(ownership[groups[k].front()]) << "):";
      for (std::size_t i : groups[k]) out << ' ' << i + 1;
      out << "\n";
    }
    write_output(out_path, out.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ParseFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InfeasibleGame& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInfeasible;
  } catch (const empirics::DegenerateStatistics& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
