#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wikigame/game.hpp"
#include "wikigame/wiki.hpp"

namespace wikigame::empirics {

// Thrown for statistically degenerate inputs (zero variance, constant
// regressor, empty holdout).
struct DegenerateStatistics : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EditLogRecord {
  std::string contributor;
  wiki::EditKind kind = wiki::EditKind::AddContent;
  int scope = 1;
  double effort = 0.0;  // > 0
};

struct EditLog {
  std::vector<EditLogRecord> records;

  // Per-contributor aggregates, indexed by order of first appearance.
  std::vector<std::string> contributors;
  std::vector<double> total_effort;      // s_i
  std::vector<std::size_t> edit_count;   // e_i

  static EditLog from_records(std::vector<EditLogRecord> records);
  static EditLog from_history(const std::vector<wiki::Edit>& history);
};

// CSV with header "contributor,kind,scope,effort".
EditLog parse_edit_log_csv(const std::string& text);
std::string edit_log_to_csv(const EditLog& log);

// beta_i = s_i / e_i, in the log's contributor order.
EffortProfile estimate_beta(const EditLog& log);

// Equilibrium ownership shares for the profile (closed form with pruning).
std::vector<double> predict_ownership(const EffortProfile& efforts);

// Groups indices whose ownership values differ by at most `tol`
// (single-linkage on the sorted values); classes ordered by descending
// ownership.
std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<double>& ownership,
                                                          double tol);

// Product-moment correlation. Throws DegenerateStatistics if either vector
// has zero variance or fewer than two entries.
double pearson(const std::vector<double>& a, const std::vector<double>& d);

struct LinearFit {
  double slope = 0.0;      // rho
  double intercept = 0.0;  // delta
};

// Ordinary least squares d ~ slope * a + intercept.
LinearFit linear_fit(const std::vector<std::pair<double, double>>& train);

// Mean absolute prediction error on the holdout, as a percentage of the mean
// observed value.
double holdout_error(const LinearFit& fit, const std::vector<std::pair<double, double>>& holdout);

// One analyzed page: effort estimates, model prediction and observed
// ownership in the page's contributor order.
struct PageData {
  std::string name;
  std::vector<std::string> contributors;
  std::vector<double> beta;
  std::vector<double> predicted;  // a_i
  std::vector<double> observed;   // d_i = p_i / sum(p)
};

PageData analyze_history(const std::string& name, const std::vector<wiki::Edit>& history);

struct PageReport {
  PageData data;
  double pearson = 0.0;
  std::vector<std::vector<std::size_t>> classes;  // on predicted ownership
  bool holdout = false;
  double error_pct = 0.0;  // only meaningful when a fit is present
};

struct ValidationReport {
  std::vector<PageReport> pages;  // train pages first, then holdout pages
  double pooled_pearson = 0.0;
  bool has_fit = false;
  LinearFit fit;            // least squares on pooled train points
  double train_error_pct = 0.0;
};

// Full validation protocol: per-page and pooled correlation, least-squares
// fit on the training pages, per-page holdout error, equivalence classes.
ValidationReport validate_pages(const std::vector<PageData>& train,
                                const std::vector<PageData>& holdout,
                                double class_tol = 1e-9);

// Human-readable report plus a flat (contributor, beta, predicted, observed)
// table in CSV.
std::string report_to_text(const ValidationReport& report);
std::string report_table_csv(const ValidationReport& report);

}  // namespace wikigame::empirics
