#include "wikigame/empirics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "wikigame/equilibrium.hpp"

namespace wikigame::empirics {

EditLog EditLog::from_records(std::vector<EditLogRecord> records) {
  EditLog log;
  log.records = std::move(records);
  std::unordered_map<std::string, std::size_t> index;
  for (const EditLogRecord& rec : log.records) {
    if (!(rec.effort > 0.0)) {
      throw std::invalid_argument("edit log efforts must be positive");
    }
    if (rec.scope < 1 || rec.scope > 5) {
      throw std::invalid_argument("edit log scope must be in 1..5");
    }
    auto [it, inserted] = index.emplace(rec.contributor, log.contributors.size());
    if (inserted) {
      log.contributors.push_back(rec.contributor);
      log.total_effort.push_back(0.0);
      log.edit_count.push_back(0);
    }
    log.total_effort[it->second] += rec.effort;
    ++log.edit_count[it->second];
  }
  return log;
}

EditLog EditLog::from_history(const std::vector<wiki::Edit>& history) {
  std::vector<EditLogRecord> records;
  records.reserve(history.size());
  for (const wiki::Edit& edit : history) {
    records.push_back(EditLogRecord{edit.editor, edit.kind, edit.scope, edit.effort});
  }
  return from_records(std::move(records));
}

EditLog parse_edit_log_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "contributor,kind,scope,effort") {
    throw std::invalid_argument("edit log CSV must start with header contributor,kind,scope,effort");
  }
  std::vector<EditLogRecord> records;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    EditLogRecord rec;
    std::string kind, scope, effort;
    if (!std::getline(fields, rec.contributor, ',') || !std::getline(fields, kind, ',') ||
        !std::getline(fields, scope, ',') || !std::getline(fields, effort)) {
      throw std::invalid_argument("malformed edit log line: " + line);
    }
    rec.kind = wiki::edit_kind_from_string(kind);
    rec.scope = std::stoi(scope);
    rec.effort = std::stod(effort);
    records.push_back(std::move(rec));
  }
  return EditLog::from_records(std::move(records));
}

std::string edit_log_to_csv(const EditLog& log) {
  std::string out = "contributor,kind,scope,effort\n";
  char buf[64];
  for (const EditLogRecord& rec : log.records) {
    std::snprintf(buf, sizeof buf, "%.17g", rec.effort);
    out += rec.contributor;
    out += ',';
    out += wiki::to_string(rec.kind);
    out += ',';
    out += std::to_string(rec.scope);
    out += ',';
    out += buf;
    out += '\n';
  }
  return out;
}

EffortProfile estimate_beta(const EditLog& log) {
  std::vector<double> betas;
  betas.reserve(log.contributors.size());
  for (std::size_t i = 0; i < log.contributors.size(); ++i) {
    if (log.edit_count[i] == 0 || !(log.total_effort[i] > 0.0)) {
      throw std::invalid_argument("contributor without positive edits/effort: " +
                                  log.contributors[i]);
    }
    betas.push_back(log.total_effort[i] / static_cast<double>(log.edit_count[i]));
  }
  return EffortProfile(std::move(betas));
}

std::vector<double> predict_ownership(const EffortProfile& efforts) {
  return closed_form(efforts).ownership;
}

std::vector<std::vector<std::size_t>> equivalence_classes(const std::vector<double>& ownership,
                                                          double tol) {
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("class tolerance must be non-negative");
  }
  std::vector<std::size_t> order(ownership.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ownership[a] > ownership[b]; });

  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const bool chain = k > 0 && ownership[order[k - 1]] - ownership[order[k]] <= tol;
    if (!chain) classes.emplace_back();
    classes.back().push_back(order[k]);
  }
  return classes;
}

double pearson(const std::vector<double>& a, const std::vector<double>& d) {
  if (a.size() != d.size() || a.size() < 2) {
    throw std::invalid_argument("pearson needs two equal-length vectors of size >= 2");
  }
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double md = std::accumulate(d.begin(), d.end(), 0.0) / n;
  double cov = 0.0, va = 0.0, vd = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cov += (a[i] - ma) * (d[i] - md);
    va += (a[i] - ma) * (a[i] - ma);
    vd += (d[i] - md) * (d[i] - md);
  }
  if (!(va > 0.0) || !(vd > 0.0)) {
    throw DegenerateStatistics("correlation undefined for zero-variance input");
  }
  return cov / std::sqrt(va * vd);
}

LinearFit linear_fit(const std::vector<std::pair<double, double>>& train) {
  if (train.size() < 2) {
    throw std::invalid_argument("least squares needs at least two points");
  }
  const double n = static_cast<double>(train.size());
  double ma = 0.0, md = 0.0;
  for (const auto& [a, d] : train) {
    ma += a;
    md += d;
  }
  ma /= n;
  md /= n;
  double cov = 0.0, va = 0.0;
  for (const auto& [a, d] : train) {
    cov += (a - ma) * (d - md);
    va += (a - ma) * (a - ma);
  }
  if (!(va > 0.0)) {
    throw DegenerateStatistics("least squares singular: constant regressor");
  }
  LinearFit fit;
  fit.slope = cov / va;
  fit.intercept = md - fit.slope * ma;
  return fit;
}

double holdout_error(const LinearFit& fit, const std::vector<std::pair<double, double>>& holdout) {
  if (holdout.empty()) {
    throw DegenerateStatistics("holdout set is empty");
  }
  double abs_err = 0.0, mean_d = 0.0;
  for (const auto& [a, d] : holdout) {
    abs_err += std::abs(d - (fit.slope * a + fit.intercept));
    mean_d += d;
  }
  if (!(mean_d > 0.0)) {
    throw DegenerateStatistics("holdout observations sum to zero");
  }
  return 100.0 * abs_err / mean_d;
}

PageData analyze_history(const std::string& name, const std::vector<wiki::Edit>& history) {
  const EditLog log = EditLog::from_history(history);
  const wiki::OwnershipCensus counts = wiki::census(wiki::replay(history));

  PageData page;
  page.name = name;
  page.contributors = log.contributors;
  const EffortProfile efforts = estimate_beta(log);
  page.beta = efforts.betas;
  page.predicted = predict_ownership(efforts);

  double total = 0.0;
  for (const auto& [owner, owned] : counts.counts) total += static_cast<double>(owned);
  page.observed.assign(page.contributors.size(), 0.0);
  for (std::size_t i = 0; i < page.contributors.size(); ++i) {
    auto it = counts.counts.find(page.contributors[i]);
    if (it != counts.counts.end()) {
      page.observed[i] = static_cast<double>(it->second) / total;
    }
  }
  return page;
}

namespace {

std::vector<std::pair<double, double>> points_of(const std::vector<const PageData*>& pages) {
  std::vector<std::pair<double, double>> out;
  for (const PageData* page : pages) {
    for (std::size_t i = 0; i < page->predicted.size(); ++i) {
      out.emplace_back(page->predicted[i], page->observed[i]);
    }
  }
  return out;
}

PageReport make_page_report(const PageData& data, bool holdout, double class_tol) {
  PageReport report;
  report.data = data;
  report.holdout = holdout;
  report.pearson = pearson(data.predicted, data.observed);
  report.classes = equivalence_classes(data.predicted, class_tol);
  return report;
}

}  // namespace

ValidationReport validate_pages(const std::vector<PageData>& train,
                                const std::vector<PageData>& holdout,
                                double class_tol) {
  if (train.empty()) {
    throw std::invalid_argument("validation needs at least one training page");
  }
  ValidationReport report;
  std::vector<const PageData*> all;
  std::vector<const PageData*> train_ptrs;
  for (const PageData& page : train) {
    report.pages.push_back(make_page_report(page, false, class_tol));
    all.push_back(&page);
    train_ptrs.push_back(&page);
  }
  for (const PageData& page : holdout) {
    report.pages.push_back(make_page_report(page, true, class_tol));
    all.push_back(&page);
  }

  const auto pooled = points_of(all);
  std::vector<double> pooled_a, pooled_d;
  for (const auto& [a, d] : pooled) {
    pooled_a.push_back(a);
    pooled_d.push_back(d);
  }
  report.pooled_pearson = pearson(pooled_a, pooled_d);

  if (!holdout.empty()) {
    const auto train_points = points_of(train_ptrs);
    report.fit = linear_fit(train_points);
    report.has_fit = true;
    report.train_error_pct = holdout_error(report.fit, train_points);
    for (PageReport& page : report.pages) {
      if (!page.holdout) continue;
      std::vector<std::pair<double, double>> points;
      for (std::size_t i = 0; i < page.data.predicted.size(); ++i) {
        points.emplace_back(page.data.predicted[i], page.data.observed[i]);
      }
      page.error_pct = holdout_error(report.fit, points);
    }
  }
  return report;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string report_to_text(const ValidationReport& report) {
  std::ostringstream out;
  out << "validation report\n=================\n";
  for (const PageReport& page : report.pages) {
    out << "\npage " << page.data.name << (page.holdout ? " [holdout]" : " [train]") << "\n";
    out << "  contributors: " << page.data.contributors.size() << "\n";
    out << "  pearson: " << num(page.pearson) << "\n";
    out << "  equivalence classes: " << page.classes.size() << " (sizes";
    for (const auto& cls : page.classes) out << ' ' << cls.size();
    out << ")\n";
    if (report.has_fit && page.holdout) {
      out << "  estimation error: " << num(page.error_pct) << "%\n";
    }
  }
  out << "\npooled pearson: " << num(report.pooled_pearson) << "\n";
  if (report.has_fit) {
    out << "linear fit: rho=" << num(report.fit.slope)
        << " delta=" << num(report.fit.intercept) << "\n";
    out << "training error: " << num(report.train_error_pct) << "%\n";
  }
  return out.str();
}

std::string report_table_csv(const ValidationReport& report) {
  std::string out = "page,contributor,beta,predicted,observed\n";
  for (const PageReport& page : report.pages) {
    for (std::size_t i = 0; i < page.data.contributors.size(); ++i) {
      out += page.data.name;
      out += ',';
      out += page.data.contributors[i];
      out += ',';
      out += num(page.data.beta[i]);
      out += ',';
      out += num(page.data.predicted[i]);
      out += ',';
      out += num(page.data.observed[i]);
      out += '\n';
    }
  }
  return out;
}

}  // namespace wikigame::empirics
