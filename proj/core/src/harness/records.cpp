#include "emsa/harness/records.hpp"

#include <cmath>
#include <stdexcept>

namespace emsa::harness {

ProbabilityEstimate wilson_estimate(int successes, int trials) {
  if (trials < 1) throw std::invalid_argument("estimate needs at least one trial");
  if (successes < 0 || successes > trials)
    throw std::invalid_argument("successes must lie in [0, trials]");
  constexpr double z = 1.959963984540054;  // 97.5% normal quantile
  ProbabilityEstimate est;
  est.successes = successes;
  est.trials = trials;
  est.p_hat = static_cast<double>(successes) / trials;
  const double n = trials;
  const double denom = 1.0 + z * z / n;
  const double center = (est.p_hat + z * z / (2.0 * n)) / denom;
  const double hw =
      z * std::sqrt(est.p_hat * (1.0 - est.p_hat) / n + z * z / (4.0 * n * n)) / denom;
  est.lo = successes == 0 ? 0.0 : std::max(0.0, center - hw);
  est.hi = successes == trials ? 1.0 : std::min(1.0, center + hw);
  return est;
}

void MemorySink::write(int trial_index, ordered_json record) {
  std::lock_guard lock(mutex_);
  records_[trial_index] = std::move(record);
}

JsonlWriter::JsonlWriter(const std::string& path) : out_(path) {
  if (!out_) throw std::runtime_error("cannot open record file: " + path);
}

void JsonlWriter::write(int trial_index, ordered_json record) {
  std::lock_guard lock(mutex_);
  pending_[trial_index] = std::move(record);
  flush_ready();
}

void JsonlWriter::flush_ready() {
  while (true) {
    auto it = pending_.find(next_);
    if (it == pending_.end()) break;
    out_ << it->second.dump() << '\n';
    out_.flush();
    pending_.erase(it);
    ++next_;
  }
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += '"';
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(fields[i]);
  }
  out += "\r\n";
  return out;
}

ordered_json to_record(const ProbabilityEstimate& est) {
  ordered_json j;
  j["successes"] = est.successes;
  j["trials"] = est.trials;
  j["p_hat"] = est.p_hat;
  j["wilson_lo"] = est.lo;
  j["wilson_hi"] = est.hi;
  if (est.compared_bound) j["compared_bound"] = *est.compared_bound;
  return j;
}

ordered_json to_record(const spectral::LocalizationVerdict& verdict) {
  int in_window = 0, failed = 0;
  for (const auto& row : verdict.rows) {
    if (row.in_window) {
      ++in_window;
      if (!row.achieved) ++failed;
    }
  }
  ordered_json j;
  j["level_spacing"] = verdict.level_spacing;
  j["eigenvalues_in_window"] = in_window;
  j["window_rows_failed"] = failed;
  j["witness_rate"] = verdict.witness_rate;
  j["overall"] = verdict.overall;
  return j;
}

ordered_json to_record(const spectral::MatchReport& report) {
  ordered_json pairs = ordered_json::array();
  int bound_failures = 0;
  for (const auto& p : report.pairs) {
    ordered_json pj;
    pj["inner_value"] = p.inner_value;
    pj["outer_value"] = p.outer_value;
    pj["distance"] = p.distance;
    pj["bound"] = p.bound;
    pj["bound_ok"] = p.bound_ok;
    if (!p.bound_ok) ++bound_failures;
    pairs.push_back(std::move(pj));
  }
  ordered_json j;
  j["selected"] = report.selected;
  j["injective"] = report.injective;
  j["bound_failures"] = bound_failures;
  j["pairs"] = std::move(pairs);
  return j;
}

ordered_json to_record(const calculus::BoundReport& report) {
  ordered_json j;
  j["bound_id"] = calculus::bound_id_name(report.id);
  j["hypotheses_ok"] = report.hypotheses_ok;
  if (!report.hypothesis_failure.empty()) j["hypothesis_failure"] = report.hypothesis_failure;
  j["pairs"] = report.pairs.size();
  j["failures"] = report.failures();
  j["excluded_near_singular"] = report.excluded_near_singular;
  j["all_pass"] = report.all_pass();
  return j;
}

ordered_json to_record(const geometry::SiteSet& sites) {
  ordered_json arr = ordered_json::array();
  for (const auto& y : sites.sites) arr.push_back(y);
  ordered_json j;
  j["dim"] = sites.dim;
  j["size"] = sites.size();
  j["sites"] = std::move(arr);
  return j;
}

ordered_json to_record(const geometry::CoverSpec& cover) {
  ordered_json j;
  j["parent_center"] = cover.parent.center;
  j["parent_side"] = cover.parent.side;
  j["dim"] = cover.parent.dim;
  j["child_side"] = cover.child_side;
  j["varsigma"] = cover.varsigma;
  j["rho"] = cover.rho;
  j["steps"] = cover.steps;
  j["spacing"] = cover.spacing();
  j["centers"] = cover.centers;
  return j;
}

ordered_json to_record(const exponents::ScaleSchedule& schedule) {
  ordered_json levels = ordered_json::array();
  for (const auto& row : schedule.levels) {
    ordered_json rj;
    rj["L"] = row.L;
    rj["A"] = row.A;
    rj["m"] = row.m;
    levels.push_back(std::move(rj));
  }
  ordered_json j;
  j["levels"] = std::move(levels);
  j["A_inf"] = schedule.A_inf;
  j["m_inf"] = schedule.m_inf;
  j["tail_bound"] = schedule.tail_bound;
  return j;
}

ordered_json to_record(const exponents::ExponentSet& exps) {
  ordered_json j;
  j["xi"] = exps.xi;
  j["zeta"] = exps.zeta;
  j["beta"] = exps.beta;
  j["tau"] = exps.tau;
  j["gamma"] = exps.gamma;
  j["kappa"] = exps.kappa;
  j["kappa_prime"] = exps.kappa_prime;
  j["varsigma"] = exps.varsigma;
  j["zeta_tilde"] = exps.zeta_tilde();
  j["tau_tilde"] = exps.tau_tilde();
  j["varrho"] = exps.varrho();
  return j;
}

ordered_json to_record(const geometry::BufferedSubset& buffered) {
  ordered_json j;
  j["region_size"] = buffered.region.size();
  j["core_size"] = buffered.core.size();
  j["buffer_boxes"] = buffered.buffer_indices.size();
  j["buffer_interior_size"] = buffered.buffer_interior.size();
  j["grown_g1_connected"] = buffered.grown_g1_connected;
  j["connected"] = buffered.connected;
  j["boundary_covered"] = buffered.boundary_covered;
  j["level_spacing_ok"] = buffered.level_spacing_ok;
  j["diameter"] = buffered.diameter;
  return j;
}

}  // namespace emsa::harness
