#include "emsa/harness/runner.hpp"

#include <atomic>
#include <chrono>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>
#include <vector>

#include "emsa/harness/experiments.hpp"

namespace emsa::harness {

namespace {

ordered_json timed(const std::function<ordered_json(int)>& fn, int index) {
  const auto start = std::chrono::steady_clock::now();
  ordered_json record = fn(index);
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
  record["wall_ms"] = elapsed.count();
  return record;
}

}  // namespace

void parallel_trials(int trials, int workers, const std::function<ordered_json(int)>& trial_fn,
                     RecordSink& sink) {
  if (trials <= 0) return;
  if (workers <= 1) {
    for (int i = 0; i < trials; ++i) sink.write(i, timed(trial_fn, i));
    return;
  }
  std::atomic<int> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto body = [&] {
    while (true) {
      const int i = next.fetch_add(1);
      if (i >= trials) return;
      try {
        sink.write(i, timed(trial_fn, i));
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min(workers, trials);
  pool.reserve(count);
  for (int w = 0; w < count; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

namespace {

void write_summary_csv(const std::string& path, const ordered_json& summary) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open summary file: " + path);
  out << csv_row({"key", "value"});
  for (const auto& [key, value] : summary.items())
    out << csv_row({key, value.is_string() ? value.get<std::string>() : value.dump()});
}

}  // namespace

ordered_json run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::filesystem::create_directories(cfg.out_dir);
  JsonlWriter sink(cfg.out_dir + "/records.jsonl");
  {
    std::ofstream cfg_out(cfg.out_dir + "/config.json");
    cfg_out << config_to_json(cfg).dump(2) << '\n';
  }

  ordered_json summary;
  summary["experiment"] = experiment_name(cfg.experiment);
  switch (cfg.experiment) {
    case ExperimentKind::Start: {
      const auto est = estimate_localizing_probability(cfg, sink);
      summary["estimate"] = to_record(est);
      break;
    }
    case ExperimentKind::Induct: {
      const auto result = induction_experiment(cfg, sink);
      summary["trials"] = result.trials;
      summary["b_held"] = result.b_held;
      summary["s_held"] = result.s_held;
      summary["events_held"] = result.events_held;
      summary["verdict_true"] = result.verdict_true;
      summary["implication_failures"] = result.implication_failures;
      summary["buffered_built"] = result.buffered_built;
      summary["disjoint_indeterminate"] = result.disjoint_indeterminate;
      break;
    }
    case ExperimentKind::Spacing: {
      ordered_json rows = ordered_json::array();
      for (const auto& r : level_spacing_experiment(cfg, sink)) {
        ordered_json row;
        row["L"] = r.L;
        row["estimate"] = to_record(r.estimate);
        row["bound_vacuous"] = r.bound_vacuous;
        row["non_violation"] = r.non_violation;
        rows.push_back(std::move(row));
      }
      summary["levels"] = std::move(rows);
      break;
    }
    case ExperimentKind::Lifshitz: {
      ordered_json rows = ordered_json::array();
      for (const auto& p : lifshitz_experiment(cfg, sink)) {
        ordered_json row;
        row["L"] = p.L;
        row["threshold_scale"] = p.threshold_scale;
        row["target"] = p.target;
        row["best_c"] = p.best_c;
        row["near_violations"] = p.near_violations;
        rows.push_back(std::move(row));
      }
      summary["levels"] = std::move(rows);
      break;
    }
    case ExperimentKind::TwoBox: {
      const auto result = green_twobox_experiment(cfg, sink);
      summary["either_or"] = to_record(result.either_or);
      summary["wegner_degenerate"] = result.wegner_degenerate;
      summary["hyp_both_localizing"] = result.hyp_both_localizing;
      summary["hyp_spectra_separated"] = result.hyp_spectra_separated;
      break;
    }
    case ExperimentKind::GreenCheck: {
      const auto result = green_check_experiment(cfg, sink);
      summary["trials"] = result.trials;
      summary["boxes_localizing"] = result.boxes_localizing;
      summary["lambdas_checked"] = result.lambdas_checked;
      summary["lambdas_excluded"] = result.lambdas_excluded;
      summary["bound_failures"] = result.bound_failures;
      summary["splitting_failures"] = result.splitting_failures;
      break;
    }
  }
  write_summary_csv(cfg.out_dir + "/summary.csv", summary);
  return summary;
}

int run(const std::string& config_path) {
  try {
    const ExperimentConfig cfg = load_config(config_path);
    const ordered_json summary = run_experiment(cfg);
    std::cout << summary.dump(2) << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace emsa::harness
