#pragma once

#include <functional>
#include <string>

#include "emsa/harness/config.hpp"
#include "emsa/harness/records.hpp"

namespace emsa::harness {

/// Runs trial_fn(0..trials-1) on a bounded worker pool. Records reach the
/// sink in trial order; determinism comes from per-trial seed derivation,
/// never from scheduling. Each record gains a trailing "wall_ms" field.
void parallel_trials(int trials, int workers, const std::function<ordered_json(int)>& trial_fn,
                     RecordSink& sink);

/// Executes the configured experiment, streaming records.jsonl and writing
/// summary.csv under cfg.out_dir. Returns the summary object.
ordered_json run_experiment(const ExperimentConfig& cfg);

/// Loads, validates and runs a config file. Returns a process exit status.
int run(const std::string& config_path);

}  // namespace emsa::harness
