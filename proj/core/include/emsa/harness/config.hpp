#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "emsa/disorder.hpp"
#include "emsa/exponents.hpp"
#include "emsa/interval.hpp"

namespace emsa::harness {

enum class ExperimentKind { Start, Induct, Spacing, Lifshitz, TwoBox, GreenCheck };

std::string experiment_name(ExperimentKind kind);
ExperimentKind parse_experiment(const std::string& name);

/// One experiment description; all physical quantities in lattice/energy
/// units. Every referenced sub-validation runs before any trial does.
struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Start;
  int dim = 1;
  double L = 0.0;    // box side; induct derives round(ell^gamma) when 0
  double ell = 0.0;  // child scale
  model::DisorderSpec disorder;
  spectral::EnergyInterval interval;  // ignored when bottom_width is set
  std::optional<double> bottom_width; // interval at the almost-sure spectrum bottom
  exponents::ExponentSet exps;
  double m = 0.0;  // localization rate
  double C = 1.0;  // rate-degradation constant
  int trials = 100;
  std::uint64_t master_seed = 1;
  int workers = 1;
  std::string out_dir = "out";
  std::string format = "json";
  std::vector<double> L_grid;       // spacing / lifshitz sweeps
  std::vector<double> c_grid;       // lifshitz constant sweep
  double separation = 0.0;          // twobox center distance; default 2L
  int lambda_points = 41;
  std::vector<double> box_center;   // defaults to the origin

  /// Interval actually in force (bottom-of-spectrum experiments recenter at
  /// inf of the almost-sure spectrum).
  spectral::EnergyInterval effective_interval() const;
  double effective_L() const;
  geometry::LatticeBox box(const std::vector<double>& center_override = {}) const;

  void validate() const;  // throws with the offending field named
};

ExperimentConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg);
ExperimentConfig load_config(const std::string& path);

}  // namespace emsa::harness
