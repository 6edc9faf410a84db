#include "emsa/harness/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "emsa/hamiltonian.hpp"

namespace emsa::harness {

std::string experiment_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Start: return "start";
    case ExperimentKind::Induct: return "induct";
    case ExperimentKind::Spacing: return "spacing";
    case ExperimentKind::Lifshitz: return "lifshitz";
    case ExperimentKind::TwoBox: return "twobox";
    case ExperimentKind::GreenCheck: return "green";
  }
  return "unknown";
}

ExperimentKind parse_experiment(const std::string& name) {
  if (name == "start") return ExperimentKind::Start;
  if (name == "induct") return ExperimentKind::Induct;
  if (name == "spacing") return ExperimentKind::Spacing;
  if (name == "lifshitz") return ExperimentKind::Lifshitz;
  if (name == "twobox") return ExperimentKind::TwoBox;
  if (name == "green") return ExperimentKind::GreenCheck;
  throw std::invalid_argument("experiment: unknown kind '" + name + "'");
}

spectral::EnergyInterval ExperimentConfig::effective_interval() const {
  if (!bottom_width) return interval;
  const auto spectrum = model::almost_sure_spectrum(disorder, dim);
  return {spectrum.front().first, *bottom_width};
}

double ExperimentConfig::effective_L() const {
  if (L > 0) return L;
  if (experiment == ExperimentKind::Induct && ell > 1)
    return std::round(std::pow(ell, exps.gamma));
  return L;
}

geometry::LatticeBox ExperimentConfig::box(const std::vector<double>& center_override) const {
  geometry::RealPoint center = center_override.empty()
                                   ? (box_center.empty() ? geometry::RealPoint(dim, 0.0)
                                                         : box_center)
                                   : center_override;
  return geometry::LatticeBox{center, effective_L(), dim};
}

void ExperimentConfig::validate() const {
  if (dim < 1 || dim > 3) throw std::invalid_argument("dim: must be 1, 2 or 3");
  disorder.validate();
  if (trials < 1) throw std::invalid_argument("trials: need at least one");
  if (workers < 1) throw std::invalid_argument("workers: need at least one");
  if (format != "json" && format != "csv")
    throw std::invalid_argument("format: must be json or csv");
  if (!box_center.empty() && static_cast<int>(box_center.size()) != dim)
    throw std::invalid_argument("box_center: dimension mismatch");

  const auto violations = exponents::validate(exps);
  if (!violations.empty())
    throw std::invalid_argument("exponents: violates " + violations.front().equation + " (" +
                                violations.front().detail + ")");

  const bool sweeps_L =
      experiment == ExperimentKind::Spacing || experiment == ExperimentKind::Lifshitz;
  if ((!sweeps_L || L_grid.empty()) && effective_L() < 2)
    throw std::invalid_argument("L: box side must be at least 2");
  for (double level : L_grid)
    if (level < 2) throw std::invalid_argument("L_grid: box sides must be at least 2");
  if (experiment == ExperimentKind::Induct) {
    if (ell < 2) throw std::invalid_argument("ell: child scale must be at least 2");
    if (L > 0 && std::abs(L - std::round(std::pow(ell, exps.gamma))) > 0.5)
      throw std::invalid_argument("L: must equal round(ell^gamma) for induction runs");
  }

  const auto I = effective_interval();
  if (I.half_width <= 0) throw std::invalid_argument("interval: half_width must be positive");
  if (m <= 0) throw std::invalid_argument("m: localization rate must be positive");
  const bool rate_capped = experiment == ExperimentKind::Start ||
                           experiment == ExperimentKind::Induct ||
                           experiment == ExperimentKind::TwoBox ||
                           experiment == ExperimentKind::GreenCheck;
  if (rate_capped && m > exponents::mass_cap(I.half_width, dim) * (1.0 + 1e-12))
    throw std::invalid_argument("m: exceeds the cap (1/2) log(1 + A/4d)");
  if (lambda_points < 1) throw std::invalid_argument("lambda_points: need at least one");
}

namespace {

template <typename T>
T get_required(const nlohmann::json& j, const std::string& key) {
  if (!j.contains(key)) throw std::invalid_argument(key + ": missing required field");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(key + ": wrong type");
  }
}

template <typename T>
T get_or(const nlohmann::json& j, const std::string& key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument(key + ": wrong type");
  }
}

}  // namespace

ExperimentConfig config_from_json(const nlohmann::json& j) {
  ExperimentConfig cfg;
  cfg.experiment = parse_experiment(get_required<std::string>(j, "experiment"));
  cfg.dim = get_or(j, "dim", 1);
  cfg.L = get_or(j, "L", 0.0);
  cfg.ell = get_or(j, "ell", 0.0);

  if (j.contains("disorder")) {
    const auto& dj = j.at("disorder");
    const auto family = get_or<std::string>(dj, "family", "uniform");
    if (family == "uniform") cfg.disorder.family = model::DisorderFamily::Uniform;
    else if (family == "discretized_hoelder")
      cfg.disorder.family = model::DisorderFamily::DiscretizedHoelder;
    else throw std::invalid_argument("disorder.family: unknown family '" + family + "'");
    cfg.disorder.a = get_or(dj, "a", 0.0);
    cfg.disorder.b = get_or(dj, "b", 1.0);
    cfg.disorder.alpha = get_or(dj, "alpha", 1.0);
    cfg.disorder.levels = get_or(dj, "levels", 8);
    cfg.disorder.g = get_or(dj, "g", 1.0);
  }

  if (j.contains("interval")) {
    cfg.interval.center = get_required<double>(j.at("interval"), "center");
    cfg.interval.half_width = get_required<double>(j.at("interval"), "half_width");
  }
  if (j.contains("bottom")) cfg.bottom_width = get_required<double>(j.at("bottom"), "B");

  if (j.contains("exponents")) {
    const auto& ej = j.at("exponents");
    cfg.exps.xi = get_required<double>(ej, "xi");
    cfg.exps.zeta = get_required<double>(ej, "zeta");
    cfg.exps.beta = get_required<double>(ej, "beta");
    cfg.exps.tau = get_required<double>(ej, "tau");
    cfg.exps.gamma = get_required<double>(ej, "gamma");
    cfg.exps.kappa = get_required<double>(ej, "kappa");
    cfg.exps.kappa_prime = get_required<double>(ej, "kappa_prime");
    cfg.exps.varsigma = get_required<double>(ej, "varsigma");
  } else {
    throw std::invalid_argument("exponents: missing required field");
  }

  if (j.contains("rates")) {
    cfg.m = get_required<double>(j.at("rates"), "m");
    cfg.C = get_or(j.at("rates"), "C", 1.0);
  } else {
    throw std::invalid_argument("rates: missing required field");
  }

  cfg.trials = get_or(j, "trials", 100);
  cfg.master_seed = get_or<std::uint64_t>(j, "master_seed", 1);
  cfg.disorder.seed_material =
      j.contains("disorder") && j.at("disorder").contains("seed_material")
          ? j.at("disorder").at("seed_material").get<std::uint64_t>()
          : cfg.master_seed;
  cfg.workers = get_or(j, "workers", 1);
  cfg.out_dir = get_or<std::string>(j, "out", "out");
  cfg.format = get_or<std::string>(j, "format", "json");
  cfg.L_grid = get_or(j, "L_grid", std::vector<double>{});
  cfg.c_grid = get_or(j, "c_grid", std::vector<double>{});
  cfg.separation = get_or(j, "separation", 0.0);
  cfg.lambda_points = get_or(j, "lambda_points", 41);
  cfg.box_center = get_or(j, "box_center", std::vector<double>{});
  return cfg;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& cfg) {
  nlohmann::ordered_json j;
  j["experiment"] = experiment_name(cfg.experiment);
  j["dim"] = cfg.dim;
  if (cfg.L > 0) j["L"] = cfg.L;
  if (cfg.ell > 0) j["ell"] = cfg.ell;
  j["disorder"] = {
      {"family",
       cfg.disorder.family == model::DisorderFamily::Uniform ? "uniform" : "discretized_hoelder"},
      {"a", cfg.disorder.a},
      {"b", cfg.disorder.b},
      {"alpha", cfg.disorder.alpha},
      {"levels", cfg.disorder.levels},
      {"g", cfg.disorder.g},
      {"seed_material", cfg.disorder.seed_material}};
  if (cfg.bottom_width) j["bottom"] = {{"B", *cfg.bottom_width}};
  else j["interval"] = {{"center", cfg.interval.center}, {"half_width", cfg.interval.half_width}};
  j["exponents"] = {{"xi", cfg.exps.xi},       {"zeta", cfg.exps.zeta},
                    {"beta", cfg.exps.beta},   {"tau", cfg.exps.tau},
                    {"gamma", cfg.exps.gamma}, {"kappa", cfg.exps.kappa},
                    {"kappa_prime", cfg.exps.kappa_prime},
                    {"varsigma", cfg.exps.varsigma}};
  j["rates"] = {{"m", cfg.m}, {"C", cfg.C}};
  j["trials"] = cfg.trials;
  j["master_seed"] = cfg.master_seed;
  j["workers"] = cfg.workers;
  j["out"] = cfg.out_dir;
  j["format"] = cfg.format;
  if (!cfg.L_grid.empty()) j["L_grid"] = cfg.L_grid;
  if (!cfg.c_grid.empty()) j["c_grid"] = cfg.c_grid;
  if (cfg.separation > 0) j["separation"] = cfg.separation;
  j["lambda_points"] = cfg.lambda_points;
  if (!cfg.box_center.empty()) j["box_center"] = cfg.box_center;
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("config parse error in " + path + ": " + e.what());
  }
  return config_from_json(j);
}

}  // namespace emsa::harness
