// Command line front end for the multiscale localization laboratory.
//
// Subcommands:
//   exponents validate|solve   constraint reports and feasibility search
//   cover check                suitable-cover construction and invariants
//   box verdict                one-trial localization verdict for a box
//   msa start|induct           starting-condition and induction experiments
//   green check|twobox         Green-function regularity experiments
//   spacing                    level-spacing statistics vs the analytic floor
//   lifshitz                   ground-state exceedance probe over an L grid

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "emsa/exponents.hpp"
#include "emsa/harness/config.hpp"
#include "emsa/harness/experiments.hpp"
#include "emsa/harness/runner.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<std::string> out;
  std::optional<int> workers;
  std::optional<std::string> format;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool config_required = true) {
  auto* opt = cmd->add_option("--config", flags.config_path, "experiment config file (JSON)");
  if (config_required) opt->required();
  cmd->add_option("--seed", flags.seed, "override the master seed");
  cmd->add_option("--trials", flags.trials, "override the trial count");
  cmd->add_option("--out", flags.out, "override the output directory");
  cmd->add_option("--workers", flags.workers, "override the worker count");
  cmd->add_option("--format", flags.format, "summary format: json or csv");
}

emsa::harness::ExperimentConfig load_with_overrides(const CommonFlags& flags,
                                                    emsa::harness::ExperimentKind kind) {
  auto cfg = emsa::harness::load_config(flags.config_path);
  cfg.experiment = kind;
  if (flags.seed) {
    cfg.master_seed = *flags.seed;
    cfg.disorder.seed_material = *flags.seed;
  }
  if (flags.trials) cfg.trials = *flags.trials;
  if (flags.out) cfg.out_dir = *flags.out;
  if (flags.workers) cfg.workers = *flags.workers;
  if (flags.format) cfg.format = *flags.format;
  return cfg;
}

int run_kind(const CommonFlags& flags, emsa::harness::ExperimentKind kind) {
  const auto cfg = load_with_overrides(flags, kind);
  const auto summary = emsa::harness::run_experiment(cfg);
  std::cout << summary.dump(2) << '\n';
  return 0;
}

void print_exponent_table(const emsa::exponents::ExponentSet& e) {
  std::printf("  xi=%.6g zeta=%.6g beta=%.6g tau=%.6g gamma=%.6g\n", e.xi, e.zeta, e.beta, e.tau,
              e.gamma);
  std::printf("  kappa=%.6g kappa'=%.6g varsigma=%.6g\n", e.kappa, e.kappa_prime, e.varsigma);
  std::printf("  derived: zeta~=%.6g tau~=%.6g varrho=%.6g\n", e.zeta_tilde(), e.tau_tilde(),
              e.varrho());
  const auto violations = emsa::exponents::validate(e);
  if (violations.empty()) {
    std::printf("  all exponent constraints hold\n");
  } else {
    for (const auto& v : violations)
      std::printf("  VIOLATED %s: %s\n", v.equation.c_str(), v.detail.c_str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-volume multiscale localization laboratory"};
  app.require_subcommand(1);

  // --- exponents ---------------------------------------------------------
  auto* exponents_cmd = app.add_subcommand("exponents", "exponent constraint system");
  exponents_cmd->require_subcommand(1);

  emsa::exponents::ExponentSet expset;
  std::string exp_config;
  auto* validate_cmd = exponents_cmd->add_subcommand("validate", "check a tuple against the chain");
  validate_cmd->add_option("--config", exp_config, "read the tuple from a config file");
  validate_cmd->add_option("--xi", expset.xi);
  validate_cmd->add_option("--zeta", expset.zeta);
  validate_cmd->add_option("--beta", expset.beta);
  validate_cmd->add_option("--tau", expset.tau);
  validate_cmd->add_option("--gamma", expset.gamma);
  validate_cmd->add_option("--kappa", expset.kappa);
  validate_cmd->add_option("--kappa-prime", expset.kappa_prime);
  validate_cmd->add_option("--varsigma", expset.varsigma);

  double solve_xi = 0.0, solve_zeta = 0.0;
  int solve_dim = 1;
  std::string solve_mode = "generic";
  std::optional<double> sched_L0;
  double sched_A0 = 1.0, sched_m0 = 0.0, sched_C = 1.0;
  int sched_levels = 6;
  auto* solve_cmd = exponents_cmd->add_subcommand("solve", "search for a feasible tuple");
  solve_cmd->add_option("--xi", solve_xi)->required();
  solve_cmd->add_option("--zeta", solve_zeta)->required();
  solve_cmd->add_option("--dim", solve_dim)->required();
  solve_cmd->add_option("--mode", solve_mode, "generic or bottom");
  solve_cmd->add_option("--schedule-L0", sched_L0, "also print the scale schedule from this L0");
  solve_cmd->add_option("--schedule-A0", sched_A0, "seed interval half-width");
  solve_cmd->add_option("--schedule-m0", sched_m0, "seed rate (defaults to half the cap)");
  solve_cmd->add_option("--schedule-C", sched_C, "rate degradation constant");
  solve_cmd->add_option("--schedule-levels", sched_levels, "rows to print");

  // --- cover --------------------------------------------------------------
  auto* cover_cmd = app.add_subcommand("cover", "suitable covers");
  cover_cmd->require_subcommand(1);
  int cover_dim = 1;
  double cover_L = 0.0, cover_ell = 0.0, cover_varsigma = 0.5;
  std::optional<double> cover_rho;
  std::vector<double> cover_center;
  std::string cover_out;
  auto* cover_check_cmd = cover_cmd->add_subcommand("check", "build a cover and verify it");
  cover_check_cmd->add_option("--dim", cover_dim)->required();
  cover_check_cmd->add_option("--L", cover_L)->required();
  cover_check_cmd->add_option("--ell", cover_ell)->required();
  cover_check_cmd->add_option("--varsigma", cover_varsigma);
  cover_check_cmd->add_option("--rho", cover_rho, "explicit admissible rho");
  cover_check_cmd->add_option("--center", cover_center, "parent center coordinates");
  cover_check_cmd->add_option("--out", cover_out, "write the cover as JSON");

  // --- box ----------------------------------------------------------------
  auto* box_cmd = app.add_subcommand("box", "single-box diagnostics");
  box_cmd->require_subcommand(1);
  CommonFlags box_flags;
  int box_trial = 0;
  std::string dump_potential;
  auto* box_verdict_cmd = box_cmd->add_subcommand("verdict", "one-trial localization verdict");
  add_common(box_verdict_cmd, box_flags);
  box_verdict_cmd->add_option("--trial", box_trial, "trial index");
  box_verdict_cmd->add_option("--dump-potential", dump_potential,
                              "write the sampled potential as CSV (site coords, value)");

  // --- experiments ---------------------------------------------------------
  auto* msa_cmd = app.add_subcommand("msa", "multiscale analysis experiments");
  msa_cmd->require_subcommand(1);
  CommonFlags start_flags, induct_flags;
  auto* start_cmd = msa_cmd->add_subcommand("start", "starting-condition probability estimate");
  add_common(start_cmd, start_flags);
  auto* induct_cmd = msa_cmd->add_subcommand("induct", "induction-step classification experiment");
  add_common(induct_cmd, induct_flags);

  auto* green_cmd = app.add_subcommand("green", "Green-function experiments");
  green_cmd->require_subcommand(1);
  CommonFlags green_flags, twobox_flags;
  auto* green_check_cmd = green_cmd->add_subcommand("check", "single-box regularity bridge");
  add_common(green_check_cmd, green_flags);
  auto* twobox_cmd = green_cmd->add_subcommand("twobox", "two-box either/or regularity");
  add_common(twobox_cmd, twobox_flags);

  CommonFlags spacing_flags;
  auto* spacing_cmd = app.add_subcommand("spacing", "level-spacing statistics");
  add_common(spacing_cmd, spacing_flags);

  CommonFlags lifshitz_flags;
  auto* lifshitz_cmd = app.add_subcommand("lifshitz", "ground-state exceedance probe");
  add_common(lifshitz_cmd, lifshitz_flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate_cmd->parsed()) {
      if (!exp_config.empty()) expset = emsa::harness::load_config(exp_config).exps;
      print_exponent_table(expset);
      return emsa::exponents::validate(expset).empty() ? 0 : 1;
    }
    if (solve_cmd->parsed()) {
      const auto mode = solve_mode == "bottom"
                            ? emsa::exponents::SolveMode::BottomOfSpectrum
                            : emsa::exponents::SolveMode::Generic;
      const auto outcome = emsa::exponents::solve(solve_xi, solve_zeta, solve_dim, mode);
      if (!outcome.feasible()) {
        std::printf("infeasible; binding constraint: %s\n", outcome.binding_constraint.c_str());
        return 1;
      }
      print_exponent_table(*outcome.exponents);
      return 0;
    }
    if (cover_check_cmd->parsed()) {
      if (cover_center.empty()) cover_center.assign(cover_dim, 0.0);
      const emsa::geometry::LatticeBox parent{cover_center, cover_L, cover_dim};
      const auto cover = emsa::geometry::suitable_cover(parent, cover_ell, cover_varsigma, cover_rho);
      const auto check = emsa::geometry::check_cover(cover);
      std::printf("rho=%.6g steps=%d centers=%zu spacing=%.6g\n", cover.rho, cover.steps,
                  cover.center_count(), cover.spacing());
      std::printf("union=%s interior=%s count=%s disjointness=%s\n",
                  check.union_ok ? "ok" : "FAIL", check.interior_ok ? "ok" : "FAIL",
                  check.count_ok ? "ok" : "FAIL", check.disjoint_ok ? "ok" : "FAIL");
      if (!check.detail.empty()) std::printf("detail: %s\n", check.detail.c_str());
      if (!cover_out.empty()) {
        std::ofstream out(cover_out);
        out << emsa::harness::to_record(cover).dump(2) << '\n';
      }
      return check.all() ? 0 : 1;
    }
    if (box_verdict_cmd->parsed()) {
      auto cfg = load_with_overrides(box_flags, emsa::harness::ExperimentKind::Start);
      cfg.validate();
      const auto sites = emsa::geometry::box_sites(cfg.box());
      const auto pot = emsa::model::sample_potential(sites, cfg.disorder, box_trial);
      if (!dump_potential.empty()) {
        std::ofstream out(dump_potential);
        for (std::size_t i = 0; i < sites.size(); ++i) {
          for (int c : sites.sites[i]) out << c << ',';
          out << pot.values[i] << '\n';
        }
      }
      const auto es = emsa::spectral::eigensystem(emsa::model::assemble(sites, pot));
      const auto I = cfg.effective_interval();
      const auto verdict = emsa::spectral::localizing_verdict(es, cfg.m, I, I, cfg.exps.beta,
                                                              cfg.exps.tau, cfg.effective_L());
      emsa::harness::ordered_json out = emsa::harness::to_record(verdict);
      out["trial"] = box_trial;
      std::cout << out.dump(2) << '\n';
      return 0;
    }
    if (start_cmd->parsed()) return run_kind(start_flags, emsa::harness::ExperimentKind::Start);
    if (induct_cmd->parsed()) return run_kind(induct_flags, emsa::harness::ExperimentKind::Induct);
    if (green_check_cmd->parsed())
      return run_kind(green_flags, emsa::harness::ExperimentKind::GreenCheck);
    if (twobox_cmd->parsed()) return run_kind(twobox_flags, emsa::harness::ExperimentKind::TwoBox);
    if (spacing_cmd->parsed())
      return run_kind(spacing_flags, emsa::harness::ExperimentKind::Spacing);
    if (lifshitz_cmd->parsed())
      return run_kind(lifshitz_flags, emsa::harness::ExperimentKind::Lifshitz);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
