// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion carries a wall-clock budget that is part of the
// verdict. Run all criteria or a single one with --only N.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "emsa/calculus.hpp"
#include "emsa/disorder.hpp"
#include "emsa/exponents.hpp"
#include "emsa/geometry.hpp"
#include "emsa/hamiltonian.hpp"
#include "emsa/harness/experiments.hpp"
#include "emsa/harness/runner.hpp"
#include "emsa/interval.hpp"
#include "emsa/spectral.hpp"

using namespace emsa;
using geometry::Site;
using geometry::SiteSet;
using spectral::EnergyInterval;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome ok(std::string detail) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::string format_count(const char* label, long long value) {
  std::ostringstream os;
  os << label << "=" << value;
  return os.str();
}

// ---------------------------------------------------------------------------
// shared experiment configurations (all constants pinned here)

exponents::ExponentSet bottom_exponents() {
  exponents::ExponentSet e;
  e.xi = 0.15;
  e.zeta = 0.5;
  e.beta = 0.6;
  e.tau = 0.96;
  e.gamma = 1.5;
  e.kappa = 0.03;
  e.kappa_prime = 0.01;
  e.varsigma = 0.5;
  return e;
}

// induction / Green-bridge configuration: d=1, ell=13, gamma=1.5 (L=47),
// uniform(0,1) disorder at g=15, interval of half-width 1/2 at the bottom of
// the almost-sure spectrum, rate m=0.05 under the cap (1/2)log(1 + A/4d)
harness::ExperimentConfig induction_config() {
  harness::ExperimentConfig cfg;
  cfg.experiment = harness::ExperimentKind::Induct;
  cfg.dim = 1;
  cfg.ell = 13.0;
  cfg.disorder.g = 15.0;
  cfg.disorder.seed_material = 7119;
  cfg.bottom_width = 0.5;
  cfg.exps = bottom_exponents();
  cfg.m = 0.05;
  cfg.trials = 100;
  cfg.master_seed = 7119;
  cfg.workers = 4;
  cfg.lambda_points = 41;
  return cfg;
}

// eigenvalue-matching configuration: high disorder, box of side 13 in the
// corner of a side-34 region, wide mid-band interval
struct MatchSetup {
  EnergyInterval I{7.5, 8.0};
  double m = 0.5;
  exponents::ExponentSet exps;
  model::DisorderSpec disorder;
  MatchSetup() {
    exps.xi = 0.05;
    exps.zeta = 0.25;
    exps.beta = 0.38;
    exps.tau = 0.8;
    exps.gamma = 2.0;
    exps.kappa = 0.03;
    exps.kappa_prime = 0.005;
    exps.varsigma = 0.5;
    disorder.g = 15.0;
    disorder.seed_material = 6345;
  }
};

// ---------------------------------------------------------------------------
// criterion 1: randomized suitable-cover invariants

Outcome criterion_geometry() {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> varsigma_dist(0.25, 0.75), center_dist(-4.0, 4.0);
  int built = 0, attempts = 0;
  while (built < 100) {
    if (++attempts > 2000) return fail("could not draw 100 admissible configurations");
    const int d = 1 + static_cast<int>(rng() % 2);
    const double ell = 2.0 + static_cast<double>(rng() % 6);
    const double L = 2.0 * ell + static_cast<double>(rng() % (d == 1 ? 36 : 20));
    geometry::RealPoint center(d);
    for (auto& c : center) c = center_dist(rng);
    geometry::CoverSpec cover;
    try {
      cover = geometry::suitable_cover({center, L, d}, ell, varsigma_dist(rng));
    } catch (const std::runtime_error&) {
      continue;  // admissible rho set empty for this draw
    }
    ++built;
    const auto check = geometry::check_cover(cover);
    if (!check.all())
      return fail("cover invariants failed at config " + std::to_string(built) + ": " +
                  check.detail);
  }
  return ok(format_count("configs", built));
}

// ---------------------------------------------------------------------------
// criterion 2: coupling identity, path spectra, worker-count reproducibility

std::string normalized_records(const std::filesystem::path& file) {
  std::ifstream in(file);
  std::string line, out;
  while (std::getline(in, line)) {
    auto j = harness::ordered_json::parse(line);
    j.erase("wall_ms");
    out += j.dump();
    out += '\n';
  }
  return out;
}

Outcome criterion_operator() {
  std::mt19937_64 rng(202);
  // 100 random (Theta, Phi) splits: Gamma identity must hold entrywise
  for (int rep = 0; rep < 100; ++rep) {
    const int d = 1 + static_cast<int>(rng() % 2);
    const double side = 4.0 + static_cast<double>(rng() % (d == 1 ? 30 : 8));
    geometry::RealPoint center(d, 0.5 * static_cast<double>(rng() % 3));
    const auto theta = geometry::box_sites({center, side, d});
    std::vector<Site> phi_sites;
    for (const auto& y : theta.sites)
      if (rng() % 3) phi_sites.push_back(y);
    const auto phi = SiteSet::from_unsorted(d, phi_sites);
    model::DisorderSpec spec;
    spec.g = 3.0;
    spec.seed_material = 900 + rep;
    const auto h = model::assemble(theta, model::sample_potential(theta, spec, rep));
    const Eigen::MatrixXd decoupled = model::decoupled_hamiltonian(h, phi);
    const Eigen::MatrixXd gamma = model::coupling_gamma(phi, theta);
    if ((h.matrix - (decoupled + gamma)).cwiseAbs().maxCoeff() != 0.0)
      return fail("coupling decomposition not exact at split " + std::to_string(rep));
  }

  // path-graph spectra against the closed form
  for (int n : {10, 60, 120, 200}) {
    std::vector<Site> sites;
    for (int x = 1; x <= n; ++x) sites.push_back({x});
    const auto region = SiteSet::from_unsorted(1, sites);
    model::DisorderSpec free_spec;
    free_spec.g = 0.0;
    const auto es = spectral::eigensystem(
        model::assemble(region, model::sample_potential(region, free_spec, 0)));
    for (int j = 1; j <= n; ++j)
      if (std::abs(es.values(j - 1) + 2.0 * std::cos(j * M_PI / (n + 1.0))) > 1e-10)
        return fail("path spectrum off the closed form at n=" + std::to_string(n));
  }

  // records bit-exact across 1 vs 8 workers
  auto cfg = induction_config();
  cfg.experiment = harness::ExperimentKind::Start;
  cfg.L = 21.0;
  cfg.ell = 0.0;
  cfg.trials = 16;
  const auto base = std::filesystem::temp_directory_path() / "emsa_acc2";
  std::filesystem::remove_all(base);
  cfg.out_dir = (base / "w1").string();
  cfg.workers = 1;
  harness::run_experiment(cfg);
  cfg.out_dir = (base / "w8").string();
  cfg.workers = 8;
  harness::run_experiment(cfg);
  if (normalized_records(base / "w1" / "records.jsonl") !=
      normalized_records(base / "w8" / "records.jsonl"))
    return fail("records differ between 1 and 8 workers");
  return ok("splits=100 paths<=200 workers{1,8} bit-exact");
}

// ---------------------------------------------------------------------------
// criterion 3: functional-calculus bounds

Outcome criterion_calculus() {
  std::mt19937_64 rng(303);

  // resolvent splitting identity on 50 random instances, 1e-8
  {
    std::uniform_real_distribution<double> lambda_dist(-1.5, 1.5), t_dist(0.05, 1.0);
    int done = 0;
    while (done < 50) {
      model::DisorderSpec spec;
      spec.g = 2.0;
      spec.seed_material = 3000 + done;
      const auto sites = geometry::box_sites({{0.0}, 20.0, 1});
      const auto h = model::assemble(sites, model::sample_potential(sites, spec, done));
      const auto es = spectral::eigensystem(h);
      const double lambda = lambda_dist(rng), t = t_dist(rng);
      double gap = 1e300;
      for (int k = 0; k < es.size(); ++k) gap = std::min(gap, std::abs(es.values(k) - lambda));
      if (gap < 1e-3) continue;
      ++done;
      // independent route for G: LU inversion of the assembled matrix
      const int n = es.size();
      const Eigen::MatrixXd g_direct =
          (h.matrix - lambda * Eigen::MatrixXd::Identity(n, n))
              .partialPivLu()
              .solve(Eigen::MatrixXd(Eigen::MatrixXd::Identity(n, n)));
      const Eigen::MatrixXd f = calculus::f_t_lambda(es, t, lambda, 0.0);
      const Eigen::MatrixXd heat = calculus::apply_spectral_function(
          es, [&](double z) { return std::exp(-t * (z * z - lambda * lambda)); });
      if ((g_direct - (f + g_direct * heat)).cwiseAbs().maxCoeff() > 1e-8)
        return fail("splitting identity residual above 1e-8 at instance " + std::to_string(done));
    }
  }

  // heat-tail bound on 100 random (H, t, lambda), plus the exact edge case
  {
    const EnergyInterval I{0.5, 1.5};
    std::uniform_real_distribution<double> t_dist(0.01, 4.0), lambda_dist(I.lo(), I.hi());
    for (int rep = 0; rep < 100; ++rep) {
      model::DisorderSpec spec;
      spec.g = 4.0;
      spec.seed_material = 4000 + rep;
      const auto sites = geometry::box_sites({{0.0}, 30.0, 1});
      const auto es = spectral::eigensystem(
          model::assemble(sites, model::sample_potential(sites, spec, rep)));
      double lambda = lambda_dist(rng);
      while (!I.contains(lambda)) lambda = lambda_dist(rng);
      const auto report = calculus::check_heat_tail(es, t_dist(rng), lambda, I);
      if (!report.all_pass()) return fail("heat-tail bound failed at draw " + std::to_string(rep));
    }
    // eigenvalue exactly on the closed edge: the factor equals the bound
    std::vector<Site> two{{0}, {1}};
    Eigen::MatrixXd diag = Eigen::MatrixXd::Zero(2, 2);
    diag(0, 0) = I.hi();  // exactly at distance A from the center
    diag(1, 1) = I.center;
    const auto es_edge = spectral::eigensystem({SiteSet::from_unsorted(1, two), diag});
    const auto edge = calculus::check_heat_tail(es_edge, 1.3, 0.9, I);
    if (std::abs(edge.pairs[0].computed - edge.pairs[0].bound) >
        1e-12 * std::max(1.0, edge.pairs[0].bound))
      return fail("heat-tail equality case not exact");
  }

  // modulated kernel decay at the rate cap on 50 random boxes, all pairs
  {
    const EnergyInterval I{1.0, 4.0};
    const double cap = 0.5 * std::log1p(4.0 / 4.0);
    std::uniform_real_distribution<double> lambda_dist(I.lo() + 0.1, I.hi() - 0.1);
    std::uniform_int_distribution<int> side_dist(10, 40);
    for (int rep = 0; rep < 50; ++rep) {
      model::DisorderSpec spec;
      spec.g = 2.0;
      spec.seed_material = 5000 + rep;
      const auto sites = geometry::box_sites({{0.0}, static_cast<double>(side_dist(rng)), 1});
      const auto es = spectral::eigensystem(
          model::assemble(sites, model::sample_potential(sites, spec, rep)));
      const auto report = calculus::check_combes_thomas(es, lambda_dist(rng), I.center, I, cap);
      if (!report.modulated.all_pass())
        return fail("modulated kernel bound failed at box " + std::to_string(rep));
      if (!report.eta_form.all_pass())
        return fail("eta-form kernel bound failed at box " + std::to_string(rep));
    }
  }
  return ok("splitting=50 heat=100+edge kernel_boxes=50");
}

// ---------------------------------------------------------------------------
// criterion 4: modulating-weight identities, interval maps, verdict monotonicity

Outcome criterion_spectral() {
  const EnergyInterval I{0.7, 1.3};
  if (spectral::modulating_weight(I.center, I) != 1.0) return fail("center weight is not one");
  if (spectral::modulating_weight(I.lo(), I) != 0.0 ||
      spectral::modulating_weight(I.hi(), I) != 0.0)
    return fail("endpoint weight is not zero");
  for (double t = I.lo() - 2.0; t <= I.hi() + 2.0; t += 0.01) {
    const double w = spectral::modulating_weight(t, I);
    if ((w > 0) != I.contains(t)) return fail("weight support differs from the interval");
  }
  for (double ell : {3.0, 21.0, 144.0}) {
    const double kappa = 0.45;
    const auto shrunk = spectral::shrink_interval(I, ell, kappa);
    const double floor = std::pow(ell, -kappa);
    for (int i = 0; i < 1000; ++i) {
      const double t = shrunk.lo() + (shrunk.hi() - shrunk.lo()) * (i + 0.5) / 1000.0;
      if (spectral::modulating_weight(t, I) < floor - 1e-12)
        return fail("weight floor violated on the shrunk interval");
    }
    const auto round_trip = spectral::expand_interval(shrunk, ell, kappa);
    if (std::abs(round_trip.half_width - I.half_width) > 1e-15 * I.half_width)
      return fail("shrink/expand round trip not exact");
  }

  // verdict monotonicity in the rate on 20 random realizations
  model::DisorderSpec spec;
  spec.g = 8.0;
  spec.seed_material = 404;
  const auto sites = geometry::box_sites({{0.0}, 15.0, 1});
  const EnergyInterval window{4.0, 2.0};
  for (int trial = 0; trial < 20; ++trial) {
    const auto es = spectral::eigensystem(
        model::assemble(sites, model::sample_potential(sites, spec, trial)));
    bool passed_larger = false;
    for (double m : {0.4, 0.2, 0.1, 0.05}) {  // descending
      const auto verdict = spectral::localizing_verdict(es, m, window, window, 0.5, 0.6, 15.0);
      if (passed_larger && !verdict.overall)
        return fail("verdict not monotone in the rate at trial " + std::to_string(trial));
      passed_larger = passed_larger || verdict.overall;
    }
  }
  return ok("weight+maps exact, monotonicity on 20 realizations");
}

// ---------------------------------------------------------------------------
// criterion 5: exponent system

Outcome criterion_exponents() {
  exponents::ExponentSet e;
  e.xi = 0.7;
  e.zeta = 0.8;
  e.beta = 0.9;
  e.tau = 0.998;
  e.gamma = 1.05;
  e.kappa = 0.03;
  e.kappa_prime = 0.02;
  e.varsigma = 0.5;
  if (!exponents::validate(e).empty()) return fail("worked tuple rejected");
  if (std::abs(e.varrho() - 0.001) > 1e-12) return fail("derived varrho incorrect");

  // eight single-constraint mutations, each rejected with the right equation
  struct Mutation {
    std::function<void(exponents::ExponentSet&)> tweak;
    const char* equation;
  };
  const std::vector<Mutation> mutations{
      {[](auto& x) { x.xi = x.zeta; }, "1.1"},
      {[](auto& x) { x.beta = 0.79; }, "1.1"},
      {[](auto& x) { x.gamma = 1.08; }, "1.1"},  // above sqrt(zeta/xi) = 1.069
      {[](auto& x) { x.tau = 0.94; }, "1.1"},    // below gamma beta = 0.945
      {[](auto& x) { x.tau = 1.0; }, "1.1"},
      {[](auto& x) { x.kappa = 0.05; }, "1.5"},  // 0.05 + 0.02 > 0.0531
      {[](auto& x) { x.kappa_prime = 1.0; }, "1.5"},
      {[](auto& x) { x.varsigma = 0.9995; }, "1.7"}};  // above 1 - varrho = 0.999
  for (std::size_t i = 0; i < mutations.size(); ++i) {
    auto mutated = e;
    mutations[i].tweak(mutated);
    bool found = false;
    for (const auto& v : exponents::validate(mutated))
      if (v.equation == mutations[i].equation) found = true;
    if (!found)
      return fail("mutation " + std::to_string(i) + " not rejected with equation " +
                  mutations[i].equation);
  }

  // bottom-of-spectrum feasibility boundary zeta < d/(d+2)
  for (int d : {1, 2, 3}) {
    const double boundary = static_cast<double>(d) / (d + 2);
    const double below = boundary - 0.02;
    const auto feasible =
        exponents::solve(below / 2, below, d, exponents::SolveMode::BottomOfSpectrum);
    if (!feasible.feasible()) return fail("feasible zeta rejected at d=" + std::to_string(d));
    if (!exponents::validate(*feasible.exponents).empty())
      return fail("solver output fails validation at d=" + std::to_string(d));
    if (std::abs(feasible.exponents->kappa_prime - 2.0 * below / d) > 1e-12)
      return fail("bottom mode did not fix kappa'");
    const auto infeasible =
        exponents::solve(boundary / 2, boundary, d, exponents::SolveMode::BottomOfSpectrum);
    if (infeasible.feasible() || infeasible.binding_constraint.substr(0, 3) != "2.3")
      return fail("boundary zeta not rejected via 2.3 at d=" + std::to_string(d));
  }

  // schedule limits: monotone in L0, truncation tail below 1e-12
  auto sched_exps = e;
  sched_exps.kappa = 0.5;
  double previous = 0.0;
  for (double L0 : {16.0, 64.0, 256.0}) {
    const auto sched = exponents::schedule(L0, sched_exps, 1.0, 0.05, 1.0, 4, 1);
    if (sched.tail_bound >= 1e-12) return fail("limit truncation tail too large");
    if (sched.A_inf <= previous) return fail("limit not monotone in L0");
    if (sched.A_inf >= 1.0) return fail("limit exceeded the seed width");
    previous = sched.A_inf;
  }
  return ok("tuple+8 mutations, 2.3 boundary d=1..3, limits monotone");
}

// ---------------------------------------------------------------------------
// criterion 6: eigenvalue matching bound (hard)

Outcome criterion_matching() {
  const MatchSetup setup;
  const auto theta_sites = geometry::box_sites({{0.0}, 34.0, 1});
  const auto inner_sites = geometry::box_sites({{-10.5}, 13.0, 1});

  spectral::MatchParams params;
  params.m = setup.m;
  params.ell = 13.0;
  params.kappa = setup.exps.kappa;
  params.tau = setup.exps.tau;

  int hypotheses_held = 0, pairs_checked = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto pot = model::sample_potential(theta_sites, setup.disorder, trial);
    const auto h_theta = model::assemble(theta_sites, pot);
    const auto es_inner = spectral::eigensystem(model::restrict_to(h_theta, inner_sites));
    const auto verdict = spectral::localizing_verdict(es_inner, setup.m, setup.I, setup.I,
                                                      setup.exps.beta, setup.exps.tau, 13.0);
    if (!verdict.overall) continue;  // hypothesis failure: logged, not counted against
    ++hypotheses_held;
    const auto es_theta = spectral::eigensystem(h_theta);
    const auto report = spectral::match_eigenvalues(es_inner, es_theta, setup.I, params);
    for (const auto& pair : report.pairs) {
      ++pairs_checked;
      if (!pair.bound_ok)
        return fail("matching bound failed at trial " + std::to_string(trial) +
                    " distance=" + std::to_string(pair.distance) +
                    " bound=" + std::to_string(pair.bound));
    }
  }
  if (pairs_checked == 0) return fail("no selected eigenvalues; experiment vacuous");
  return ok("trials_with_hypotheses=" + std::to_string(hypotheses_held) +
            " pairs=" + std::to_string(pairs_checked));
}

// ---------------------------------------------------------------------------
// criterion 7: level-spacing statistics vs the analytic floor

Outcome criterion_spacing() {
  auto cfg = induction_config();
  cfg.experiment = harness::ExperimentKind::Spacing;
  cfg.L = 0.0;
  cfg.ell = 0.0;
  cfg.L_grid = {13.0, 21.0, 34.0};
  cfg.trials = 500;
  cfg.master_seed = 7777;
  cfg.disorder.seed_material = 7777;
  harness::NullSink sink;
  const auto results = harness::level_spacing_experiment(cfg, sink);
  std::string detail;
  for (const auto& r : results) {
    if (r.bound_vacuous) return fail("spacing floor vacuous at L=" + std::to_string(r.L));
    if (!r.non_violation)
      return fail("empirical frequency fell below the floor at L=" + std::to_string(r.L));
    std::ostringstream os;
    os << " L" << r.L << ":" << r.estimate.p_hat << ">=" << *r.estimate.compared_bound;
    detail += os.str();
  }
  return ok("N=500" + detail);
}

// ---------------------------------------------------------------------------
// criterion 8: induction-step implication (hard on the implication)

Outcome criterion_induction() {
  const auto cfg = induction_config();
  harness::NullSink sink;
  const auto summary = harness::induction_experiment(cfg, sink);
  if (summary.implication_failures != 0)
    return fail(format_count("implication_failures", summary.implication_failures));
  if (summary.events_held == 0) return fail("events never held; experiment vacuous");
  std::ostringstream os;
  os << "trials=" << summary.trials << " events_held=" << summary.events_held
     << " buffered_built=" << summary.buffered_built
     << " hypothesis_failures=" << (summary.trials - summary.events_held);
  return ok(os.str());
}

// ---------------------------------------------------------------------------
// criterion 9: Green-function bridge on the induction boxes (hard)

Outcome criterion_green_bridge() {
  auto cfg = induction_config();
  cfg.experiment = harness::ExperimentKind::GreenCheck;
  cfg.L = 47.0;  // round(13^1.5), the induction box
  harness::NullSink sink;
  const auto summary = harness::green_check_experiment(cfg, sink);
  if (summary.bound_failures != 0)
    return fail(format_count("bound_failures", summary.bound_failures));
  if (summary.splitting_failures != 0)
    return fail(format_count("splitting_failures", summary.splitting_failures));
  if (summary.lambdas_checked == 0) return fail("no admissible grid energies; vacuous");
  std::ostringstream os;
  os << "boxes=" << summary.boxes_localizing << "/" << summary.trials
     << " lambdas=" << summary.lambdas_checked << " excluded=" << summary.lambdas_excluded;
  return ok(os.str());
}

// ---------------------------------------------------------------------------
// criterion 10: byte-identical reruns regardless of worker count

Outcome criterion_reproducibility() {
  auto cfg = induction_config();
  cfg.trials = 12;
  const auto base = std::filesystem::temp_directory_path() / "emsa_acc10";
  std::filesystem::remove_all(base);

  cfg.workers = 1;
  cfg.out_dir = (base / "a").string();
  harness::run_experiment(cfg);
  cfg.out_dir = (base / "b").string();
  harness::run_experiment(cfg);
  cfg.workers = 8;
  cfg.out_dir = (base / "c").string();
  harness::run_experiment(cfg);

  const auto a = normalized_records(base / "a" / "records.jsonl");
  if (a.empty()) return fail("no records written");
  if (a != normalized_records(base / "b" / "records.jsonl"))
    return fail("rerun with identical config differs");
  if (a != normalized_records(base / "c" / "records.jsonl"))
    return fail("records depend on the worker count");
  return ok("rerun + workers{1,8} byte-identical modulo timing");
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::strcmp(argv[i], "--only") == 0) only = std::atoi(argv[i + 1]);

  const std::vector<Criterion> criteria{
      {1, "geometry cover invariants", 10.0, criterion_geometry},
      {2, "operator assembly and reproducibility", 30.0, criterion_operator},
      {3, "functional-calculus bounds", 120.0, criterion_calculus},
      {4, "spectral identities and verdicts", 60.0, criterion_spectral},
      {5, "exponent system", 5.0, criterion_exponents},
      {6, "eigenvalue matching bound", 120.0, criterion_matching},
      {7, "level-spacing statistics", 300.0, criterion_spacing},
      {8, "induction-step implication", 600.0, criterion_induction},
      {9, "Green-function bridge", 300.0, criterion_green_bridge},
      {10, "record reproducibility", 120.0, criterion_reproducibility},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    if (only != 0 && criterion.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = criterion.run();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < criterion.budget_seconds;
    const bool pass = outcome.pass && in_budget;
    all_pass = all_pass && pass;
    std::printf("[%2d] %-42s %s (%.1fs%s) %s\n", criterion.id, criterion.name,
                pass ? "PASS" : "FAIL", elapsed, in_budget ? "" : " OVER BUDGET",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
