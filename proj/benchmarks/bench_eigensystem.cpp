#include <benchmark/benchmark.h>

#include "emsa/disorder.hpp"
#include "emsa/hamiltonian.hpp"
#include "emsa/spectral.hpp"

namespace {

using namespace emsa;

void BM_EigensystemBox1d(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const auto sites = geometry::box_sites({{0.0}, side, 1});
  model::DisorderSpec spec;
  spec.g = 15.0;
  spec.seed_material = 42;
  const auto h = model::assemble(sites, model::sample_potential(sites, spec, 0));
  for (auto _ : state) {
    auto es = spectral::eigensystem(h);
    benchmark::DoNotOptimize(es.values.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EigensystemBox1d)->Arg(13)->Arg(47)->Arg(128)->Arg(256)->Complexity();

void BM_EigensystemBox2d(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const auto sites = geometry::box_sites({{0.0, 0.0}, side, 2});
  model::DisorderSpec spec;
  spec.g = 15.0;
  spec.seed_material = 42;
  const auto h = model::assemble(sites, model::sample_potential(sites, spec, 0));
  for (auto _ : state) {
    auto es = spectral::eigensystem(h);
    benchmark::DoNotOptimize(es.values.data());
  }
}
BENCHMARK(BM_EigensystemBox2d)->Arg(8)->Arg(16)->Arg(24);

void BM_PotentialSampling(benchmark::State& state) {
  const auto sites = geometry::box_sites({{0.0, 0.0}, static_cast<double>(state.range(0)), 2});
  model::DisorderSpec spec;
  spec.g = 1.0;
  spec.seed_material = 7;
  std::uint64_t trial = 0;
  for (auto _ : state) {
    auto pot = model::sample_potential(sites, spec, trial++);
    benchmark::DoNotOptimize(pot.values.data());
  }
}
BENCHMARK(BM_PotentialSampling)->Arg(16)->Arg(48);

}  // namespace
