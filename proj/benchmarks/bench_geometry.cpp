#include <benchmark/benchmark.h>

#include "emsa/geometry.hpp"

namespace {

using namespace emsa::geometry;

void BM_SuitableCover2d(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const LatticeBox parent{{0.0, 0.0}, side, 2};
  for (auto _ : state) {
    auto cover = suitable_cover(parent, 6.0, 0.5);
    benchmark::DoNotOptimize(cover.centers.data());
  }
}
BENCHMARK(BM_SuitableCover2d)->Arg(24)->Arg(48)->Arg(96);

void BM_CoverCheck(benchmark::State& state) {
  const LatticeBox parent{{0.0, 0.0}, static_cast<double>(state.range(0)), 2};
  const auto cover = suitable_cover(parent, 6.0, 0.5);
  for (auto _ : state) {
    auto check = check_cover(cover);
    benchmark::DoNotOptimize(check.union_ok);
  }
}
BENCHMARK(BM_CoverCheck)->Arg(24)->Arg(48);

void BM_Boundary2d(benchmark::State& state) {
  const double side = static_cast<double>(state.range(0));
  const auto theta = box_sites({{0.0, 0.0}, side + 8.0, 2});
  const auto phi = box_sites({{0.0, 0.0}, side, 2});
  for (auto _ : state) {
    auto bd = boundary(phi, theta);
    benchmark::DoNotOptimize(bd.edges.data());
  }
}
BENCHMARK(BM_Boundary2d)->Arg(16)->Arg(32)->Arg(64);

}  // namespace
