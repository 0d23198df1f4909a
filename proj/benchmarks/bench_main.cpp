#include <cmath>
#include <numbers>
#include <vector>

#include <benchmark/benchmark.h>

#include "coriolis/ellipse.hpp"
#include "coriolis/kinematics.hpp"
#include "coriolis/rng.hpp"
#include "coriolis/synth.hpp"
#include "coriolis/wavepacket.hpp"

namespace {

using namespace coriolis;

SequenceGeometry bench_geometry() {
  SequenceGeometry g;
  g.bragg_order = 5;
  g.pulse_separation = 0.180;
  g.mid_separation = 0.002;
  return g;
}

const WavePacket kPacket{{105e-9, 86e-9, 813e-9}};

void BM_Overlap(benchmark::State& state) {
  const Eigen::Vector3d delta(120e-9, 30e-9, 400e-9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(overlap(kPacket, delta));
  }
}
BENCHMARK(BM_Overlap);

void BM_ClosureError(benchmark::State& state) {
  const AtomSpecies cs = cesium_species();
  const SequenceGeometry g = bench_geometry();
  for (auto _ : state) {
    benchmark::DoNotOptimize(closure_error(cs, g));
  }
}
BENCHMARK(BM_ClosureError);

void BM_EllipseFit(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  RandomStream rng(7);
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    const double t = rng.uniform(0.0, 2.0 * std::numbers::pi);
    pts.emplace_back(0.27 * std::cos(t) + 0.005 * rng.normal(),
                     0.27 * std::cos(t + 2.8) + 0.005 * rng.normal());
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(fit_ellipse(pts));
  }
}
BENCHMARK(BM_EllipseFit)->Arg(20)->Arg(100)->Arg(400);

void BM_SimulateShot(benchmark::State& state) {
  const AtomSpecies cs = cesium_species();
  const SequenceGeometry g = bench_geometry();
  const NoiseModel noise;
  std::uint64_t shot = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_shot(cs, g, kPacket, noise, 1, 0, shot++));
  }
}
BENCHMARK(BM_SimulateShot);

void BM_SimulateScan(benchmark::State& state) {
  const AtomSpecies cs = cesium_species();
  const SequenceGeometry g = bench_geometry();
  ScanSpec spec;
  spec.parameter = ScanParameter::kCompRateYp;
  spec.start = -165e-6;
  spec.stop = 285e-6;
  spec.points = 21;
  spec.shots_per_point = 100;
  const int threads = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        simulate_scan(cs, g, kPacket, NoiseModel{}, spec, 1, threads));
  }
}
BENCHMARK(BM_SimulateScan)->Arg(1)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
