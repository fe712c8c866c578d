#include <benchmark/benchmark.h>

#include "dissension/measures.hpp"
#include "dissension/sweep.hpp"

using namespace dissension;

namespace {

SweepRequest surface_request() {
  SweepRequest req;
  req.state = StateSpec::mixed_w(0.0);
  req.measure = Measure::D1;
  req.t_axis = linspace(0.0, 6.283185307179586, 91);
  req.a_axis = linspace(0.0, 1.0, 21);
  return req;
}

void BM_SweepSerial(benchmark::State& state) {
  const auto req = surface_request();
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep_serial(req));
}
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);

void BM_SweepParallel(benchmark::State& state) {
  const auto req = surface_request();
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(run_sweep(req, workers));
}
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_Delta1(benchmark::State& state) {
  const DensityMatrix w = make_state(StateSpec::w());
  const MinimizerConfig config{.grid_points = 720, .refine_tol = 1e-8, .workers = static_cast<int>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(delta1(w, {}, config));
}
BENCHMARK(BM_Delta1)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

void BM_D1Point(benchmark::State& state) {
  const DensityMatrix w = make_state(StateSpec::w());
  double t = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(D1(w, {}, t));
    t += 1e-3;
  }
}
BENCHMARK(BM_D1Point);

}  // namespace

BENCHMARK_MAIN();
