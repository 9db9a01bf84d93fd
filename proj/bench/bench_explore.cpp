// Serial reference vs OpenMP evaluation of the per-cell sample plan.
#include "prf/explore.hpp"
#include "prf/geometry.hpp"
#include "prf/problem.hpp"

#include <benchmark/benchmark.h>

#include <omp.h>

namespace {

struct Fixture {
  prf::ParametricSystem sys;
  std::vector<prf::Sample> plan;
};

const Fixture& fixture(int which) {
  static const auto make = [](const prf::ParametricSystem& sys) {
    Fixture f{sys, {}};
    f.plan = prf::sample_plan(prf::decompose(prf::discriminant_variety(sys), sys));
    return f;
  };
  static const Fixture fx[] = {
      make(prf::generate(prf::builtin("it-quadratic-ratio").problem).system),
      make(prf::generate(prf::builtin("rt-circum-inradius").problem).system),
      make(prf::generate(prf::builtin("it-median-perimeter").problem).system),
      make(prf::load_problem_file(PRF_PROBLEMS_DIR "/rt-circum-inradius-coords.prf").system().system),
  };
  return fx[which];
}

const char* kNames[] = {"it-quadratic-ratio", "rt-circum-inradius", "it-median-perimeter",
                        "rt-circum-inradius-coords"};

void evaluate(benchmark::State& state, prf::Execution exec) {
  const Fixture& f = fixture(static_cast<int>(state.range(0)));
  prf::SolveOptions opts;
  opts.exec = exec;
  for (auto _ : state) benchmark::DoNotOptimize(prf::evaluate_samples(f.sys, f.plan, opts));
  state.SetLabel(std::string(kNames[state.range(0)]) + ", " + std::to_string(f.plan.size()) + " samples, " +
                 std::to_string(exec == prf::Execution::Parallel ? omp_get_max_threads() : 1) + " threads");
}

void BM_EvaluateSerial(benchmark::State& state) { evaluate(state, prf::Execution::Serial); }
void BM_EvaluateParallel(benchmark::State& state) { evaluate(state, prf::Execution::Parallel); }

void BM_SolveSerial(benchmark::State& state) {
  const auto sys = prf::generate(prf::builtin("it-median-perimeter").problem).system;
  prf::SolveOptions opts;
  opts.exec = prf::Execution::Serial;
  for (auto _ : state) benchmark::DoNotOptimize(prf::solve(sys, opts));
}

void BM_SolveParallel(benchmark::State& state) {
  const auto sys = prf::generate(prf::builtin("it-median-perimeter").problem).system;
  for (auto _ : state) benchmark::DoNotOptimize(prf::solve(sys));
}

}  // namespace

BENCHMARK(BM_EvaluateSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EvaluateParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SolveParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
