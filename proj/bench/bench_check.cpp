// Serial versus OpenMP pointwise checks on the sampled points of a data file.

#include <benchmark/benchmark.h>

#include <string>

#include "ramify/check.hpp"

using namespace ramify;

namespace {

struct Fixture {
  ProblemFile problem;
  Projection projection;
  CheckPlan plan;

  explicit Fixture(const std::string& name)
      : problem(load_problem(std::string(RAMIFY_DATA_DIR) + "/" + name)),
        projection(problem.ideal, problem.center),
        plan(make_check_plan(projection)) {}
};

const Fixture& node() {
  static const Fixture f("twisted_cubic_node.ramify");
  return f;
}

void BM_CheckSerial(benchmark::State& state) {
  const auto& f = node();
  const auto points = sample_points(*f.problem.parametrization, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_points_serial(f.plan, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_CheckParallel(benchmark::State& state) {
  const auto& f = node();
  const auto points = sample_points(*f.problem.parametrization, static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(check_points(f.plan, points));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

} // namespace

BENCHMARK(BM_CheckSerial)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CheckParallel)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
