// Serial against OpenMP-parallel execution of the CPDS branch loop and of
// sampled verification; CPDSKIT_THREADS sets the worker count.
#include <benchmark/benchmark.h>

#include "cpdskit/cpds.hpp"
#include "cpdskit/text.hpp"

namespace {

using namespace cpdskit;

Ideal make_ideal(const std::vector<std::string>& params,
                 const std::vector<std::string>& vars,
                 const std::vector<std::string>& gens) {
  RingPtr ring = Ring::make(params, vars);
  std::vector<Polynomial> polys;
  for (const auto& g : gens) polys.push_back(parse_polynomial(g, ring));
  return Ideal(ring, polys);
}

Ideal cyclic4() {
  return make_ideal({"c0"}, {"c1", "c2", "c3"},
                    {"c0+c1+c2+c3", "c0*c1+c1*c2+c2*c3+c3*c0",
                     "c0*c1*c2+c1*c2*c3+c2*c3*c0+c3*c0*c1", "c0*c1*c2*c3-1"});
}

Ideal i1() { return make_ideal({"a", "b"}, {"x1", "x2"}, {"x1^2-a", "b*x1*x2"}); }

Execution mode(const benchmark::State& state) {
  return state.range(0) ? Execution::parallel : Execution::serial;
}

void BM_FeasibleCyclic4(benchmark::State& state) {
  CpdsOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(feasible_cpds(cyclic4(), options));
  }
}
BENCHMARK(BM_FeasibleCyclic4)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_MinimalI1(benchmark::State& state) {
  CpdsOptions options;
  options.execution = mode(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(minimal_feasible_cpds(i1(), options));
  }
}
BENCHMARK(BM_MinimalI1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_VerifySampledI1(benchmark::State& state) {
  Cpds cpds = minimal_feasible_cpds(i1());
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_sampled(cpds, VerifyLevel::minimal, 3, 8, mode(state)));
  }
}
BENCHMARK(BM_VerifySampledI1)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
