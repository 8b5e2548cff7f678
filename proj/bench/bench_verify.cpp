// Serial reference runner against the OpenMP runner on the heavier properties.

#include <benchmark/benchmark.h>

#include "ipf/verify.hpp"

namespace {

void run(benchmark::State& state, char const* name, ipf::Execution exec) {
  ipf::Property const* p = ipf::find_property(name);
  auto const cases = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto r = ipf::run_property(*p, cases, 1, 24, exec);
    benchmark::DoNotOptimize(r.checks);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void oracle_serial(benchmark::State& s) { run(s, "oracle_agree", ipf::Execution::serial); }
void oracle_parallel(benchmark::State& s) { run(s, "oracle_agree", ipf::Execution::parallel); }
void assoc_serial(benchmark::State& s) { run(s, "associativity", ipf::Execution::serial); }
void assoc_parallel(benchmark::State& s) { run(s, "associativity", ipf::Execution::parallel); }

}  // namespace

BENCHMARK(oracle_serial)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(oracle_parallel)->Arg(50)->Unit(benchmark::kMillisecond);
BENCHMARK(assoc_serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(assoc_parallel)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
