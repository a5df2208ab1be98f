// Component-record computation: serial reference against the OpenMP path.
#include <benchmark/benchmark.h>

#include <string>

#include "dreg/parser.hpp"
#include "dreg/regularity.hpp"

namespace {

void records(benchmark::State& state, const std::string& name) {
  const auto problem = dreg::parse_problem_file(std::string(DREG_CORPUS_DIR) + "/" + name);
  dreg::RegularityOptions opt;
  opt.check_infinity = true;
  opt.jobs = static_cast<int>(state.range(0));
  for (auto _ : state) {
    // a fresh ideal per iteration so cached Groebner bases are not reused
    auto report = dreg::is_regular(problem.ideal(), opt);
    benchmark::DoNotOptimize(report.records.data());
  }
}

}  // namespace

BENCHMARK_CAPTURE(records, gkz_irregular, std::string("gkz_irregular.dreg"))
    ->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK_CAPTURE(records, gkz_regular, std::string("gkz_regular.dreg"))
    ->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
