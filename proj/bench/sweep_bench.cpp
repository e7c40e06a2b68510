// Reference sweep against the table-driven sweep, serial and threaded.

#include <benchmark/benchmark.h>

#include "topoideal/enumerate.hpp"
#include "topoideal/verify.hpp"

namespace {

using namespace topoideal;

const std::vector<std::string> kSetChecks = {"t1", "t2", "t3", "tt6", "t5.i", "c1.i"};
const std::vector<std::string> kMapChecks = {"tt1", "tt3", "tt7", "tt4"};

void run(benchmark::State& state, const std::vector<std::string>& checks, int points, bool reference, int jobs) {
    topologies(points);
    SuiteOptions opt;
    opt.reference = reference;
    opt.jobs = jobs;
    for (auto _ : state) {
        const Report r = run_theorem_suite(points, checks, opt);
        benchmark::DoNotOptimize(r.spaces_visited);
        if (!r.passed()) state.SkipWithError("violations");
    }
}

void BM_SetsReference(benchmark::State& s) { run(s, kSetChecks, 3, true, 1); }
void BM_SetsTable(benchmark::State& s) { run(s, kSetChecks, 3, false, 1); }
void BM_SetsParallel(benchmark::State& s) { run(s, kSetChecks, 3, false, static_cast<int>(s.range(0))); }
void BM_MapsReference(benchmark::State& s) { run(s, kMapChecks, 2, true, 1); }
void BM_MapsTable(benchmark::State& s) { run(s, kMapChecks, 2, false, 1); }
void BM_MapsParallel(benchmark::State& s) { run(s, kMapChecks, 2, false, static_cast<int>(s.range(0))); }

BENCHMARK(BM_SetsReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SetsTable)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SetsParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_MapsReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapsTable)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapsParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

} // namespace

BENCHMARK_MAIN();
