// Serial reference kernels against the OpenMP fan-out on the same sources.
#include <benchmark/benchmark.h>

#include "fracmatch/harness.hpp"

using namespace fracmatch;

namespace {

const GraphSource &sampled() {
	static const GraphSource s = GraphSource::sample(SampleSpec::parse("30,1/2,2000,7"));
	return s;
}

const GraphSource &enumerated() {
	static const GraphSource s = GraphSource::enumerate(6);
	return s;
}

void BM_SweepSampleSerial(benchmark::State &state) {
	for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_sweep_serial(sampled()).summary.graphs);
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sampled().size()));
}

void BM_SweepSampleParallel(benchmark::State &state) {
	SweepOptions o;
	o.workers = static_cast<int>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(verify_theorem_sweep(sampled(), o).summary.graphs);
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(sampled().size()));
}

void BM_ChecksEnumerateSerial(benchmark::State &state) {
	for (auto _ : state) benchmark::DoNotOptimize(run_checks_serial(enumerated(), kCheckAll).graphs);
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumerated().size()));
}

void BM_ChecksEnumerateParallel(benchmark::State &state) {
	const int workers = static_cast<int>(state.range(0));
	for (auto _ : state) benchmark::DoNotOptimize(run_checks(enumerated(), kCheckAll, workers).graphs);
	state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(enumerated().size()));
}

} // namespace

BENCHMARK(BM_SweepSampleSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SweepSampleParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChecksEnumerateSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_ChecksEnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
