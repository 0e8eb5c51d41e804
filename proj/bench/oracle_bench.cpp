// Serial versus OpenMP exhaustive oracle. Instances are the heavier ones the
// acceptance run uses: imaginary extensions multiply the system count.

#include <benchmark/benchmark.h>

#include "mergepath/generators.hpp"
#include "mergepath/oracle.hpp"

using namespace mergepath;

namespace {

Instance extension(std::uint64_t seed) {
    RandomOptions o;
    o.single_source = true;
    const Instance base = gen_random(seed, o);
    std::vector<PathSystem> systems;
    for (const auto& p : base.pairs) systems.push_back(menger_paths(base.graph, p));
    return extend_imaginary(base.graph, systems);
}

const Instance& pick(int which) {
    static const std::vector<Instance> all{gen_extremal_22(), gen_isolated(3, 0, 2), extension(4007), extension(4012)};
    return all.at(which);
}

OracleOptions wide(int jobs) {
    OracleOptions o;
    o.budget = 100'000'000;
    o.jobs = jobs;
    return o;
}

void BM_serial(benchmark::State& state) {
    const Instance& inst = pick(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_min_serial(inst.graph, inst.pairs, wide(1)).value);
}

void BM_parallel(benchmark::State& state) {
    const Instance& inst = pick(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(brute_force_min(inst.graph, inst.pairs, wide(static_cast<int>(state.range(1)))).value);
}

}  // namespace

BENCHMARK(BM_serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_parallel)->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
