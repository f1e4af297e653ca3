#include <benchmark/benchmark.h>

#include "sandtile/sandpile.hpp"
#include "sandtile/tiling.hpp"

using namespace sandtile;

namespace {

StandardRepMatrix running_example() { return StandardRepMatrix(2, 3, IntMat{{3}, {2}}); }

StandardRepMatrix wide_example() {
    return StandardRepMatrix(3, 7, IntMat{{2, -1, 3, 0}, {1, 2, -2, 1}, {0, 3, 1, -2}});
}

void bm_enumerate_bases(benchmark::State& state) {
    auto d = wide_example();
    for (auto _ : state) benchmark::DoNotOptimize(d.enumerate_bases());
}
BENCHMARK(bm_enumerate_bases);

void bm_group_order(benchmark::State& state) {
    auto d = wide_example();
    for (auto _ : state) {
        SandpileLattice lat(d);
        benchmark::DoNotOptimize(lat.group_order());
    }
}
BENCHMARK(bm_group_order);

void bm_w_representatives(benchmark::State& state) {
    auto d = running_example();
    auto w = validate_shifting(d, {Rat(1), Rat(1), Rat(1)});
    for (auto _ : state) benchmark::DoNotOptimize(w_representatives(d, w));
}
BENCHMARK(bm_w_representatives);

void bm_integer_points(benchmark::State& state) {
    IntMat gens{{4, -3, 1}, {2, 5, -2}, {-1, 2, 6}};
    OrientedParallelepiped region(gens, IntVec{Int(0), Int(0), Int(0)});
    region = region.oriented_by({Rat(1), Rat(1), Rat(1)});
    for (auto _ : state) benchmark::DoNotOptimize(region.integer_points());
}
BENCHMARK(bm_integer_points);

void bm_canonical(benchmark::State& state) {
    auto d = wide_example();
    SandpileLattice lat(d);
    IntVec z{Int(17), Int(-23), Int(5), Int(40), Int(-11), Int(8), Int(3)};
    for (auto _ : state) benchmark::DoNotOptimize(lat.canonical(z));
}
BENCHMARK(bm_canonical);

}  // namespace

BENCHMARK_MAIN();
