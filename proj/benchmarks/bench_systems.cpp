#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/systems.hpp"

#include <benchmark/benchmark.h>

using namespace addcomb;

namespace {

ResidueSet quarter_set(std::int64_t n) {
    SplitMix64 rng(7);
    return random_set(CyclicGroup(n), Rational(1, 4), rng);
}

ComplexSignal signal(std::int64_t n) {
    SplitMix64 rng(8);
    ComplexSignal f{CyclicGroup(n)};
    for (auto& v : f.values)
        v = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
    return f;
}

} // namespace

static void BM_CountSolutionsExact(benchmark::State& state) {
    const ResidueSet B = quarter_set(state.range(0));
    const int d = static_cast<int>(state.range(1));
    Budget wide;
    wide.max_tuples = 1e9;
    for (auto _ : state)
        benchmark::DoNotOptimize(count_solutions(B, 2, d, SolveMode::Exact, wide));
}
BENCHMARK(BM_CountSolutionsExact)->Args({16, 1})->Args({32, 1})->Args({64, 1})->Args({16, 2});

static void BM_CountSolutionsFast(benchmark::State& state) {
    const ResidueSet B = quarter_set(state.range(0));
    const int d = static_cast<int>(state.range(1));
    Budget wide;
    wide.max_tuples = 1e9;
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(count_solutions(B, 2, d, SolveMode::Fast, wide));
        } catch (const precision_error&) {
        }
    }
}
BENCHMARK(BM_CountSolutionsFast)->Args({16, 1})->Args({32, 1})->Args({64, 1})->Args({16, 2});

static void BM_GowersNorm(benchmark::State& state) {
    const ComplexSignal f = signal(state.range(0));
    const int d = static_cast<int>(state.range(1));
    Budget wide;
    wide.max_tuples = 1e9;
    for (auto _ : state) benchmark::DoNotOptimize(gowers_norm(f, d, wide));
}
BENCHMARK(BM_GowersNorm)->Args({32, 2})->Args({32, 3})->Args({64, 3})->Args({128, 3});
