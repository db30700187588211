#include "addcomb/energy.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"

#include <benchmark/benchmark.h>

using namespace addcomb;

namespace {

ResidueSet half_set(std::int64_t n) {
    SplitMix64 rng(99);
    return random_set(CyclicGroup(n), Rational(1, 2), rng);
}

} // namespace

static void BM_EnergyCertified(benchmark::State& state) {
    const ResidueSet B = half_set(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(energy_tk(B, k, CountMode::Certified));
}
BENCHMARK(BM_EnergyCertified)->Args({32, 2})->Args({64, 2})->Args({128, 2})->Args({64, 3})->Args({64, 5});

static void BM_EnergyFast(benchmark::State& state) {
    const ResidueSet B = half_set(state.range(0));
    const int k = static_cast<int>(state.range(1));
    for (auto _ : state) {
        try {
            benchmark::DoNotOptimize(energy_tk(B, k, CountMode::Fast));
        } catch (const precision_error&) {
        }
    }
}
BENCHMARK(BM_EnergyFast)->Args({32, 2})->Args({64, 2})->Args({128, 2});

static void BM_EnergyBruteforce(benchmark::State& state) {
    const ResidueSet B = make_set("N=64,ap:start=1,step=7,len=10");
    for (auto _ : state) benchmark::DoNotOptimize(energy_tk_bruteforce(B, 3));
}
BENCHMARK(BM_EnergyBruteforce);
