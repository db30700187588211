#include "addcomb/fourier.hpp"
#include "addcomb/rng.hpp"

#include <benchmark/benchmark.h>

using namespace addcomb;

namespace {

ComplexSignal random_signal(std::int64_t n) {
    SplitMix64 rng(1234);
    ComplexSignal f{CyclicGroup(n)};
    for (auto& v : f.values)
        v = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
    return f;
}

} // namespace

static void BM_DftDirect(benchmark::State& state) {
    const ComplexSignal f = random_signal(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dft_direct(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftDirect)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_DftBluestein(benchmark::State& state) {
    const ComplexSignal f = random_signal(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dft_bluestein(f));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_DftBluestein)->RangeMultiplier(4)->Range(64, 16384)->Complexity();

static void BM_BluesteinPrimeLength(benchmark::State& state) {
    const ComplexSignal f = random_signal(4099); // prime, worst case for radix splits
    for (auto _ : state) benchmark::DoNotOptimize(dft_bluestein(f));
}
BENCHMARK(BM_BluesteinPrimeLength);

static void BM_Convolution(benchmark::State& state) {
    const ComplexSignal f = random_signal(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(convolution(f, f));
}
BENCHMARK(BM_Convolution)->Arg(64)->Arg(256)->Arg(1024);
