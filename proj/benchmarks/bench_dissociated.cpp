#include "addcomb/bohr.hpp"
#include "addcomb/dissociated.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"

#include <benchmark/benchmark.h>

using namespace addcomb;

static void BM_MaximalDissociated(benchmark::State& state) {
    SplitMix64 rng(5);
    const ResidueSet S = random_set(CyclicGroup(state.range(0)), Rational(1, 2), rng);
    for (auto _ : state) benchmark::DoNotOptimize(maximal_dissociated_subset(S));
}
BENCHMARK(BM_MaximalDissociated)->Arg(64)->Arg(256)->Arg(1024);

static void BM_ChangDecomposition(benchmark::State& state) {
    SplitMix64 rng(6);
    const ResidueSet A = random_set(CyclicGroup(state.range(0)), Rational(1, 2), rng);
    const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() / 4));
    for (auto _ : state) benchmark::DoNotOptimize(chang_decomposition(A, alpha));
}
BENCHMARK(BM_ChangDecomposition)->Arg(64)->Arg(256);

static void BM_ImprovedDecomposition(benchmark::State& state) {
    SplitMix64 rng(7);
    ResidueSet A{CyclicGroup(state.range(0))};
    do {
        A = random_set(A.group(), Rational(2, 5), rng);
    } while (A.empty() || 2 * A.size() > A.modulus());
    const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() / 2));
    for (auto _ : state)
        benchmark::DoNotOptimize(improved_decomposition(A, alpha, ImprovedVariant::Star));
}
BENCHMARK(BM_ImprovedDecomposition)->Arg(25)->Arg(55);

static void BM_TwoAMinusTwoA(benchmark::State& state) {
    SplitMix64 rng(8);
    const ResidueSet A = random_set(CyclicGroup(state.range(0)), Rational(1, 2), rng);
    for (auto _ : state) benchmark::DoNotOptimize(two_a_minus_two_a(A));
}
BENCHMARK(BM_TwoAMinusTwoA)->Arg(64)->Arg(256)->Arg(512);

static void BM_BohrSet(benchmark::State& state) {
    SplitMix64 rng(9);
    const ResidueSet K = random_set(CyclicGroup(state.range(0)), Rational(1, 8), rng);
    const BohrSpec spec{K, Eps::from_rational(Rational(1, 20))};
    for (auto _ : state) benchmark::DoNotOptimize(bohr_set(spec));
}
BENCHMARK(BM_BohrSet)->Arg(128)->Arg(512);
