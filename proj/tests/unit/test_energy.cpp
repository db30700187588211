#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/spectrum.hpp"

#include <doctest.h>

#include <cmath>

using namespace addcomb;

TEST_CASE("sum distribution of {0,1} in Z_10, k=2") {
    auto dist = sum_distribution(make_set("N=10,list:0,1"), 2);
    CHECK(dist[0] == 1);
    CHECK(dist[1] == 2);
    CHECK(dist[2] == 1);
    for (std::size_t x = 3; x < 10; ++x) CHECK(dist[x] == 0);
}

TEST_CASE("energy examples") {
    // singleton: exactly one tuple for every k
    for (int k : {1, 2, 3, 4}) CHECK(energy_tk(make_set("N=9,list:4"), k) == 1);
    // full group: last coordinate is determined, N^(2k-1)
    CHECK(energy_tk(ResidueSet::full(CyclicGroup(6)), 2) == 216);
    // the worked pair examples
    CHECK(energy_tk(make_set("N=10,list:0,1"), 2) == 6);
    CHECK(energy_tk(make_set("N=7,list:1,2"), 2) == 6);
    CHECK(energy_tk(make_set("N=5,list:1,4"), 2) == 6);
    // empty set
    CHECK(energy_tk(ResidueSet(CyclicGroup(5)), 3) == 0);
    CHECK(energy_tk_bruteforce(ResidueSet(CyclicGroup(5)), 3) == 0);
    CHECK_THROWS_AS(energy_tk(make_set("N=5,list:1"), 0), input_error);
}

TEST_CASE("brute force guard refuses oversized enumerations") {
    Budget tiny;
    tiny.max_tuples = 100;
    CHECK_THROWS_AS(energy_tk_bruteforce(ResidueSet::full(CyclicGroup(12)), 3, tiny), budget_error);
}

TEST_CASE("fast and certified paths agree with the oracle") {
    SplitMix64 rng(21);
    for (int i = 0; i < 60; ++i) {
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(28));
        const int k = rng.next_below(2) == 0 ? 2 : 3;
        ResidueSet B = random_set(CyclicGroup(n), Rational(1, 4), rng);
        if (std::pow(static_cast<double>(B.size()), 2.0 * k) > 1e7) continue;
        const BigCount oracle = energy_tk_bruteforce(B, k);
        CHECK(energy_tk(B, k, CountMode::Certified) == oracle);
        CHECK(energy_tk(B, k, CountMode::Fast) == oracle);
    }
}

TEST_CASE("diagonal lower bound t_k >= |B|^k") {
    SplitMix64 rng(22);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(30));
        ResidueSet B = random_set(CyclicGroup(n), Rational(1, 3), rng);
        if (B.empty()) continue;
        for (int k : {1, 2, 3})
            CHECK(energy_tk(B, k) >= pow_count(B.size(), static_cast<unsigned>(k)));
    }
}

TEST_CASE("spectral identity sum |Bhat|^4 = N T_2 after rounding") {
    SplitMix64 rng(23);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t n = 3 + static_cast<std::int64_t>(rng.next_below(30));
        ResidueSet B = random_set(CyclicGroup(n), Rational(1, 3), rng);
        auto power = power_spectrum(B);
        double sum = 0.0;
        for (double p : power) sum += p * p;
        CHECK(BigCount(static_cast<std::int64_t>(std::llround(sum / static_cast<double>(n)))) ==
              energy_tk(B, 2));
    }
}

TEST_CASE("lower bound formula") {
    CHECK(tk_lower_bound(0.5, 0.5, 2, 1) == doctest::Approx(0.001953125).epsilon(1e-12));
    // delta = alpha: delta m^(2k) / 2^(4k)
    CHECK(tk_lower_bound(0.25, 0.25, 2, 3) == doctest::Approx(0.25 * 81.0 / 256.0).epsilon(1e-12));
    CHECK(tk_lower_bound_exact(Rational(1, 2), Rational(1, 4), 2, 1) == Rational(1, 512));
    CHECK_THROWS_AS(tk_lower_bound(0.5, 0.6, 2, 1), input_error);
    CHECK_THROWS_AS(tk_lower_bound(0.5, 0.25, 1, 1), input_error);
}

TEST_CASE("main theorem verification") {
    // A = {0,2} in Z_4, alpha = 1/2, k = 2: B = {2}, T_2 = 1 >= 0.001953125
    EnergyReport rep = verify_main_theorem(make_set("N=4,list:0,2"), Alpha::from_rational(Rational(1, 2)), 2);
    CHECK(rep.pass);
    CHECK(rep.count == 1);
    CHECK(rep.set_size == 1);
    CHECK(rep.bound == doctest::Approx(0.001953125));
    CHECK(rep.exact_comparison);
    CHECK(*rep.bound_exact == Rational(1, 512));

    // A = Z_N, alpha = 1: B empty, 0 >= 0
    EnergyReport empty = verify_main_theorem(ResidueSet::full(CyclicGroup(5)), Alpha::from_rational(Rational(1)), 2);
    CHECK(empty.pass);
    CHECK(empty.count == 0);
    CHECK(empty.bound == 0.0);

    // odd k is allowed but flagged
    EnergyReport odd = verify_main_theorem(make_set("N=4,list:0,2"), Alpha::from_rational(Rational(1, 2)), 3);
    CHECK(odd.odd_k);

    CHECK_THROWS_AS(verify_main_theorem(make_set("N=4,list:0,2"), Alpha::from_rational(Rational(1, 2)), 1),
                    input_error);
}

TEST_CASE("level lemma verification") {
    // empty window passes vacuously
    EnergyReport empty = verify_level_lemma(ResidueSet::full(CyclicGroup(5)), Alpha::from_rational(Rational(1)), 2);
    CHECK(empty.pass);
    CHECK(empty.count == 0);

    // A = {0,1} in Z_5, alpha' = 3/10: B' = {1,4}, T_2 = 6 >= 81/640
    EnergyReport rep = verify_level_lemma(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), 2);
    CHECK(rep.pass);
    CHECK(rep.count == 6);
    CHECK(rep.set_size == 2);
    CHECK(*rep.bound_exact == Rational(81, 640));
    CHECK(rep.bound == doctest::Approx(0.1265625));

    // even k uses the general form; odd k > 2 is rejected
    CHECK(verify_level_lemma(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), 4).pass);
    CHECK_THROWS_AS(verify_level_lemma(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), 3),
                    input_error);

    // the bound holds for arbitrary subsets of the window
    EnergyReport sub = verify_level_lemma(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), 2,
                                          make_set("N=5,list:1"));
    CHECK(sub.pass);
    CHECK(sub.count == 1);
    CHECK(sub.set_size == 1);
    CHECK_THROWS_AS(verify_level_lemma(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), 2,
                                       make_set("N=5,list:2")),
                    input_error); // 2 is outside the window
}

TEST_CASE("energy dominates the dyadic pieces: T_k(B) >= sum_i T_k(B_i)") {
    SplitMix64 rng(24);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = 5 + static_cast<std::int64_t>(rng.next_below(28));
        ResidueSet A = random_set(CyclicGroup(n), Rational(1, 2), rng);
        if (A.empty()) continue;
        const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() / 4));
        SpectrumLevelSet R = spectrum_threshold(A, alpha);
        const BigCount whole = energy_tk(R.members.without_zero(), 2);
        BigCount pieces = 0;
        for (const auto& level : dyadic_levels(A, alpha)) pieces += energy_tk(level.members, 2);
        CHECK(whole >= pieces);
    }
}
