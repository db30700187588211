#include "addcomb/bohr.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"

#include <doctest.h>

#include <numeric>

using namespace addcomb;

namespace {

BohrSpec spec_of(std::int64_t n, std::vector<std::int64_t> freqs, const Rational& eps) {
    return BohrSpec{ResidueSet(CyclicGroup(n), freqs), Eps::from_rational(eps)};
}

} // namespace

TEST_CASE("bohr set examples") {
    // frequency 0 never constrains
    CHECK(bohr_set(spec_of(12, {0}, Rational(1, 10))) == ResidueSet::full(CyclicGroup(12)));
    // K = {1}, eps = 1/4, N = 10
    CHECK(bohr_set(spec_of(10, {1}, Rational(1, 4))).members() ==
          std::vector<std::int64_t>{0, 1, 2, 8, 9});
    // two frequencies intersect the single-frequency sets
    const ResidueSet b13 = bohr_set(spec_of(10, {1, 3}, Rational(1, 4)));
    const ResidueSet b1 = bohr_set(spec_of(10, {1}, Rational(1, 4)));
    const ResidueSet b3 = bohr_set(spec_of(10, {3}, Rational(1, 4)));
    CHECK(b13.members() == std::vector<std::int64_t>{0});
    for (std::int64_t x = 0; x < 10; ++x)
        CHECK(b13.contains(x) == (b1.contains(x) && b3.contains(x)));
    // empty frequency set: vacuous condition
    CHECK(bohr_set(spec_of(7, {}, Rational(1, 3))) == ResidueSet::full(CyclicGroup(7)));

    CHECK_THROWS_AS(bohr_set(spec_of(7, {1}, Rational(1))), input_error);
}

TEST_CASE("bohr sets contain zero, are symmetric, and are monotone") {
    SplitMix64 rng(51);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(60));
        const ResidueSet K = random_set(CyclicGroup(n), Rational(1, 4), rng);
        const Rational eps(1 + rng.next_below(8), 10);
        const ResidueSet B = bohr_set({K, Eps::from_rational(eps)});
        CHECK(B.contains(0));
        CHECK(B.negated() == B);

        // fewer frequencies, larger set
        ResidueSet K2 = K;
        K2.insert(static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(n))));
        CHECK(bohr_set({K2, Eps::from_rational(eps)}).is_subset_of(B));

        // smaller radius, smaller set
        CHECK(bohr_set({K, Eps::from_rational(Rational(eps / 2))}).is_subset_of(B));
    }
}

TEST_CASE("bourgain size bound") {
    BourgainCheck c = bourgain_size_check(spec_of(10, {1}, Rational(1, 4)));
    CHECK(c.pass);
    CHECK(c.size == 5);
    CHECK(c.bound == doctest::Approx(1.25));
    CHECK(c.exact_comparison);

    CHECK(bourgain_size_check(spec_of(10, {0}, Rational(1, 2))).pass);

    SplitMix64 rng(52);
    for (int i = 0; i < 50; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(100));
        const ResidueSet K = random_set(CyclicGroup(n), Rational(1, 4), rng);
        const std::int64_t q = 2 + static_cast<std::int64_t>(rng.next_below(30));
        const std::int64_t p = 1 + static_cast<std::int64_t>(rng.next_below(static_cast<std::uint64_t>(q - 1)));
        CHECK(bourgain_size_check({K, Eps::from_rational(Rational(p, q))}).pass);
    }
}

TEST_CASE("difference set 2A - 2A") {
    DifferenceCounts single = two_a_minus_two_a(make_set("N=9,list:0"));
    CHECK(single.set.members() == std::vector<std::int64_t>{0});
    CHECK(single.counts[0] == 1);
    CHECK(single.spectral_ok);

    DifferenceCounts full = two_a_minus_two_a(ResidueSet::full(CyclicGroup(5)));
    CHECK(full.set == ResidueSet::full(CyclicGroup(5)));
    for (std::int64_t x = 0; x < 5; ++x) CHECK(full.counts[static_cast<std::size_t>(x)] == 125);

    DifferenceCounts pair = two_a_minus_two_a(make_set("N=10,list:0,1"));
    CHECK(pair.set.members() == std::vector<std::int64_t>{0, 1, 2, 8, 9});
    const std::int64_t expect[10] = {6, 4, 1, 0, 0, 0, 0, 0, 1, 4};
    for (std::int64_t x = 0; x < 10; ++x) CHECK(pair.counts[static_cast<std::size_t>(x)] == expect[x]);
    CHECK(pair.spectral_ok);

    SplitMix64 rng(53);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(60));
        DifferenceCounts d = two_a_minus_two_a(random_set(CyclicGroup(n), Rational(1, 2), rng));
        CHECK(d.spectral_ok); // spectral path certifies against enumeration
    }
}

TEST_CASE("bohr containment in 2A - 2A") {
    // A = {0,1} in Z_5: R* = {1,2,3,4}, B1 = {0}
    ContainmentCheck c = verify_bohr_containment(make_set("N=5,list:0,1"));
    CHECK(c.pass);
    CHECK(c.alpha == doctest::Approx(0.0894427190999916));
    CHECK(c.r_star.members() == std::vector<std::int64_t>{1, 2, 3, 4});
    CHECK(c.bohr1.members() == std::vector<std::int64_t>{0});
    CHECK(c.min_certificate > 0.0);
    CHECK(c.sine_bound_ok);

    // A = Z_N: R* empty, B1 = Z_N = 2A - 2A
    ContainmentCheck triv = verify_bohr_containment(ResidueSet::full(CyclicGroup(7)));
    CHECK(triv.pass);
    CHECK(triv.r_star.empty());
    CHECK(triv.bohr1 == ResidueSet::full(CyclicGroup(7)));

    CHECK_THROWS_AS(verify_bohr_containment(ResidueSet(CyclicGroup(5))), input_error);

    SplitMix64 rng(54);
    for (int i = 0; i < 30; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(100));
        ResidueSet A{CyclicGroup(n)};
        do {
            A = random_set(CyclicGroup(n), Rational(1, 2), rng);
        } while (A.empty());
        CHECK(verify_bohr_containment(A).pass);
    }
}

TEST_CASE("full proposition pipeline") {
    FullPropositionCheck fp = verify_full_proposition(make_set("N=5,list:0,1"));
    CHECK(fp.pass);
    CHECK(fp.decomposition.basis.members() == std::vector<std::int64_t>{0, 1, 2, 3});
    CHECK(fp.b2_in_b1);
    CHECK(fp.b2_in_diffset);

    CHECK_THROWS_AS(verify_full_proposition(make_set("N=9,list:0,1")), input_error);   // gcd(9,6) != 1
    CHECK_THROWS_AS(verify_full_proposition(make_set("N=5,list:0,1,2")), input_error); // delta > 1/2

    SplitMix64 rng(55);
    for (std::int64_t n : {25, 49}) {
        for (int i = 0; i < 6; ++i) {
            ResidueSet A{CyclicGroup(n)};
            do {
                A = random_set(CyclicGroup(n), Rational(1, 3), rng);
            } while (A.empty() || 2 * A.size() > n);
            CHECK(verify_full_proposition(A).pass);
        }
    }
}
