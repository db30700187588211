#include "addcomb/dissociated.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/spectrum.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

using namespace addcomb;

namespace {

// Literal 3^|D| oracle for dissociativity.
bool dissociated_oracle(const ResidueSet& D) {
    const auto elems = D.members();
    const std::size_t n = elems.size();
    std::vector<int> eps(n, -1);
    for (;;) {
        bool all_zero = true;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (eps[i] != 0) all_zero = false;
            sum += eps[i] * elems[i];
        }
        if (!all_zero && D.group().reduce(sum) == 0) return false;
        std::size_t i = 0;
        for (; i < n; ++i) {
            if (++eps[i] <= 1) break;
            eps[i] = -1;
        }
        if (i == n) break;
    }
    return true;
}

} // namespace

TEST_CASE("span examples") {
    CHECK(span(ResidueSet(CyclicGroup(9))).members() == std::vector<std::int64_t>{0});
    CHECK(span(make_set("N=5,list:1")).members() == std::vector<std::int64_t>{0, 1, 4});
    CHECK(span(make_set("N=7,list:1,2")) == ResidueSet::full(CyclicGroup(7)));
}

TEST_CASE("dissociativity verdicts and witnesses") {
    CHECK(is_dissociated(ResidueSet(CyclicGroup(11))).dissociated);
    CHECK(is_dissociated(make_set("N=100,list:1,2,4")).dissociated);
    CHECK(is_dissociated(make_set("N=7,list:1,2")).dissociated);

    // sets containing 0 are never dissociated
    DissociatedVerdict zero = is_dissociated(make_set("N=10,list:0,3"));
    CHECK_FALSE(zero.dissociated);

    // {1,2,3}: the witness must be a genuine nonzero relation
    DissociatedVerdict v = is_dissociated(make_set("N=100,list:1,2,3"));
    REQUIRE_FALSE(v.dissociated);
    std::int64_t sum = 0;
    bool nonzero = false;
    for (std::size_t i = 0; i < v.witness_elems.size(); ++i) {
        sum += v.witness_coeff[i] * v.witness_elems[i];
        if (v.witness_coeff[i] != 0) nonzero = true;
    }
    CHECK(nonzero);
    CHECK(CyclicGroup(100).reduce(sum) == 0);
}

TEST_CASE("span-fold verdict agrees with the literal sign enumeration") {
    SplitMix64 rng(41);
    for (int i = 0; i < 60; ++i) {
        const std::int64_t n = 3 + static_cast<std::int64_t>(rng.next_below(40));
        ResidueSet D = random_set(CyclicGroup(n), Rational(1, 4), rng);
        if (D.size() > 9) continue; // keep the oracle cheap
        CHECK(is_dissociated(D).dissociated == dissociated_oracle(D));
    }
}

TEST_CASE("maximal dissociated subset") {
    CHECK(maximal_dissociated_subset(make_set("N=5,list:0,1,4")).members() ==
          std::vector<std::int64_t>{1});
    CHECK(maximal_dissociated_subset(ResidueSet(CyclicGroup(8))).empty());

    SplitMix64 rng(42);
    for (int i = 0; i < 25; ++i) {
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(61));
        ResidueSet S = random_set(CyclicGroup(n), Rational(1, 2), rng);
        ResidueSet D = maximal_dissociated_subset(S);
        CHECK(D.is_subset_of(S));
        CHECK(is_dissociated(D).dissociated);
        const ResidueSet spanned = span(D);
        for (std::int64_t r : S.members()) CHECK(spanned.contains(r)); // spans S
        for (std::int64_t r : S.members()) {                           // maximality
            if (D.contains(r)) continue;
            ResidueSet Dp = D;
            Dp.insert(r);
            CHECK_FALSE(is_dissociated(Dp).dissociated);
        }
    }
}

TEST_CASE("chang decomposition traces") {
    // A = {0,1} in Z_5, alpha = 0.3: D = {1}; 4 = -1, 0 = empty sum
    ChangDecomposition dec = chang_decomposition(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)));
    CHECK(dec.basis.members() == std::vector<std::int64_t>{1});
    CHECK(dec.covered);
    REQUIRE(dec.reps.size() == 3); // R = {0,1,4}
    CHECK(dec.reps[0].target == 0);
    CHECK(dec.reps[0].length() == 0);
    CHECK(dec.reps[2].target == 4);
    CHECK(dec.reps[2].length() == 1);
    CHECK(dec.reps[2].coeff[0] == -1);

    // A = Z_N at alpha = delta = 1: R = {0}, D empty, empty certificate
    ChangDecomposition triv = chang_decomposition(ResidueSet::full(CyclicGroup(6)), Alpha::from_rational(Rational(1)));
    CHECK(triv.spectrum.members() == std::vector<std::int64_t>{0});
    CHECK(triv.basis.empty());
    CHECK(triv.covered);

    SplitMix64 rng(43);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(61));
        ResidueSet A = random_set(CyclicGroup(n), Rational(1, 2), rng);
        if (A.empty()) continue;
        ChangDecomposition d = chang_decomposition(A, Alpha::from_rational(Rational(A.density_exact() / 2)));
        CHECK(d.covered);
        for (const auto& rep : d.reps) CHECK(rep.verify(A.group()));
        // the basis is exactly the ascending-greedy maximal dissociated subset
        CHECK(d.basis == maximal_dissociated_subset(d.spectrum));
    }
}

TEST_CASE("lambda family membership") {
    // {1,4} in Z_5: 1 + 4 = 0, mass 2 <= 2k
    LambdaFamilyWitness w = is_lambda_family(make_set("N=5,list:1,4"), 2, 3);
    CHECK_FALSE(w.member);
    std::int64_t sum = 0, mass = 0;
    for (std::size_t i = 0; i < w.elems.size(); ++i) {
        sum += w.coeff[i] * w.elems[i];
        mass += std::abs(w.coeff[i]);
        CHECK(std::abs(w.coeff[i]) <= 3);
    }
    CHECK(CyclicGroup(5).reduce(sum) == 0);
    CHECK(mass >= 1);
    CHECK(mass <= 4);

    CHECK(is_lambda_family(ResidueSet(CyclicGroup(7)), 2, 3).member);
    CHECK(is_lambda_family(make_set("N=7,list:1"), 2, 3).member);

    // forced exclusions: 0 in Lambda, or Lambda meeting -Lambda
    CHECK_FALSE(is_lambda_family(make_set("N=7,list:0"), 2, 3).member);
    CHECK_FALSE(is_lambda_family(make_set("N=7,list:3,4"), 2, 3).member);

    // the integer relation 2*1 - 1*2 = 0 excludes {1,2} for every modulus
    CHECK_FALSE(is_lambda_family(make_set("N=101,list:1,2"), 2, 3).member);
    CHECK(is_lambda_family(make_set("N=101,list:2,5"), 2, 3).member);
}

TEST_CASE("improved decomposition, worked instance in Z_5") {
    ImprovedDecomposition dec =
        improved_decomposition(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), ImprovedVariant::Star);
    CHECK(dec.k == 4); // 2 ceil(log2(5/2))
    CHECK(dec.s == 3);
    CHECK(dec.lambda.members() == std::vector<std::int64_t>{1});
    CHECK(dec.basis.members() == std::vector<std::int64_t>{0, 1, 2, 3}); // {0} u {1} u {3} u {2}
    CHECK(dec.covered);
    CHECK(dec.length_ok);
    REQUIRE(dec.reps.size() == 3);
    // r = 1 is in Lambda: single +1
    CHECK(dec.reps[1].target == 1);
    CHECK(dec.reps[1].length() == 1);
    CHECK(dec.reps[1].coeff[0] == 1);
    // r = 4: single -1 on basis element 1
    CHECK(dec.reps[2].target == 4);
    CHECK(dec.reps[2].length() == 1);
    CHECK(dec.reps[2].base[0] == 1);
    CHECK(dec.reps[2].coeff[0] == -1);
}

TEST_CASE("improved decomposition preconditions") {
    CHECK_THROWS_AS(improved_decomposition(make_set("N=9,list:0,1"), Alpha::from_rational(Rational(1, 9)),
                                           ImprovedVariant::Star),
                    input_error); // gcd(9,6) = 3
    CHECK_THROWS_AS(improved_decomposition(make_set("N=5,list:0,1,2"), Alpha::from_rational(Rational(1, 5)),
                                           ImprovedVariant::Star),
                    input_error); // delta > 1/2
    CHECK_THROWS_AS(improved_decomposition(ResidueSet(CyclicGroup(5)), Alpha::from_rational(Rational(1, 5)),
                                           ImprovedVariant::Star),
                    input_error); // empty
}

TEST_CASE("improved decomposition tilde variant clamps s") {
    ImprovedDecomposition dec =
        improved_decomposition(make_set("N=5,list:0,1"), Alpha::from_rational(Rational(3, 10)), ImprovedVariant::Tilde);
    CHECK(dec.s == 3); // floor(log2 log2 (5/2)) = 0, clamped
    CHECK(dec.s_clamped);
    CHECK(dec.covered);
    CHECK_FALSE(dec.basis.contains(0)); // tilde basis has no appended 0
}

TEST_CASE("improved decomposition randomized coverage") {
    SplitMix64 rng(44);
    for (std::int64_t n : {25, 35}) {
        for (int i = 0; i < 8; ++i) {
            ResidueSet A{CyclicGroup(n)};
            do {
                A = random_set(CyclicGroup(n), Rational(2, 5), rng);
            } while (A.empty() || 2 * A.size() > n);
            const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() / 2));
            ImprovedDecomposition dec = improved_decomposition(A, alpha, ImprovedVariant::Star);
            CHECK(dec.covered);
            CHECK(dec.length_ok);
            for (const auto& rep : dec.reps) {
                CHECK(rep.verify(A.group()));
                for (std::int64_t b : rep.base) CHECK(dec.basis.contains(b));
            }
        }
    }
}

TEST_CASE("rudin identity") {
    RudinIdentityCheck r = rudin_identity_check(make_set("N=7,list:1,2"), 2);
    CHECK(r.ok);
    CHECK(r.exact == 6);
    CHECK(r.spectral == 6);

    CHECK(rudin_identity_check(ResidueSet(CyclicGroup(9)), 2).ok); // 0 == 0

    CHECK_THROWS_AS(rudin_identity_check(make_set("N=100,list:1,2,3"), 2), input_error);

    SplitMix64 rng(45);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = 8 + static_cast<std::int64_t>(rng.next_below(57));
        ResidueSet D = maximal_dissociated_subset(random_set(CyclicGroup(n), Rational(1, 2), rng));
        for (int k : {2, 3}) CHECK(rudin_identity_check(D, k).ok);
    }
}

TEST_CASE("empirical rudin constant") {
    const ResidueSet D = make_set("N=7,list:1,2");
    std::vector<std::complex<double>> ones(2, 1.0);
    CHECK(empirical_rudin_constant(D, 4, ones) ==
          doctest::Approx(std::pow(1.5, 0.25) / 2.0).epsilon(1e-12));

    std::vector<std::complex<double>> zeros(2, 0.0);
    CHECK(empirical_rudin_constant(D, 4, zeros) == 0.0);

    CHECK_THROWS_AS(empirical_rudin_constant(D, 3, ones), input_error);
    std::vector<std::complex<double>> wrong_len(1, 1.0);
    CHECK_THROWS_AS(empirical_rudin_constant(D, 4, wrong_len), input_error);
}

TEST_CASE("T_k upper bound on admissible sets") {
    TkUpperBoundCheck chk = tk_upper_bound_check(make_set("N=101,list:2,5"), 2, 3);
    CHECK(chk.pass);
    CHECK(chk.t_k == 6);
    CHECK(chk.log2_bound > chk.log2_count);

    // named precondition failures
    CHECK_THROWS_WITH_AS(tk_upper_bound_check(make_set("N=101,list:2,5"), 2, 2),
                         doctest::Contains("s >= 3"), input_error);
    CHECK_THROWS_WITH_AS(tk_upper_bound_check(make_set("N=101,list:2"), 3, 3),
                         doctest::Contains("|Lambda| >= k"), input_error);
    CHECK_THROWS_WITH_AS(tk_upper_bound_check(make_set("N=101,list:1,2"), 2, 3),
                         doctest::Contains("Lambda(k,s)"), input_error);
}
