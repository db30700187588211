#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

using namespace addcomb;

namespace {

// Test-local definitional oracle, independent of the library's table/chirp
// paths: fhat(r) = sum_n f(n) exp(+2 pi i n r / N), term by term.
std::vector<Complex> dft_oracle(const ComplexSignal& f, int sign = +1) {
    const std::int64_t n = f.group.modulus();
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (std::int64_t r = 0; r < n; ++r) {
        Complex acc = 0.0;
        for (std::int64_t x = 0; x < n; ++x)
            acc += f.values[static_cast<std::size_t>(x)] *
                   std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(x) *
                                       static_cast<double>(r) / static_cast<double>(n));
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

ComplexSignal random_signal(std::int64_t n, SplitMix64& rng, bool real_only = false) {
    ComplexSignal f{CyclicGroup(n)};
    for (auto& v : f.values)
        v = Complex(2.0 * rng.next_double() - 1.0,
                    real_only ? 0.0 : 2.0 * rng.next_double() - 1.0);
    return f;
}

} // namespace

TEST_CASE("dft of structured signals") {
    // all-ones: orthogonality
    ComplexSignal ones{CyclicGroup(4)};
    for (auto& v : ones.values) v = 1.0;
    SpectrumTable F = dft(ones);
    CHECK(std::abs(F.at(0) - Complex(4.0)) < 1e-12);
    for (std::int64_t r = 1; r < 4; ++r) CHECK(std::abs(F.at(r)) < 1e-12);

    // indicator of {0}: flat spectrum
    SpectrumTable G = dft(indicator(make_set("N=6,list:0")));
    for (std::int64_t r = 0; r < 6; ++r) CHECK(std::abs(G.at(r) - Complex(1.0)) < 1e-12);

    // indicator of {0,2} in Z_4: |fhat| = (2,0,2,0)
    SpectrumTable H = dft(indicator(make_set("N=4,list:0,2")));
    const double expect[4] = {2, 0, 2, 0};
    for (std::int64_t r = 0; r < 4; ++r) CHECK(std::abs(H.at(r)) == doctest::Approx(expect[r]).epsilon(1e-12));
}

TEST_CASE("dft agrees with the definitional oracle") {
    SplitMix64 rng(1);
    for (std::int64_t n : {2, 5, 12, 16, 31, 64}) {
        ComplexSignal f = random_signal(n, rng);
        SpectrumTable F = dft(f);
        auto expect = dft_oracle(f);
        for (std::size_t r = 0; r < expect.size(); ++r)
            CHECK(std::abs(F.coefficients[r] - expect[r]) < 1e-9 * static_cast<double>(n));
    }
}

TEST_CASE("chirp-z path matches the direct sum for awkward lengths") {
    SplitMix64 rng(2);
    for (std::int64_t n : {5, 97, 256, 1000}) {
        ComplexSignal f = random_signal(n, rng);
        SpectrumTable direct = dft_direct(f);
        SpectrumTable fast = dft_bluestein(f);
        double scale = 0.0, err = 0.0;
        for (std::size_t r = 0; r < direct.coefficients.size(); ++r) {
            scale = std::max(scale, std::abs(direct.coefficients[r]));
            err = std::max(err, std::abs(direct.coefficients[r] - fast.coefficients[r]));
        }
        CHECK(err <= 1e-9 * std::max(scale, 1.0));
    }
}

TEST_CASE("coefficient moduli ignore the character sign convention on indicators") {
    SplitMix64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(40));
        ComplexSignal f = indicator(random_set(CyclicGroup(n), Rational(1, 2), rng));
        auto plus = dft_oracle(f, +1);
        auto minus = dft_oracle(f, -1);
        for (std::size_t r = 0; r < plus.size(); ++r)
            CHECK(std::abs(plus[r]) == doctest::Approx(std::abs(minus[r])).epsilon(1e-9));
    }
}

TEST_CASE("inversion") {
    // single coefficient N at r=0 -> constant one
    SpectrumTable F{CyclicGroup(5), std::vector<Complex>(5, 0.0)};
    F.coefficients[0] = 5.0;
    ComplexSignal f = inverse_dft(F);
    for (const auto& v : f.values) CHECK(std::abs(v - Complex(1.0)) < 1e-12);

    // roundtrip on an indicator
    ComplexSignal g = indicator(make_set("N=4,list:0,2"));
    ComplexSignal back = inverse_dft(dft(g));
    for (std::size_t x = 0; x < g.values.size(); ++x)
        CHECK(std::abs(back.values[x] - g.values[x]) < 1e-9);

    // 100 random roundtrips at N=32
    SplitMix64 rng(4);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
        ComplexSignal h = random_signal(32, rng);
        ComplexSignal r = inverse_dft(dft(h));
        for (std::size_t x = 0; x < h.values.size(); ++x)
            worst = std::max(worst, std::abs(r.values[x] - h.values[x]));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("convolution values and identity") {
    // delta at 0 is the identity
    SplitMix64 rng(5);
    ComplexSignal f = random_signal(7, rng);
    ComplexSignal delta = indicator(make_set("N=7,list:0"));
    ComplexSignal conv = convolution(f, delta);
    for (std::size_t x = 0; x < f.values.size(); ++x)
        CHECK(std::abs(conv.values[x] - f.values[x]) < 1e-12);

    // f = g = indicator {0,1} in Z_5: values (2,1,0,0,1)
    ComplexSignal ind01 = indicator(make_set("N=5,list:0,1"));
    ComplexSignal c = convolution(ind01, ind01);
    const double expect[5] = {2, 1, 0, 0, 1};
    for (std::int64_t x = 0; x < 5; ++x)
        CHECK(c.values[static_cast<std::size_t>(x)].real() == doctest::Approx(expect[x]).epsilon(1e-12));

    CHECK_THROWS_AS(convolution(f, ind01), input_error);

    // transform identity, complex f x real g
    for (int i = 0; i < 20; ++i) {
        ComplexSignal a = random_signal(16, rng);
        ComplexSignal b = random_signal(16, rng, /*real_only=*/true);
        CHECK(convolution_transform_identity_check(a, b).ok);
    }
}

TEST_CASE("parseval") {
    // indicator: both sides N * m
    IdentityCheck p = parseval_check(indicator(make_set("N=6,list:1,3,4")));
    CHECK(p.ok);
    CHECK(p.lhs == doctest::Approx(18.0));
    CHECK(p.rhs == doctest::Approx(18.0));

    // zero signal
    ComplexSignal zero{CyclicGroup(8)};
    CHECK(parseval_check(zero).ok);

    SplitMix64 rng(6);
    for (int i = 0; i < 20; ++i) CHECK(parseval_check(random_signal(64, rng)).ok);
}

TEST_CASE("characteristic function identity") {
    // holds for indicators, all u
    CharFunctionCheck c = char_function_identity_check(indicator(make_set("N=4,list:0,2")));
    CHECK(c.is_indicator);
    CHECK(c.identity_holds);

    // u = 0 specialization reproduces Parseval: (1/N) sum |Ahat|^2 = |A|
    const ResidueSet A = make_set("N=12,list:0,3,5,7");
    auto power = power_spectrum(A);
    double sum = 0.0;
    for (double v : power) sum += v;
    CHECK(sum / 12.0 == doctest::Approx(4.0).epsilon(1e-12));

    // constant 1/2 is not an indicator and must violate the identity
    ComplexSignal half{CyclicGroup(4)};
    for (auto& v : half.values) v = 0.5;
    CharFunctionCheck h = char_function_identity_check(half);
    CHECK_FALSE(h.is_indicator);
    CHECK_FALSE(h.identity_holds);
    CHECK(h.max_dev > 0.5); // deviation 1 at u = 0
}

TEST_CASE("cross correlation identity") {
    const ComplexSignal f = indicator(make_set("N=9,list:0,1,5"));
    IdentityCheck same = cross_correlation_identity_check(f, f, 0);
    CHECK(same.ok);
    CHECK(same.lhs == doctest::Approx(3.0));
    CHECK(same.rhs == doctest::Approx(3.0));

    SplitMix64 rng(7);
    for (int i = 0; i < 10; ++i) {
        ComplexSignal a = random_signal(16, rng);
        ComplexSignal b = random_signal(16, rng);
        for (std::int64_t u = 0; u < 16; ++u) CHECK(cross_correlation_identity_check(a, b, u).ok);
    }

    ComplexSignal zero{CyclicGroup(16)};
    ComplexSignal a = random_signal(16, rng);
    IdentityCheck z = cross_correlation_identity_check(a, zero, 3);
    CHECK(z.ok);
    CHECK(z.max_dev == doctest::Approx(0.0));

    CHECK_THROWS_AS(cross_correlation_identity_check(f, a, 0), input_error);
}
