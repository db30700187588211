#include "addcomb/bohr.hpp"

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/spectrum.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace addcomb {

ResidueSet bohr_set(const BohrSpec& spec) {
    if (!(spec.eps.value > 0.0 && spec.eps.value < 1.0))
        throw input_error("bohr_set: eps must lie in (0,1)");
    const std::int64_t n = spec.freqs.modulus();
    const auto freqs = spec.freqs.members();
    ResidueSet out(spec.freqs.group());
    for (std::int64_t x = 0; x < n; ++x) {
        bool in = true;
        for (std::int64_t r : freqs) {
            const std::int64_t m = (r * x) % n;
            const std::int64_t dist = std::min(m, n - m);
            if (spec.eps.exact) {
                if (!(Rational(dist, n) < *spec.eps.exact)) { in = false; break; }
            } else {
                if (!(static_cast<double>(dist) < spec.eps.value * static_cast<double>(n))) {
                    in = false;
                    break;
                }
            }
        }
        if (in) out.insert(x);
    }
    return out;
}

BourgainCheck bourgain_size_check(const BohrSpec& spec) {
    const ResidueSet B = bohr_set(spec);
    const std::int64_t n = spec.freqs.modulus();
    const auto K = static_cast<unsigned>(spec.freqs.size());
    BourgainCheck res;
    res.size = B.size();
    res.bound = 0.5 * std::pow(spec.eps.value, static_cast<double>(K)) * static_cast<double>(n);
    if (spec.eps.exact) {
        // 2 |B| >= eps^{|K|} N, all rational
        res.pass = Rational(2 * res.size) >= pow_rational(*spec.eps.exact, K) * n;
        res.exact_comparison = true;
    } else {
        res.pass = static_cast<double>(res.size) >= res.bound;
    }
    return res;
}

DifferenceCounts two_a_minus_two_a(const ResidueSet& A) {
    const std::int64_t n = A.modulus();
    const auto members = A.members();

    // exact path: diff2[y] = #{(a,b) in A^2 : a - b = y}, then one more fold
    std::vector<std::int64_t> diff2(static_cast<std::size_t>(n), 0);
    for (std::int64_t a : members)
        for (std::int64_t b : members) ++diff2[static_cast<std::size_t>(A.group().sub(a, b))];
    std::vector<std::int64_t> exact(static_cast<std::size_t>(n), 0);
    for (std::int64_t y = 0; y < n; ++y) {
        if (diff2[static_cast<std::size_t>(y)] == 0) continue;
        for (std::int64_t x = 0; x < n; ++x)
            exact[static_cast<std::size_t>(x)] +=
                diff2[static_cast<std::size_t>(y)] * diff2[static_cast<std::size_t>(A.group().sub(y, x))];
    }

    // spectral path: counts(x) = (1/N) sum_r |Ahat(r)|^4 e(rx)
    const auto power = power_spectrum(A);
    bool spectral_ok = true;
    for (std::int64_t x = 0; x < n && spectral_ok; ++x) {
        double acc = 0.0;
        for (std::int64_t r = 0; r < n; ++r)
            acc += power[static_cast<std::size_t>(r)] * power[static_cast<std::size_t>(r)] *
                   std::cos(-2.0 * std::numbers::pi * static_cast<double>((r * x) % n) /
                            static_cast<double>(n));
        acc /= static_cast<double>(n);
        const double rounded = std::round(acc);
        if (std::abs(acc - rounded) >= 0.5 - 1e-9 ||
            static_cast<std::int64_t>(rounded) != exact[static_cast<std::size_t>(x)])
            spectral_ok = false; // fall back to the exact path for the result
    }

    DifferenceCounts out{ResidueSet(A.group())};
    out.counts = exact;
    out.spectral_ok = spectral_ok;
    for (std::int64_t x = 0; x < n; ++x)
        if (exact[static_cast<std::size_t>(x)] > 0) out.set.insert(x);
    return out;
}

namespace {

Alpha containment_alpha(const ResidueSet& A) {
    // alpha = delta^(3/2) / (2 sqrt 2): alpha^2 = delta^3 / 8, exactly rational.
    const Rational delta = A.density_exact();
    return Alpha::from_square(Rational(pow_rational(delta, 3) / 8));
}

} // namespace

ContainmentCheck verify_bohr_containment(const ResidueSet& A) {
    if (A.empty()) throw input_error("verify_bohr_containment: A must be nonempty");
    const std::int64_t n = A.modulus();
    const Alpha alpha = containment_alpha(A);
    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    ResidueSet r_star = R.members.without_zero();
    ResidueSet b1 = bohr_set({r_star, Eps::from_rational(Rational(1, 20))});

    DifferenceCounts diff = two_a_minus_two_a(A);
    ContainmentCheck res(std::move(r_star), std::move(b1));
    res.alpha = alpha.value;
    res.contained = true;
    res.min_certificate = std::numeric_limits<double>::infinity();

    const auto power = power_spectrum(A);
    for (std::int64_t x : res.bohr1.members()) {
        if (diff.counts[static_cast<std::size_t>(x)] <= 0) res.contained = false;
        double acc = 0.0;
        for (std::int64_t r = 0; r < n; ++r)
            acc += power[static_cast<std::size_t>(r)] * power[static_cast<std::size_t>(r)] *
                   std::cos(-2.0 * std::numbers::pi * static_cast<double>((r * x) % n) /
                            static_cast<double>(n));
        acc /= static_cast<double>(n);
        res.min_certificate = std::min(res.min_certificate, acc);
    }
    if (res.bohr1.empty()) res.min_certificate = 0.0;

    // proof inequality |1 - e(rx)| = 2|sin(pi r x / N)| <= 2 pi / 20 < 1/2
    res.sine_bound_ok = true;
    for (std::int64_t x : res.bohr1.members())
        for (std::int64_t r : res.r_star.members()) {
            const double s =
                2.0 * std::abs(std::sin(std::numbers::pi * static_cast<double>((r * x) % n) /
                                        static_cast<double>(n)));
            res.max_sine = std::max(res.max_sine, s);
            if (!(s < 0.5)) res.sine_bound_ok = false;
        }

    res.pass = res.contained && res.sine_bound_ok &&
               (res.bohr1.empty() || res.min_certificate > 0.0);
    return res;
}

FullPropositionCheck verify_full_proposition(const ResidueSet& A) {
    const std::int64_t n = A.modulus();
    if (std::gcd(n, std::int64_t{6}) != 1)
        throw input_error("verify_full_proposition: gcd(N,6) must be 1, N = " + std::to_string(n));
    if (A.empty()) throw input_error("verify_full_proposition: A must be nonempty");
    if (2 * A.size() > n) throw input_error("verify_full_proposition: delta must be <= 1/2");

    const Alpha alpha = containment_alpha(A);
    ImprovedDecomposition dec = improved_decomposition(A, alpha, ImprovedVariant::Star);

    // eps2 = 1 / (2^8 log2(1/delta)); exact when log2(1/delta) is integral
    const double log_inv = std::log2(static_cast<double>(n) / static_cast<double>(A.size()));
    Eps eps2 = Eps::from_double(1.0 / (256.0 * log_inv));
    for (std::int64_t t = 1, shifted = A.size() * 2; shifted <= n; ++t, shifted *= 2) {
        if (shifted == n) {
            eps2 = Eps::from_rational(Rational(1, 256 * t));
            break;
        }
    }

    ContainmentCheck base = verify_bohr_containment(A);
    ResidueSet b2 = bohr_set({dec.basis, eps2});

    FullPropositionCheck res(std::move(dec), base.bohr1, std::move(b2));
    res.b2_in_b1 = res.bohr2.is_subset_of(res.bohr1);
    DifferenceCounts diff = two_a_minus_two_a(A);
    res.b2_in_diffset = res.bohr2.is_subset_of(diff.set);
    res.lambda_star_size_bound = std::pow(2.0, 33) / A.density() * log_inv;
    res.pass = res.b2_in_b1 && res.b2_in_diffset && res.decomposition.covered &&
               res.decomposition.length_ok && base.pass;
    return res;
}

} // namespace addcomb
