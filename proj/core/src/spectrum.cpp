#include "addcomb/spectrum.hpp"

#include "addcomb/errors.hpp"

#include <cmath>

namespace addcomb {

namespace {

double slack(std::int64_t n) {
    return 1e-9 * static_cast<double>(n) * static_cast<double>(n);
}

void validate_alpha(const ResidueSet& A, const Alpha& alpha) {
    const Rational delta = A.density_exact();
    if (alpha.exact()) {
        if (!(*alpha.square > 0) || *alpha.square > delta * delta)
            throw input_error("alpha must satisfy 0 < alpha <= density(A)");
    } else {
        if (!(alpha.value > 0.0) || alpha.value > A.density() + 1e-15)
            throw input_error("alpha must satisfy 0 < alpha <= density(A)");
    }
}

// (alpha N)^2 as a double, computed from the exact rational when available.
double threshold_sq(const Alpha& alpha, std::int64_t n) {
    if (alpha.exact()) return to_double(Rational(*alpha.square * n * n));
    return alpha.value * alpha.value * static_cast<double>(n) * static_cast<double>(n);
}

} // namespace

SpectrumLevelSet spectrum_threshold(const ResidueSet& A, const Alpha& alpha) {
    validate_alpha(A, alpha);
    const std::int64_t n = A.modulus();
    const auto power = power_spectrum(A);
    const double lo = threshold_sq(alpha, n);
    const double tau = slack(n);

    SpectrumLevelSet out(A, ResidueSet(A.group()));
    out.kind = LevelKind::AtLeastAlpha;
    out.alpha = alpha;
    for (std::int64_t r = 0; r <= n / 2; ++r) {
        const double sq = power[static_cast<std::size_t>(r)];
        if (sq >= lo - tau) {
            out.members.insert(r);
            out.members.insert(A.group().neg(r));
        }
        if (std::abs(sq - lo) <= tau) {
            out.boundary.push_back(r);
            if (A.group().neg(r) != r) out.boundary.push_back(A.group().neg(r));
        }
    }
    return out;
}

SpectrumLevelSet spectrum_window(const ResidueSet& A, const Alpha& alpha_prime) {
    validate_alpha(A, alpha_prime);
    const std::int64_t n = A.modulus();
    const auto power = power_spectrum(A);
    const double lo = threshold_sq(alpha_prime, n);
    const double hi = 4.0 * lo;
    const double tau = slack(n);

    SpectrumLevelSet out(A, ResidueSet(A.group()));
    out.kind = LevelKind::DyadicWindow;
    out.alpha = alpha_prime;
    for (std::int64_t r = 0; r <= n / 2; ++r) {
        const double sq = power[static_cast<std::size_t>(r)];
        if (sq >= lo - tau && sq < hi - tau) {
            out.members.insert(r);
            out.members.insert(A.group().neg(r));
        }
        if (std::abs(sq - lo) <= tau || std::abs(sq - hi) <= tau) {
            out.boundary.push_back(r);
            if (A.group().neg(r) != r) out.boundary.push_back(A.group().neg(r));
        }
    }
    return out;
}

SizeBoundCheck spectrum_size_bound_check(const ResidueSet& A, const Alpha& alpha) {
    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    SizeBoundCheck res;
    res.size = R.members.size();
    const Rational delta = A.density_exact();
    if (alpha.exact()) {
        // |R| <= delta / alpha^2  <=>  |R| * alpha^2 <= delta, all rational.
        res.pass = Rational(res.size) * *alpha.square <= delta;
        res.bound = to_double(Rational(delta / *alpha.square));
        res.exact_comparison = true;
    } else {
        res.bound = A.density() / (alpha.value * alpha.value);
        res.pass = static_cast<double>(res.size) <= res.bound;
    }
    return res;
}

std::vector<SpectrumLevelSet> dyadic_levels(const ResidueSet& A, const Alpha& alpha) {
    validate_alpha(A, alpha);
    const std::int64_t n = A.modulus();
    const auto power = power_spectrum(A);
    const double lo1 = threshold_sq(alpha, n);
    const double tau = slack(n);

    // Window edges at (alpha 2^(i-1) N)^2 = lo1 * 4^(i-1) tile [lo1 - tau, inf)
    // under the shared slack convention, so each member of R_alpha \ {0}
    // lands in exactly one level.
    std::vector<SpectrumLevelSet> levels;
    auto level_of = [&](double sq) {
        int i = 1;
        double hi = 4.0 * lo1;
        while (sq >= hi - tau) {
            ++i;
            hi *= 4.0;
        }
        return i;
    };
    auto ensure = [&](int i) -> SpectrumLevelSet& {
        while (static_cast<int>(levels.size()) < i) {
            SpectrumLevelSet lvl(A, ResidueSet(A.group()));
            lvl.kind = LevelKind::DyadicIndex;
            lvl.index = static_cast<int>(levels.size()) + 1;
            if (alpha.exact())
                lvl.alpha = Alpha::from_square(Rational(*alpha.square * pow_count(4, static_cast<unsigned>(lvl.index - 1))));
            else
                lvl.alpha = Alpha::from_double(alpha.value * std::ldexp(1.0, lvl.index - 1));
            levels.push_back(std::move(lvl));
        }
        return levels[static_cast<std::size_t>(i - 1)];
    };

    for (std::int64_t r = 1; r <= n / 2; ++r) {
        const double sq = power[static_cast<std::size_t>(r)];
        if (sq < lo1 - tau) continue; // not in R_alpha
        SpectrumLevelSet& lvl = ensure(level_of(sq));
        lvl.members.insert(r);
        lvl.members.insert(A.group().neg(r));
        const double lo_i = lo1 * std::pow(4.0, lvl.index - 1);
        if (std::abs(sq - lo_i) <= tau || std::abs(sq - 4.0 * lo_i) <= tau) {
            lvl.boundary.push_back(r);
            if (A.group().neg(r) != r) lvl.boundary.push_back(A.group().neg(r));
        }
    }

    std::vector<SpectrumLevelSet> nonempty;
    for (auto& lvl : levels)
        if (!lvl.members.empty()) nonempty.push_back(std::move(lvl));
    return nonempty;
}

} // namespace addcomb
