#include "addcomb/energy.hpp"

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/spectrum.hpp"

#include <cmath>

namespace addcomb {

std::vector<BigCount> sum_distribution(const ResidueSet& B, int k) {
    if (k < 1) throw input_error("sum_distribution: k must be >= 1");
    const std::int64_t n = B.modulus();
    const auto members = B.members();
    std::vector<BigCount> dist(static_cast<std::size_t>(n), BigCount(0));
    for (std::int64_t b : members) dist[static_cast<std::size_t>(b)] += 1;
    for (int step = 1; step < k; ++step) {
        std::vector<BigCount> next(static_cast<std::size_t>(n), BigCount(0));
        for (std::int64_t x = 0; x < n; ++x) {
            if (dist[static_cast<std::size_t>(x)] == 0) continue;
            for (std::int64_t b : members)
                next[static_cast<std::size_t>(B.group().add(x, b))] += dist[static_cast<std::size_t>(x)];
        }
        dist = std::move(next);
    }
    return dist;
}

BigCount energy_tk(const ResidueSet& B, int k, CountMode mode) {
    if (k < 1) throw input_error("energy_tk: k must be >= 1");
    if (B.empty()) return 0;
    if (mode == CountMode::Certified) {
        const auto dist = sum_distribution(B, k);
        BigCount t = 0;
        for (const BigCount& c : dist) t += c * c;
        return t;
    }
    // spectral path: T_k = (1/N) sum_x |Bhat(x)|^(2k)
    const auto power = power_spectrum(B);
    double acc = 0.0;
    for (double p : power) acc += std::pow(p, k);
    acc /= static_cast<double>(B.modulus());
    if (!(acc < 0x1p52))
        throw precision_error("energy_tk: spectral value too large to certify by rounding");
    const double rounded = std::round(acc);
    if (std::abs(acc - rounded) >= 0.5 - 1e-12)
        throw precision_error("energy_tk: rounding residual >= 0.5");
    return BigCount(static_cast<std::int64_t>(rounded));
}

namespace {

void enumerate_sums(const std::vector<std::int64_t>& members, const CyclicGroup& g, int depth,
                    std::int64_t partial, std::vector<std::int64_t>& counts, Deadline& deadline) {
    if (depth == 0) {
        if (deadline.expired()) throw budget_error("energy_tk_bruteforce: time budget exceeded");
        ++counts[static_cast<std::size_t>(partial)];
        return;
    }
    for (std::int64_t b : members)
        enumerate_sums(members, g, depth - 1, g.add(partial, b), counts, deadline);
}

} // namespace

BigCount energy_tk_bruteforce(const ResidueSet& B, int k, const Budget& budget) {
    if (k < 1) throw input_error("energy_tk_bruteforce: k must be >= 1");
    if (B.empty()) return 0;
    const double tuples = std::pow(static_cast<double>(B.size()), 2.0 * k);
    if (tuples > budget.max_tuples)
        throw budget_error("energy_tk_bruteforce: |B|^(2k) = " + std::to_string(tuples) +
                           " exceeds budget " + std::to_string(budget.max_tuples));
    std::vector<std::int64_t> counts(static_cast<std::size_t>(B.modulus()), 0);
    Deadline deadline(budget.max_seconds);
    enumerate_sums(B.members(), B.group(), k, 0, counts, deadline);
    BigCount t = 0;
    for (std::int64_t c : counts) t += BigCount(c) * c;
    return t;
}

double tk_lower_bound(double delta, double alpha, int k, std::int64_t m) {
    if (!(alpha > 0 && alpha <= delta && delta <= 1))
        throw input_error("tk_lower_bound: need 0 < alpha <= delta <= 1");
    if (k < 2) throw input_error("tk_lower_bound: k must be >= 2");
    return delta * std::pow(alpha, 2 * k) * std::pow(static_cast<double>(m), 2 * k) /
           (std::pow(2.0, 4 * k) * std::pow(delta, 2 * k));
}

Rational tk_lower_bound_exact(const Rational& delta, const Rational& alpha_sq, int k, std::int64_t m) {
    if (!(alpha_sq > 0 && alpha_sq <= delta * delta && delta <= 1))
        throw input_error("tk_lower_bound_exact: need 0 < alpha <= delta <= 1");
    if (k < 2) throw input_error("tk_lower_bound_exact: k must be >= 2");
    const auto uk = static_cast<unsigned>(k);
    Rational num = delta * pow_rational(alpha_sq, uk) * Rational(pow_count(m, 2 * uk));
    Rational den = Rational(pow_count(2, 4 * uk)) * pow_rational(delta, 2 * uk);
    return num / den;
}

namespace {

EnergyReport make_report(const ResidueSet& A, const Alpha& alpha, int k, int d, const BigCount& count,
                         std::int64_t set_size, double bound, std::optional<Rational> bound_exact,
                         const char* check) {
    EnergyReport rep;
    rep.modulus = A.modulus();
    rep.k = k;
    rep.d = d;
    rep.set_size = set_size;
    rep.count = count;
    rep.bound = bound;
    rep.bound_exact = bound_exact;
    rep.odd_k = (k % 2) != 0;
    rep.delta = A.density();
    rep.alpha = alpha.value;
    rep.check = check;
    if (bound_exact) {
        rep.exact_comparison = true;
        rep.pass = Rational(count) >= *bound_exact;
        rep.ratio = *bound_exact == 0 ? std::numeric_limits<double>::infinity()
                                      : to_double(Rational(Rational(count) / *bound_exact));
    } else {
        const double c = count.convert_to<double>();
        rep.pass = c >= bound;
        rep.ratio = bound == 0.0 ? std::numeric_limits<double>::infinity() : c / bound;
    }
    return rep;
}

} // namespace

EnergyReport verify_main_theorem(const ResidueSet& A, const Alpha& alpha, int k, CountMode mode) {
    if (k < 2) throw input_error("verify_main_theorem: k must be >= 2");
    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    ResidueSet B = R.members.without_zero();
    BigCount t = energy_tk(B, k, mode);
    const std::int64_t m = B.size();
    std::optional<Rational> bound_exact;
    double bound;
    if (alpha.exact()) {
        bound_exact = tk_lower_bound_exact(A.density_exact(), *alpha.square, k, m);
        bound = to_double(*bound_exact);
    } else {
        bound = tk_lower_bound(A.density(), alpha.value, k, m);
    }
    EnergyReport rep = make_report(A, alpha, k, 0, t, m, bound, bound_exact, "tk_lower_bound");
    rep.boundary = R.boundary;
    return rep;
}

EnergyReport verify_level_lemma(const ResidueSet& A, const Alpha& alpha_prime, int k, CountMode mode) {
    SpectrumLevelSet W = spectrum_window(A, alpha_prime);
    return verify_level_lemma(A, alpha_prime, k, W.members.without_zero(), mode);
}

EnergyReport verify_level_lemma(const ResidueSet& A, const Alpha& alpha_prime, int k,
                                const ResidueSet& subset, CountMode mode) {
    if (k < 2) throw input_error("verify_level_lemma: k must be >= 2");
    if (k != 2 && k % 2 != 0)
        throw input_error("verify_level_lemma: the general bound is proved for even k");
    SpectrumLevelSet W = spectrum_window(A, alpha_prime);
    const ResidueSet& Bp = subset;
    if (Bp.contains(0) || !Bp.is_subset_of(W.members))
        throw input_error("verify_level_lemma: B' must lie in the window minus {0}");
    BigCount t = energy_tk(Bp, k, mode);
    const std::int64_t m = Bp.size();
    const auto uk = static_cast<unsigned>(k);

    std::optional<Rational> bound_exact;
    double bound;
    if (alpha_prime.exact()) {
        const Rational delta = A.density_exact();
        const Rational asq = *alpha_prime.square;
        Rational b;
        if (k == 2) {
            // alpha'^4 |B'|^4 / (16 delta^3)   (equals the general form at k=2)
            b = pow_rational(asq, 2) * Rational(pow_count(m, 4)) / (16 * pow_rational(delta, 3));
        } else {
            b = delta * pow_rational(asq, uk) * Rational(pow_count(m, 2 * uk)) /
                pow_rational(2 * delta, 2 * uk);
        }
        bound_exact = b;
        bound = to_double(b);
    } else {
        const double delta = A.density();
        const double a = alpha_prime.value;
        if (k == 2)
            bound = std::pow(a, 4) * std::pow(static_cast<double>(m), 4) / (16.0 * std::pow(delta, 3));
        else
            bound = delta * std::pow(a, 2 * k) * std::pow(static_cast<double>(m), 2 * k) /
                    std::pow(2.0 * delta, 2 * k);
    }
    EnergyReport rep = make_report(A, alpha_prime, k, 0, t, m, bound, bound_exact,
                                   k == 2 ? "level_lemma_t2" : "level_lemma_even_k");
    rep.boundary = W.boundary;
    return rep;
}

} // namespace addcomb
