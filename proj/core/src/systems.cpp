#include "addcomb/systems.hpp"

#include "addcomb/errors.hpp"
#include "addcomb/spectrum.hpp"

#include <cmath>
#include <limits>

namespace addcomb {

EquationSystem build_matrix(int k, int d) {
    if (k < 1) throw input_error("build_matrix: k must be >= 1");
    if (d < 0) throw input_error("build_matrix: d must be >= 0");
    const std::int64_t cols = (std::int64_t{1} << (d + 1)) * k;
    if (cols > (std::int64_t{1} << 20))
        throw budget_error("build_matrix: 2^(d+1) k = " + std::to_string(cols) + " exceeds 2^20");
    EquationSystem M;
    M.k = k;
    M.d = d;
    M.rows = d + 1;
    M.cols = cols;
    M.entries.assign(static_cast<std::size_t>(M.rows * M.cols), 0);
    const std::int64_t half = cols / 2;
    for (std::int64_t j = 1; j <= cols; ++j) {
        const std::int8_t sign = j <= half ? 1 : -1;
        M.entries[static_cast<std::size_t>(j - 1)] = sign;
        for (int t = 1; t <= d; ++t)
            if ((j - 1) >> (t - 1) & 1)
                M.entries[static_cast<std::size_t>(t * cols + (j - 1))] = sign;
    }
    return M;
}

namespace {

void enumerate_solutions(const EquationSystem& M, const std::vector<std::int64_t>& members,
                         const CyclicGroup& g, std::int64_t col, std::vector<std::int64_t>& row_sums,
                         BigCount& count, Deadline& deadline) {
    if (col == M.cols) {
        if (deadline.expired()) throw budget_error("count_solutions: time budget exceeded");
        for (std::int64_t t = 0; t < M.rows; ++t)
            if (row_sums[static_cast<std::size_t>(t)] != 0) return;
        ++count;
        return;
    }
    for (std::int64_t b : members) {
        for (std::int64_t t = 0; t < M.rows; ++t) {
            const std::int8_t s = M.at(t, col);
            if (s == 1)
                row_sums[static_cast<std::size_t>(t)] = g.add(row_sums[static_cast<std::size_t>(t)], b);
            else if (s == -1)
                row_sums[static_cast<std::size_t>(t)] = g.sub(row_sums[static_cast<std::size_t>(t)], b);
        }
        enumerate_solutions(M, members, g, col + 1, row_sums, count, deadline);
        for (std::int64_t t = 0; t < M.rows; ++t) {
            const std::int8_t s = M.at(t, col);
            if (s == 1)
                row_sums[static_cast<std::size_t>(t)] = g.sub(row_sums[static_cast<std::size_t>(t)], b);
            else if (s == -1)
                row_sums[static_cast<std::size_t>(t)] = g.add(row_sums[static_cast<std::size_t>(t)], b);
        }
    }
}

BigCount count_enumerate(const ResidueSet& B, int k, int d, const Budget& budget) {
    const EquationSystem M = build_matrix(k, d);
    const double tuples = std::pow(static_cast<double>(B.size()), static_cast<double>(M.cols));
    if (tuples > budget.max_tuples)
        throw budget_error("count_solutions(Enumerate): |B|^(2^(d+1)k) ~ " + std::to_string(tuples) +
                           " exceeds budget " + std::to_string(budget.max_tuples));
    BigCount count = 0;
    std::vector<std::int64_t> row_sums(static_cast<std::size_t>(M.rows), 0);
    Deadline deadline(budget.max_seconds);
    enumerate_solutions(M, B.members(), B.group(), 0, row_sums, count, deadline);
    return count;
}

// Exact path. Group the 2^(d+1)k variables by their column charge vector
// c_omega = (1, omega_1, ..., omega_d): each omega occurs k times per half.
// A half-block with pattern omega contributes +/- s * c_omega to the row
// sums, where s is a k-fold sum of B drawn with multiplicity n_k(s). The
// count is the mass at 0 of the convolution of all 2^(d+1) block
// distributions over Z_N^(d+1).
BigCount count_exact(const ResidueSet& B, int k, int d, const Budget& budget) {
    const std::int64_t n = B.modulus();
    const int dims = d + 1;
    double states = 1.0;
    for (int t = 0; t < dims; ++t) states *= static_cast<double>(n);
    const double ops = states * static_cast<double>(n) * std::pow(2.0, d + 1);
    if (ops > budget.max_tuples)
        throw budget_error("count_solutions(Exact): ~" + std::to_string(ops) +
                           " lattice transitions exceed budget " + std::to_string(budget.max_tuples));

    const auto nk = sum_distribution(B, k);
    const auto size = static_cast<std::size_t>(states);

    // mixed-radix strides for Z_N^dims, coordinate t has stride N^t
    std::vector<std::int64_t> stride(static_cast<std::size_t>(dims));
    std::int64_t acc = 1;
    for (int t = 0; t < dims; ++t) {
        stride[static_cast<std::size_t>(t)] = acc;
        acc *= n;
    }

    std::vector<BigCount> dist(size, BigCount(0));
    dist[0] = 1;
    std::vector<BigCount> next(size);
    std::vector<std::int64_t> coord(static_cast<std::size_t>(dims));
    for (std::int64_t om = 0; om < (std::int64_t{1} << d); ++om) {
        for (int sign = 0; sign < 2; ++sign) {
            std::fill(next.begin(), next.end(), BigCount(0));
            for (std::size_t st = 0; st < size; ++st) {
                if (dist[st] == 0) continue;
                std::size_t tmp = st;
                for (int t = 0; t < dims; ++t) {
                    coord[static_cast<std::size_t>(t)] = static_cast<std::int64_t>(tmp) % n;
                    tmp /= static_cast<std::size_t>(n);
                }
                for (std::int64_t s = 0; s < n; ++s) {
                    if (nk[static_cast<std::size_t>(s)] == 0) continue;
                    std::size_t dest = 0;
                    for (int t = 0; t < dims; ++t) {
                        const bool active = t == 0 || (om >> (t - 1) & 1);
                        std::int64_t c = coord[static_cast<std::size_t>(t)];
                        if (active) c = sign == 0 ? B.group().add(c, s) : B.group().sub(c, s);
                        dest += static_cast<std::size_t>(c * stride[static_cast<std::size_t>(t)]);
                    }
                    next[dest] += dist[st] * nk[static_cast<std::size_t>(s)];
                }
            }
            dist.swap(next);
        }
    }
    return dist[0];
}

// Kahan-compensated accumulator.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// sum over x, h in Z_N^d of prod_omega g(x + omega . h) for real g >= 0,
// factored as sum_{h'} (sum_x P(x,h'))^2; identical value, one power of N
// cheaper, and manifestly nonnegative.
double real_cube_sum(const std::vector<double>& g, std::int64_t n, int d) {
    if (d == 0) {
        KahanSum t;
        for (double v : g) t.add(v);
        return t.s;
    }
    std::vector<std::int64_t> h(static_cast<std::size_t>(d - 1), 0);
    KahanSum total;
    for (;;) {
        KahanSum inner;
        for (std::int64_t x = 0; x < n; ++x) {
            double p = 1.0;
            for (std::int64_t om = 0; om < (std::int64_t{1} << (d - 1)); ++om) {
                std::int64_t y = x;
                for (int t = 0; t < d - 1; ++t)
                    if (om >> t & 1) y += h[static_cast<std::size_t>(t)];
                p *= g[static_cast<std::size_t>(y % n)];
            }
            inner.add(p);
        }
        total.add(inner.s * inner.s);
        int t = 0;
        for (; t < d - 1; ++t) {
            if (++h[static_cast<std::size_t>(t)] < n) break;
            h[static_cast<std::size_t>(t)] = 0;
        }
        if (t == d - 1) break;
    }
    return total.s;
}

BigCount count_fast(const ResidueSet& B, int k, int d, const Budget& budget) {
    const std::int64_t n = B.modulus();
    const double evals = std::pow(static_cast<double>(n), d + 1) * std::pow(2.0, d);
    if (evals > budget.max_tuples)
        throw budget_error("count_solutions(Fast): N^(d+1) 2^d = " + std::to_string(evals) +
                           " exceeds budget " + std::to_string(budget.max_tuples));
    auto power = power_spectrum(B);
    std::vector<double> g(power.size());
    for (std::size_t i = 0; i < power.size(); ++i) g[i] = std::pow(power[i], k);
    double val = real_cube_sum(g, n, d);
    for (int t = 0; t <= d; ++t) val /= static_cast<double>(n);
    if (!(val < 0x1p52))
        throw precision_error("count_solutions(Fast): value too large to certify by rounding");
    const double rounded = std::round(val);
    if (std::abs(val - rounded) >= 0.5 - 1e-12)
        throw precision_error("count_solutions(Fast): rounding residual >= 0.5");
    return BigCount(static_cast<std::int64_t>(rounded));
}

} // namespace

BigCount count_solutions(const ResidueSet& B, int k, int d, SolveMode mode, const Budget& budget) {
    if (k < 1) throw input_error("count_solutions: k must be >= 1");
    if (d < 0) throw input_error("count_solutions: d must be >= 0");
    if (B.empty()) return 0;
    switch (mode) {
    case SolveMode::Enumerate: return count_enumerate(B, k, d, budget);
    case SolveMode::Exact: return count_exact(B, k, d, budget);
    case SolveMode::Fast: return count_fast(B, k, d, budget);
    }
    throw input_error("count_solutions: unknown mode");
}

GowersNormValue gowers_norm(const ComplexSignal& f, int d, const Budget& budget) {
    if (d < 1) throw input_error("gowers_norm: d must be >= 1");
    const std::int64_t n = f.group.modulus();
    const double evals = std::pow(static_cast<double>(n), d + 1) * std::pow(2.0, d);
    if (evals > budget.max_tuples)
        throw budget_error("gowers_norm: N^(d+1) 2^d = " + std::to_string(evals) +
                           " exceeds budget " + std::to_string(budget.max_tuples));

    // sum_{x,h} prod_omega C^|omega| f(x + omega . h)
    //   = sum_{h'} | sum_x prod_{omega'} C^|omega'| f(x + omega' . h') |^2
    // (h = (h_1, h'); the conjugation pattern turns the h_1 sum into a square)
    std::vector<std::int64_t> h(static_cast<std::size_t>(d - 1), 0);
    KahanSum total;
    for (;;) {
        Complex inner = 0.0;
        KahanSum in_re, in_im;
        for (std::int64_t x = 0; x < n; ++x) {
            Complex p = 1.0;
            for (std::int64_t om = 0; om < (std::int64_t{1} << (d - 1)); ++om) {
                std::int64_t y = x;
                int bits = 0;
                for (int t = 0; t < d - 1; ++t)
                    if (om >> t & 1) {
                        y += h[static_cast<std::size_t>(t)];
                        ++bits;
                    }
                const Complex v = f.values[static_cast<std::size_t>(y % n)];
                p *= (bits % 2) ? std::conj(v) : v;
            }
            in_re.add(p.real());
            in_im.add(p.imag());
        }
        inner = Complex(in_re.s, in_im.s);
        total.add(std::norm(inner));
        int t = 0;
        for (; t < d - 1; ++t) {
            if (++h[static_cast<std::size_t>(t)] < n) break;
            h[static_cast<std::size_t>(t)] = 0;
        }
        if (t == d - 1) break;
    }
    double inner_avg = total.s;
    for (int t = 0; t <= d; ++t) inner_avg /= static_cast<double>(n);
    if (inner_avg < -1e-9)
        throw precision_error("gowers_norm: inner sum negative beyond tolerance: " +
                              std::to_string(inner_avg));
    if (inner_avg < 0.0) inner_avg = 0.0;
    GowersNormValue out;
    out.d = d;
    out.value = std::pow(inner_avg, 1.0 / std::ldexp(1.0, d));
    return out;
}

MonotonicityCheck gowers_monotonicity_check(const ComplexSignal& f, int d_max, const Budget& budget) {
    if (d_max < 2) throw input_error("gowers_monotonicity_check: d_max must be >= 2");
    MonotonicityCheck res;
    res.tolerance = 1e-9;
    for (int d = 1; d <= d_max; ++d) res.norms.push_back(gowers_norm(f, d, budget).value);
    for (std::size_t i = 0; i + 1 < res.norms.size(); ++i)
        res.max_violation = std::max(res.max_violation, res.norms[i] - res.norms[i + 1]);
    res.ok = res.max_violation <= res.tolerance;
    return res;
}

EnergyReport verify_matrix_theorem(const ResidueSet& A, const Alpha& alpha, int k, int d,
                                   SolveMode mode, const Budget& budget) {
    if (k < 1) throw input_error("verify_matrix_theorem: k must be >= 1");
    if (d < 0) throw input_error("verify_matrix_theorem: d must be >= 0");
    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    ResidueSet B = R.members.without_zero();
    BigCount s = count_solutions(B, k, d, mode, budget);
    const std::int64_t m = B.size();
    const auto uk = static_cast<unsigned>(k);
    const auto pw = static_cast<unsigned>(1u << d);

    EnergyReport rep;
    rep.modulus = A.modulus();
    rep.k = k;
    rep.d = d;
    rep.set_size = m;
    rep.count = s;
    rep.odd_k = (k % 2) != 0;
    rep.delta = A.density();
    rep.alpha = alpha.value;
    rep.check = "matrix_theorem_bound";
    rep.boundary = R.boundary;
    if (alpha.exact()) {
        const Rational delta = A.density_exact();
        Rational base = delta * pow_rational(*alpha.square, uk) * Rational(pow_count(m, 2 * uk)) /
                        (Rational(pow_count(2, 4 * uk)) * pow_rational(delta, 2 * uk));
        Rational b = pow_rational(base, pw);
        rep.bound_exact = b;
        rep.bound = to_double(b);
        rep.exact_comparison = true;
        rep.pass = Rational(s) >= b;
        rep.ratio = b == 0 ? std::numeric_limits<double>::infinity() : to_double(Rational(Rational(s) / b));
    } else {
        const double base = A.density() * std::pow(alpha.value, 2 * k) *
                            std::pow(static_cast<double>(m), 2 * k) /
                            (std::pow(2.0, 4 * k) * std::pow(A.density(), 2 * k));
        rep.bound = std::pow(base, static_cast<double>(pw));
        const double c = s.convert_to<double>();
        rep.pass = c >= rep.bound;
        rep.ratio = rep.bound == 0.0 ? std::numeric_limits<double>::infinity() : c / rep.bound;
    }
    return rep;
}

} // namespace addcomb
