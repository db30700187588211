#include "addcomb/fourier.hpp"

#include "addcomb/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>

namespace addcomb {

namespace {

constexpr std::int64_t kFastCutoff = 4096;

// table[t] = exp(+2 pi i t / N); fhat(r) = sum_n f(n) * table[(n*r) mod N].
std::vector<Complex> root_table(std::int64_t n) {
    std::vector<Complex> t(static_cast<std::size_t>(n));
    for (std::int64_t j = 0; j < n; ++j)
        t[static_cast<std::size_t>(j)] =
            std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    return t;
}

// In-place radix-2 FFT of power-of-two length; sign = +1 matches the
// forward convention above, sign = -1 inverts (caller divides by length).
void fft_pow2(std::vector<Complex>& a, int sign) {
    const std::size_t n = a.size();
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
        const Complex wl = std::polar(1.0, ang);
        for (std::size_t i = 0; i < n; i += len) {
            Complex w = 1.0;
            for (std::size_t j = 0; j < len / 2; ++j) {
                Complex u = a[i + j];
                Complex v = a[i + j + len / 2] * w;
                a[i + j] = u + v;
                a[i + j + len / 2] = u - v;
                w *= wl;
            }
        }
    }
}

} // namespace

ComplexSignal indicator(const ResidueSet& A) {
    ComplexSignal f(A.group());
    for (std::int64_t r : A.members()) f.values[static_cast<std::size_t>(r)] = 1.0;
    return f;
}

SpectrumTable dft_direct(const ComplexSignal& f) {
    const std::int64_t n = f.group.modulus();
    const auto roots = root_table(n);
    SpectrumTable F{f.group, std::vector<Complex>(static_cast<std::size_t>(n))};
    for (std::int64_t r = 0; r < n; ++r) {
        Complex acc = 0.0;
        for (std::int64_t x = 0; x < n; ++x)
            acc += f.values[static_cast<std::size_t>(x)] * roots[static_cast<std::size_t>((x * r) % n)];
        F.coefficients[static_cast<std::size_t>(r)] = acc;
    }
    return F;
}

SpectrumTable dft_bluestein(const ComplexSignal& f) {
    const std::int64_t n = f.group.modulus();
    // chirp c(t) = exp(+i pi t^2 / N); w^{nr} = c(n) c(r) conj(c(r-n)).
    std::vector<Complex> chirp(static_cast<std::size_t>(n));
    for (std::int64_t t = 0; t < n; ++t) {
        std::int64_t sq = (t * t) % (2 * n); // angle mod 2*pi
        chirp[static_cast<std::size_t>(t)] =
            std::polar(1.0, std::numbers::pi * static_cast<double>(sq) / static_cast<double>(n));
    }
    const std::size_t len = std::bit_ceil(static_cast<std::size_t>(2 * n - 1));
    std::vector<Complex> a(len, 0.0), b(len, 0.0);
    for (std::int64_t t = 0; t < n; ++t) {
        a[static_cast<std::size_t>(t)] = f.values[static_cast<std::size_t>(t)] * chirp[static_cast<std::size_t>(t)];
        b[static_cast<std::size_t>(t)] = std::conj(chirp[static_cast<std::size_t>(t)]);
        if (t > 0) b[len - static_cast<std::size_t>(t)] = std::conj(chirp[static_cast<std::size_t>(t)]);
    }
    fft_pow2(a, +1);
    fft_pow2(b, +1);
    for (std::size_t i = 0; i < len; ++i) a[i] *= b[i];
    fft_pow2(a, -1);
    SpectrumTable F{f.group, std::vector<Complex>(static_cast<std::size_t>(n))};
    for (std::int64_t r = 0; r < n; ++r)
        F.coefficients[static_cast<std::size_t>(r)] =
            chirp[static_cast<std::size_t>(r)] * a[static_cast<std::size_t>(r)] / static_cast<double>(len);
    return F;
}

SpectrumTable dft(const ComplexSignal& f) {
    return f.group.modulus() <= kFastCutoff ? dft_direct(f) : dft_bluestein(f);
}

ComplexSignal inverse_dft(const SpectrumTable& F) {
    const std::int64_t n = F.group.modulus();
    // f(x) = (1/N) conj( forward(conj F)(x) )
    ComplexSignal conj_in(F.group);
    for (std::int64_t r = 0; r < n; ++r)
        conj_in.values[static_cast<std::size_t>(r)] = std::conj(F.coefficients[static_cast<std::size_t>(r)]);
    SpectrumTable G = dft(conj_in);
    ComplexSignal f(F.group);
    for (std::int64_t x = 0; x < n; ++x)
        f.values[static_cast<std::size_t>(x)] =
            std::conj(G.coefficients[static_cast<std::size_t>(x)]) / static_cast<double>(n);
    return f;
}

std::vector<double> power_spectrum(const ResidueSet& A) {
    SpectrumTable F = dft(indicator(A));
    std::vector<double> p(F.coefficients.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::norm(F.coefficients[i]);
    return p;
}

ComplexSignal convolution(const ComplexSignal& f, const ComplexSignal& g) {
    if (f.group != g.group) throw input_error("convolution: mismatched moduli");
    const std::int64_t n = f.group.modulus();
    ComplexSignal out(f.group);
    for (std::int64_t x = 0; x < n; ++x) {
        Complex acc = 0.0;
        for (std::int64_t y = 0; y < n; ++y)
            acc += f.values[static_cast<std::size_t>(y)] *
                   g.values[static_cast<std::size_t>(f.group.sub(y, x))];
        out.values[static_cast<std::size_t>(x)] = acc;
    }
    return out;
}

IdentityCheck parseval_check(const ComplexSignal& f) {
    SpectrumTable F = dft(f);
    double lhs = 0.0, rhs = 0.0;
    for (const Complex& c : F.coefficients) lhs += std::norm(c);
    for (const Complex& v : f.values) rhs += std::norm(v);
    rhs *= static_cast<double>(f.group.modulus());
    IdentityCheck res;
    res.lhs = lhs;
    res.rhs = rhs;
    res.max_dev = std::abs(lhs - rhs);
    res.tolerance = 1e-9 * std::max(std::abs(lhs), std::abs(rhs));
    res.ok = res.max_dev <= res.tolerance;
    return res;
}

CharFunctionCheck char_function_identity_check(const ComplexSignal& f) {
    const std::int64_t n = f.group.modulus();
    SpectrumTable F = dft(f);
    CharFunctionCheck res;
    res.is_indicator = true;
    for (const Complex& v : f.values) {
        if (!(std::abs(v) <= 1e-12 || std::abs(v - 1.0) <= 1e-12)) {
            res.is_indicator = false;
            break;
        }
    }
    double max_dev = 0.0;
    for (std::int64_t u = 0; u < n; ++u) {
        Complex acc = 0.0;
        for (std::int64_t r = 0; r < n; ++r)
            acc += F.coefficients[static_cast<std::size_t>(r)] *
                   std::conj(F.coefficients[static_cast<std::size_t>(f.group.sub(r, u))]);
        acc /= static_cast<double>(n);
        max_dev = std::max(max_dev, std::abs(F.coefficients[static_cast<std::size_t>(u)] - acc));
    }
    res.max_dev = max_dev;
    res.tolerance = 1e-6 * static_cast<double>(n);
    res.identity_holds = max_dev <= res.tolerance;
    return res;
}

IdentityCheck cross_correlation_identity_check(const ComplexSignal& f, const ComplexSignal& g,
                                               std::int64_t u) {
    if (f.group != g.group) throw input_error("cross-correlation: mismatched moduli");
    const std::int64_t n = f.group.modulus();
    u = f.group.reduce(u);
    SpectrumTable F = dft(f), G = dft(g);
    Complex lhs = 0.0;
    for (std::int64_t r = 0; r < n; ++r)
        lhs += F.coefficients[static_cast<std::size_t>(r)] *
               std::conj(G.coefficients[static_cast<std::size_t>(f.group.sub(r, u))]);
    lhs /= static_cast<double>(n);
    const auto roots = root_table(n); // e(-xu) = exp(+2 pi i xu / N)
    Complex rhs = 0.0;
    for (std::int64_t x = 0; x < n; ++x)
        rhs += f.values[static_cast<std::size_t>(x)] * std::conj(g.values[static_cast<std::size_t>(x)]) *
               roots[static_cast<std::size_t>((x * u) % n)];
    double max_f = 0.0, max_g = 0.0;
    for (const Complex& v : f.values) max_f = std::max(max_f, std::abs(v));
    for (const Complex& v : g.values) max_g = std::max(max_g, std::abs(v));
    IdentityCheck res;
    res.lhs = lhs.real();
    res.rhs = rhs.real();
    res.max_dev = std::abs(lhs - rhs);
    res.tolerance = 1e-6 * static_cast<double>(n) * std::max(max_f * max_g, 1e-300);
    res.ok = res.max_dev <= res.tolerance;
    return res;
}

IdentityCheck convolution_transform_identity_check(const ComplexSignal& f, const ComplexSignal& g) {
    SpectrumTable lhs = dft(convolution(f, g));
    SpectrumTable F = dft(f), G = dft(g);
    double max_dev = 0.0, scale = 0.0;
    for (std::size_t r = 0; r < lhs.coefficients.size(); ++r) {
        Complex want = F.coefficients[r] * std::conj(G.coefficients[r]);
        max_dev = std::max(max_dev, std::abs(lhs.coefficients[r] - want));
        scale = std::max(scale, std::abs(want));
    }
    IdentityCheck res;
    res.max_dev = max_dev;
    res.tolerance = 1e-9 * std::max(scale, 1.0);
    res.ok = max_dev <= res.tolerance;
    return res;
}

} // namespace addcomb
