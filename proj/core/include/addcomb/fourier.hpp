#pragma once

#include "addcomb/cyclic_group.hpp"
#include "addcomb/residue_set.hpp"

#include <complex>
#include <cstdint>
#include <vector>

namespace addcomb {

using Complex = std::complex<double>;

/// f : Z_N -> C.
struct ComplexSignal {
    CyclicGroup group{1};
    std::vector<Complex> values;

    ComplexSignal() = default;
    explicit ComplexSignal(CyclicGroup g) : group(g), values(static_cast<std::size_t>(g.modulus())) {}
    ComplexSignal(CyclicGroup g, std::vector<Complex> v) : group(g), values(std::move(v)) {}
};

/// r -> fhat(r), all N coefficients.
struct SpectrumTable {
    CyclicGroup group{1};
    std::vector<Complex> coefficients;

    const Complex& at(std::int64_t r) const {
        return coefficients[static_cast<std::size_t>(group.reduce(r))];
    }
};

/// Indicator function A(x) of a residue set.
ComplexSignal indicator(const ResidueSet& A);

// Character convention, fixed once:  e(x) = exp(-2 pi i x / N),
// fhat(r) = sum_n f(n) e(-n r),  f(x) = (1/N) sum_r fhat(r) e(r x).
// All downstream theorem checks consume only the moduli |fhat(r)|, which do
// not depend on the sign choice (tested).

/// Definitional O(N^2) transform; the reference all fast paths must match.
SpectrumTable dft_direct(const ComplexSignal& f);

/// Chirp-z (Bluestein) transform, any N, via power-of-two FFT. Agrees with
/// dft_direct to 1e-9 relative; used automatically for N > 4096.
SpectrumTable dft_bluestein(const ComplexSignal& f);

/// Dispatching transform: definitional sum up to N = 4096, chirp-z above.
SpectrumTable dft(const ComplexSignal& f);

ComplexSignal inverse_dft(const SpectrumTable& F);

/// |fhat(r)|^2 for an indicator, as a dense table (the workhorse of the
/// spectrum and energy modules).
std::vector<double> power_spectrum(const ResidueSet& A);

/// (f*g)(x) = sum_y f(y) g(y-x).  Note the sign: this is the correlation
/// flavour whose transform is fhat(r) * conj(ghat(r)) for real-valued g.
ComplexSignal convolution(const ComplexSignal& f, const ComplexSignal& g);

struct IdentityCheck {
    bool ok = false;
    double lhs = 0.0;      // headline scalar value of the left side
    double rhs = 0.0;
    double max_dev = 0.0;  // worst absolute deviation over the checked range
    double tolerance = 0.0;
};

/// sum_r |fhat(r)|^2 == N * sum_x |f(x)|^2, relative 1e-9.
IdentityCheck parseval_check(const ComplexSignal& f);

/// fhat(u) == (1/N) sum_r fhat(r) conj(fhat(r-u)) for all u; holds exactly
/// when f is an indicator (|f|^2 == f pointwise) and must be violated
/// somewhere otherwise.
struct CharFunctionCheck {
    bool identity_holds = false;
    bool is_indicator = false;
    double max_dev = 0.0;
    double tolerance = 0.0;
};
CharFunctionCheck char_function_identity_check(const ComplexSignal& f);

/// (1/N) sum_r fhat(r) conj(ghat(r-u)) == sum_x f(x) conj(g(x)) e(-xu).
IdentityCheck cross_correlation_identity_check(const ComplexSignal& f, const ComplexSignal& g,
                                               std::int64_t u);

/// dft(f*g)(r) == fhat(r) * conj(ghat(r)); requires real-valued g.
IdentityCheck convolution_transform_identity_check(const ComplexSignal& f, const ComplexSignal& g);

} // namespace addcomb
