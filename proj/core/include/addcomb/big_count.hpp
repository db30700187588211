#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace addcomb {

/// Exact tuple counts. T_k and S_{k,d} grow like |B|^(2k), past any fixed
/// word size, so every count an oracle produces is kept exact.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational scalars (densities, thresholds, theorem bounds).
using Rational = boost::multiprecision::cpp_rational;

inline BigCount pow_count(const BigCount& base, unsigned exp) {
    BigCount r = 1, b = base;
    for (; exp; exp >>= 1) {
        if (exp & 1u) r *= b;
        b *= b;
    }
    return r;
}

inline Rational pow_rational(const Rational& base, unsigned exp) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return Rational(pow_count(numerator(base), exp), pow_count(denominator(base), exp));
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline std::string decimal_string(const BigCount& n) { return n.str(); }

} // namespace addcomb
