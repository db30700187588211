#pragma once

#include "addcomb/big_count.hpp"
#include "addcomb/errors.hpp"

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

namespace addcomb {

/// Spectrum threshold alpha. Every formula in the suite uses alpha only
/// through even powers, so an exact rational alpha^2 is enough to make all
/// bound comparisons exact — including alpha = delta^(3/2)/(2*sqrt(2)),
/// whose square is the rational delta^3/8.
struct Alpha {
    double value = 0.0;                   // alpha itself (reporting, float paths)
    std::optional<Rational> square;       // exact alpha^2 when known

    static Alpha from_rational(const Rational& a) {
        Alpha x;
        x.value = to_double(a);
        x.square = a * a;
        return x;
    }
    static Alpha from_square(const Rational& a_sq) {
        Alpha x;
        x.value = std::sqrt(to_double(a_sq));
        x.square = a_sq;
        return x;
    }
    static Alpha from_double(double a) {
        Alpha x;
        x.value = a;
        return x;
    }

    bool exact() const { return square.has_value(); }
    double square_value() const { return square ? to_double(*square) : value * value; }
};

/// Bohr radius epsilon in (0,1); exact when parsed from a rational literal,
/// so strict-inequality membership can be decided with integer arithmetic.
struct Eps {
    double value = 0.0;
    std::optional<Rational> exact;

    static Eps from_rational(const Rational& e) {
        Eps x;
        x.value = to_double(e);
        x.exact = e;
        return x;
    }
    static Eps from_double(double e) {
        Eps x;
        x.value = e;
        return x;
    }
};

/// Parses "3", "1/4" or "0.25" into an exact rational.
Rational parse_rational(std::string_view text);

/// Grid entry for alpha: a rational literal, "delta", or "delta/<int>".
struct AlphaExpr {
    bool times_delta = false;
    Rational coeff = 1;
    std::string raw;

    /// Evaluates against the exact density of the instance set.
    Alpha eval(const Rational& delta) const {
        return Alpha::from_rational(times_delta ? Rational(delta * coeff) : coeff);
    }
};

AlphaExpr parse_alpha_expr(std::string_view text);

} // namespace addcomb
