#pragma once

#include <stdexcept>
#include <string>

namespace addcomb {

/// Invalid parameter values (bad density, alpha out of range, odd k where
/// an even-k bound was requested, gcd(N,6) != 1, ...). Maps to CLI exit 2.
class input_error : public std::invalid_argument {
public:
    explicit input_error(const std::string& what) : std::invalid_argument(what) {}
};

/// An enumeration or evaluation would exceed the configured budget.
/// Maps to CLI exit 2 (refusal, not failure).
class budget_error : public std::runtime_error {
public:
    explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A floating-point path could not certify its result (rounding residual
/// >= 0.5, inner sum negative beyond tolerance). Callers retry an exact path.
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace addcomb
