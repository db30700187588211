#pragma once

#include "addcomb/errors.hpp"

#include <cstdint>
#include <numeric>
#include <string>

namespace addcomb {

/// Z_N. All residues are canonicalized to [0, N); arithmetic keeps the
/// nonnegative representative so set equality is plain bit equality.
class CyclicGroup {
public:
    explicit CyclicGroup(std::int64_t modulus) : n_(modulus) {
        if (modulus < 1) throw input_error("modulus must be >= 1, got " + std::to_string(modulus));
    }

    std::int64_t modulus() const { return n_; }

    std::int64_t reduce(std::int64_t x) const {
        std::int64_t r = x % n_;
        return r < 0 ? r + n_ : r;
    }

    std::int64_t add(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) + reduce(b)); }
    std::int64_t sub(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) - reduce(b)); }
    std::int64_t neg(std::int64_t a) const { return reduce(-reduce(a)); }
    std::int64_t mul(std::int64_t a, std::int64_t b) const { return reduce(reduce(a) * reduce(b)); }

    /// Inverse of a modulo N; input error when gcd(a, N) != 1.
    std::int64_t inverse(std::int64_t a) const {
        a = reduce(a);
        std::int64_t g = std::gcd(a, n_);
        if (g != 1)
            throw input_error("no inverse of " + std::to_string(a) + " modulo " + std::to_string(n_));
        // extended Euclid
        std::int64_t r0 = n_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::int64_t r2 = r0 - q * r1;
            std::int64_t t2 = t0 - q * t1;
            r0 = r1; r1 = r2;
            t0 = t1; t1 = t2;
        }
        return reduce(t0);
    }

    bool operator==(const CyclicGroup& o) const { return n_ == o.n_; }
    bool operator!=(const CyclicGroup& o) const { return n_ != o.n_; }

private:
    std::int64_t n_;
};

} // namespace addcomb
