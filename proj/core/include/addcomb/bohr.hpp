#pragma once

#include "addcomb/dissociated.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/scalars.hpp"

#include <cstdint>
#include <vector>

namespace addcomb {

/// B(K, eps) = { x : || r x / N || < eps for all r in K }, ||.|| the distance
/// to the nearest integer. Strict inequality, exactly as printed; membership
/// is decided with exact rational arithmetic whenever eps is rational.
struct BohrSpec {
    ResidueSet freqs;
    Eps eps;
};

/// B(empty, eps) = Z_N (vacuous universal quantifier).
ResidueSet bohr_set(const BohrSpec& spec);

struct BourgainCheck {
    bool pass = false;
    std::int64_t size = 0;
    double bound = 0.0; // (1/2) eps^{|K|} N
    bool exact_comparison = false;
};

/// |B(K,eps)| >= (1/2) eps^{|K|} N.
BourgainCheck bourgain_size_check(const BohrSpec& spec);

struct DifferenceCounts {
    ResidueSet set;                    // 2A - 2A
    std::vector<std::int64_t> counts;  // counts[x] = #{(a1,a2,a3,a4) : a1+a2-a3-a4 = x}
    bool spectral_ok = false;          // the rounded spectral path agreed with enumeration

    explicit DifferenceCounts(ResidueSet s) : set(std::move(s)) {}
};

/// Counts computed spectrally as (1/N) sum_r |Ahat(r)|^4 e(rx), rounded, and
/// cross-checked against the exact difference-set construction; the exact
/// counts are always returned.
DifferenceCounts two_a_minus_two_a(const ResidueSet& A);

struct ContainmentCheck {
    bool pass = false;
    double alpha = 0.0;      // delta^(3/2) / (2 sqrt 2)
    ResidueSet r_star;       // R_alpha \ {0}
    ResidueSet bohr1;        // B(R_alpha^*, 1/20)
    bool contained = false;  // B1 subset of 2A - 2A
    double min_certificate = 0.0;  // min over x in B1 of (1/N) sum_r |Ahat|^4 e(rx)
    bool sine_bound_ok = false;    // |1 - e(rx)| < 1/2 for all x in B1, r in R*
    double max_sine = 0.0;

    ContainmentCheck(ResidueSet rs, ResidueSet b1) : r_star(std::move(rs)), bohr1(std::move(b1)) {}
};

/// With alpha = delta^(3/2)/(2 sqrt 2), B(R_alpha \ {0}, 1/20) lies inside
/// 2A - 2A; a proven consequence, so failure indicates a bug.
ContainmentCheck verify_bohr_containment(const ResidueSet& A);

struct FullPropositionCheck {
    bool pass = false;
    ImprovedDecomposition decomposition;
    ResidueSet bohr1;  // B(R_alpha^*, 1/20)
    ResidueSet bohr2;  // B(Lambda^*, 1/(2^8 log2(1/delta)))
    bool b2_in_b1 = false;
    bool b2_in_diffset = false;
    double lambda_star_size_bound = 0.0; // 2^33 delta^-1 log2(1/delta), reported only

    FullPropositionCheck(ImprovedDecomposition d, ResidueSet b1, ResidueSet b2)
        : decomposition(std::move(d)), bohr1(std::move(b1)), bohr2(std::move(b2)) {}
};

/// Full pipeline: improved decomposition -> Lambda^* -> B2 = B(Lambda^*,
/// 1/(2^8 log2(1/delta))) with B2 inside B1 inside 2A - 2A. Requires
/// gcd(N,6) = 1 and delta <= 1/2. The |K| bound is reported, not asserted.
FullPropositionCheck verify_full_proposition(const ResidueSet& A);

} // namespace addcomb
