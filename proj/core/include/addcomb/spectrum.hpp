#pragma once

#include "addcomb/fourier.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/scalars.hpp"

#include <cstdint>
#include <vector>

namespace addcomb {

enum class LevelKind {
    AtLeastAlpha,  // R_alpha = { r : |Ahat(r)| >= alpha N }
    DyadicWindow,  // R'_alpha' = { r : alpha' N <= |Ahat(r)| < 2 alpha' N }
    DyadicIndex,   // B_i = { r in R_alpha \ {0} : alpha 2^(i-1) N <= |Ahat(r)| < alpha 2^i N }
};

/// A level set of the spectrum of A, together with the residues whose
/// squared modulus fell within the comparison slack of a window edge
/// (those are surfaced in reports; boundary cases must never flip silently).
struct SpectrumLevelSet {
    LevelKind kind = LevelKind::AtLeastAlpha;
    int index = 0;  // i for DyadicIndex levels
    Alpha alpha;    // the level's own threshold (alpha, or alpha' = alpha 2^(i-1))
    ResidueSet base;
    ResidueSet members;
    std::vector<std::int64_t> boundary;

    SpectrumLevelSet(ResidueSet b, ResidueSet m) : base(std::move(b)), members(std::move(m)) {}
};

/// Membership compares |Ahat(r)|^2 against (alpha N)^2 with absolute slack
/// 1e-9 N^2; (alpha N)^2 itself is computed exactly when alpha is exact.
/// Decisions are made on min(r, N-r) and mirrored, so members == -members
/// structurally. Requires 0 < alpha <= density(A).
SpectrumLevelSet spectrum_threshold(const ResidueSet& A, const Alpha& alpha);

/// The dyadic window alpha' N <= |Ahat(r)| < 2 alpha' N.
SpectrumLevelSet spectrum_window(const ResidueSet& A, const Alpha& alpha_prime);

struct SizeBoundCheck {
    bool pass = false;
    std::int64_t size = 0;
    double bound = 0.0;        // delta / alpha^2
    bool exact_comparison = false;
};

/// |R_alpha| <= delta / alpha^2; exact rational comparison when alpha is exact.
SizeBoundCheck spectrum_size_bound_check(const ResidueSet& A, const Alpha& alpha);

/// Nonempty dyadic levels B_1, B_2, ... partitioning R_alpha \ {0}.
std::vector<SpectrumLevelSet> dyadic_levels(const ResidueSet& A, const Alpha& alpha);

} // namespace addcomb
