#pragma once

#include "addcomb/budget.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/scalars.hpp"

#include <cstdint>
#include <vector>

namespace addcomb {

/// The balanced sign system in 2^(d+1) k variables, (d+1) rows:
/// row 0 is +1 on the first half of the columns and -1 on the second;
/// row t (1 <= t <= d) carries the sign exactly where bit (t-1) of (j-1)
/// is set, + in the first half and - in the second. Every row sums to zero.
struct EquationSystem {
    int k = 0;
    int d = 0;
    std::int64_t rows = 0;
    std::int64_t cols = 0;
    std::vector<std::int8_t> entries; // row-major

    std::int8_t at(std::int64_t row, std::int64_t col) const { // 0-based
        return entries[static_cast<std::size_t>(row * cols + col)];
    }
};

/// Requires k >= 1, d >= 0, 2^(d+1) k <= 2^20.
EquationSystem build_matrix(int k, int d);

/// Enumerate: literal DFS over B^(2^(d+1)k), the independent oracle.
/// Exact: big-integer dynamic program over the (d+1)-dimensional charge
///        lattice fed by the exact k-fold sum distribution (certifying).
/// Fast:  nested spectral power sums of |Bhat|^(2k), rounded with a
///        residual check (< 0.5 or precision_error).
enum class SolveMode { Enumerate, Exact, Fast };

/// S_{k,d}(B): solutions of the system with every variable in B.
/// S_{k,0}(B) == T_k(B) exactly.
BigCount count_solutions(const ResidueSet& B, int k, int d, SolveMode mode = SolveMode::Exact,
                         const Budget& budget = {});

struct GowersNormValue {
    int d = 0;
    double value = 0.0;
};

/// || f ||_{U^d} for d >= 1. The inner average is accumulated with
/// compensated summation; a tiny negative inner value (> -1e-9) clamps to 0
/// before the 2^d-th root, anything more negative is a precision error.
GowersNormValue gowers_norm(const ComplexSignal& f, int d, const Budget& budget = {});

struct MonotonicityCheck {
    bool ok = false;
    std::vector<double> norms;   // U^1 .. U^dmax
    double max_violation = 0.0;  // max over d of norms[d] - norms[d+1]
    double tolerance = 0.0;
};

/// ||f||_{U^d} <= ||f||_{U^(d+1)} + 1e-9 for d = 1 .. d_max-1.
MonotonicityCheck gowers_monotonicity_check(const ComplexSignal& f, int d_max,
                                            const Budget& budget = {});

/// S_{k,d}(R_alpha \ {0}) >= (delta alpha^(2k) |B|^(2k) / (2^(4k) delta^(2k)))^(2^d);
/// d = 0 reproduces verify_main_theorem.
EnergyReport verify_matrix_theorem(const ResidueSet& A, const Alpha& alpha, int k, int d,
                                   SolveMode mode = SolveMode::Exact, const Budget& budget = {});

} // namespace addcomb
