#pragma once

#include "addcomb/big_count.hpp"
#include "addcomb/budget.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/scalars.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace addcomb {

/// Fast: spectral power sum (1/N) sum_x |Bhat(x)|^(2k), rounded; throws
/// precision_error when the rounding residual reaches 0.5 so callers can
/// retry the exact path. Certified: exact integer convolution of the k-fold
/// sum distribution; mandatory in acceptance runs.
enum class CountMode { Fast, Certified };

/// n_k(x) = #{ (r_1..r_k) in B^k : r_1 + ... + r_k = x }, exact.
std::vector<BigCount> sum_distribution(const ResidueSet& B, int k);

/// T_k(B) = #{ 2k-tuples in B^(2k) with equal k-fold sums }.
BigCount energy_tk(const ResidueSet& B, int k, CountMode mode = CountMode::Certified);

/// Independent ground-truth oracle: literal enumeration of the k-tuple sum
/// multiset. Refuses when |B|^(2k) exceeds the budget.
BigCount energy_tk_bruteforce(const ResidueSet& B, int k, const Budget& budget = {});

/// delta alpha^(2k) m^(2k) / (2^(4k) delta^(2k)); requires 0 < alpha <= delta <= 1, k >= 2.
double tk_lower_bound(double delta, double alpha, int k, std::int64_t m);
Rational tk_lower_bound_exact(const Rational& delta, const Rational& alpha_sq, int k, std::int64_t m);

/// One verified inequality instance: an exact count against a theorem bound.
struct EnergyReport {
    std::int64_t modulus = 0;
    int k = 0;
    int d = 0;                    // 0 for plain energy; >0 for the system count S_{k,d}
    std::int64_t set_size = 0;    // |B|
    BigCount count = 0;           // T_k(B), or S_{k,d}(B) when d > 0
    double bound = 0.0;
    std::optional<Rational> bound_exact;
    double ratio = 0.0;           // count / bound (inf when bound == 0)
    bool pass = false;
    bool exact_comparison = false;
    bool odd_k = false;           // flagged: the supporting lemma is proved for even k
    double delta = 0.0;
    double alpha = 0.0;
    std::string check;            // which inequality this verdict asserts
    std::vector<std::int64_t> boundary; // spectrum residues within comparison slack
};

/// T_k(R_alpha \ {0}) >= delta alpha^(2k) |B|^(2k) / (2^(4k) delta^(2k)).
/// Exact rational comparison whenever alpha is exact.
EnergyReport verify_main_theorem(const ResidueSet& A, const Alpha& alpha, int k,
                                 CountMode mode = CountMode::Certified);

/// Level-set bound on B' = R'_alpha' \ {0}:
///   k == 2: T_2(B') >= alpha'^4 |B'|^4 / (16 delta^3)
///   k even: T_k(B') >= delta alpha'^(2k) |B'|^(2k) / (2 delta)^(2k)
/// Odd k is an input error (the general form is proved for even k only).
EnergyReport verify_level_lemma(const ResidueSet& A, const Alpha& alpha_prime, int k,
                                CountMode mode = CountMode::Certified);

/// Same bound for an arbitrary subset of the window (must satisfy
/// B' subset of R'_alpha' \ {0}).
EnergyReport verify_level_lemma(const ResidueSet& A, const Alpha& alpha_prime, int k,
                                const ResidueSet& subset, CountMode mode = CountMode::Certified);

} // namespace addcomb
