#pragma once

#include "addcomb/big_count.hpp"
#include "addcomb/budget.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/residue_set.hpp"
#include "addcomb/scalars.hpp"

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace addcomb {

/// A certificate r = sum_i eps_i * base_i (mod N), eps_i in {-1,0,1}.
/// Chang-style certificates use each base element at most once; the improved
/// decomposition produces tuples, so base entries may repeat.
struct SpanRepresentation {
    std::int64_t target = 0;
    std::vector<std::int64_t> base;
    std::vector<std::int8_t> coeff; // aligned with base

    /// M = #{ i : eps_i != 0 }.
    std::int64_t length() const {
        std::int64_t m = 0;
        for (std::int8_t c : coeff)
            if (c != 0) ++m;
        return m;
    }

    /// Re-evaluates the congruence.
    bool verify(const CyclicGroup& g) const;
};

/// Span(E) = { sum eps_i e_i : eps_i in {-1,0,1} }, exact, via incremental
/// set folding (each element folds the current span with +/- itself once).
ResidueSet span(const ResidueSet& E);

struct DissociatedVerdict {
    bool dissociated = false;
    // On failure: a nonzero witness sum_i coeff_i * elems_i = 0 (mod N).
    std::vector<std::int64_t> witness_elems;
    std::vector<std::int8_t> witness_coeff;
};

/// A set is dissociated iff no element lies in the span of its ascending
/// predecessors (take the largest-index nonzero coefficient of any relation);
/// the fold detects that incrementally and extracts a witness.
DissociatedVerdict is_dissociated(const ResidueSet& D);

/// Greedy over ascending residues; the result is dissociated, maximal in S,
/// and spans S.
ResidueSet maximal_dissociated_subset(const ResidueSet& S);

struct ChangDecomposition {
    ResidueSet spectrum;  // R_alpha
    ResidueSet basis;     // maximal dissociated D
    std::vector<SpanRepresentation> reps; // one per r in R_alpha, ascending
    bool covered = false;       // every rep present and verified
    double chang_bound = 0.0;   // 2 (delta/alpha)^2 log2(1/delta)
    double derived_bound_c1 = 0.0; // 2^8 C^2 (delta/alpha)^2 log2(1/delta) at C=1
    std::vector<std::int64_t> boundary;

    ChangDecomposition(ResidueSet r, ResidueSet b) : spectrum(std::move(r)), basis(std::move(b)) {}
};

/// D = maximal dissociated subset of R_alpha; every r in R_alpha gets a
/// verified certificate over D. Size bounds are reported, never asserted
/// (their constants are asymptotic).
ChangDecomposition chang_decomposition(const ResidueSet& A, const Alpha& alpha);

struct LambdaFamilyWitness {
    bool member = false;
    // On non-membership: sum_i coeff_i * elems_i = 0 (mod N), |coeff_i| <= s,
    // sum |coeff_i| <= 2k, not all zero.
    std::vector<std::int64_t> elems;
    std::vector<std::int64_t> coeff;
};

/// Membership in the family Lambda(k,s): no relation sum lambda_i s_i = 0
/// with |s_i| <= s and sum |s_i| <= 2k except all-zero. Exact, via a
/// (mass, residue) reachability program over the elements.
LambdaFamilyWitness is_lambda_family(const ResidueSet& L, int k, int s);

enum class ImprovedVariant { Star, Tilde };

struct ImprovedDecomposition {
    int k = 0;             // 2 ceil(log2(1/delta))
    int s = 0;             // 3, or max(3, floor(log2 log2 (1/delta))) for Tilde
    bool s_clamped = false;
    ResidueSet spectrum;   // R_alpha
    ResidueSet lambda;     // greedy maximal Lambda(k,s) subset of R_alpha \ {0}
    ResidueSet basis;      // Lambda^* = {0} u U_j j^-1 Lambda, or Lambda~ = U_j j^-1 Lambda
    std::vector<SpanRepresentation> reps; // one per r in R_alpha, ascending
    bool covered = false;
    std::int64_t max_length = 0;   // max M over reps
    double length_limit = 0.0;     // 8 log2(1/delta)
    bool length_ok = false;        // every M within the limit (exact comparison)
    double star_size_bound = 0.0;  // reported, not asserted
    double tilde_size_bound = 0.0;
    std::vector<std::int64_t> boundary;

    ImprovedDecomposition(ResidueSet r, ResidueSet l, ResidueSet b)
        : spectrum(std::move(r)), lambda(std::move(l)), basis(std::move(b)) {}
};

/// The constructive pipeline behind the improved decomposition:
/// k = 2 ceil(log2(1/delta)); Lambda = ascending-greedy maximal Lambda(k,s)
/// subset of R_alpha \ {0}; every r in R_alpha satisfies r j = sum lambda_i s_i
/// for some j in [s] (iterative deepening on sum |s_i|, ties by smallest
/// (j, s-vector)), expanded into a certificate over j^-1 Lambda of length
/// M <= 8 log2(1/delta). Requires gcd(N,6) = 1 and delta <= 1/2.
ImprovedDecomposition improved_decomposition(const ResidueSet& A, const Alpha& alpha,
                                             ImprovedVariant variant);

/// (1/N) sum_x |sum_{n in D} e(nx)|^(2k) == T_k(D), exact after rounding.
/// Requires dissociated D.
struct RudinIdentityCheck {
    bool ok = false;
    BigCount spectral = 0; // rounded power mean
    BigCount exact = 0;    // T_k(D)
};
RudinIdentityCheck rudin_identity_check(const ResidueSet& D, int k);

/// Smallest C making Rudin's inequality tight on this instance:
/// C = (LHS / (sum |a_n|^2)^(p/2))^(1/p) / sqrt(p). Reported, never asserted.
double empirical_rudin_constant(const ResidueSet& D, int p, std::span<const std::complex<double>> a);

struct TkUpperBoundCheck {
    bool pass = false;
    BigCount t_k = 0;
    double log2_count = 0.0;
    double log2_bound = 0.0;
    double bound = 0.0; // +inf when it overflows double
};

/// T_k(Lambda) <= 2^(9k) k^k |Lambda|^k * 2^(2sk (log2 k)^2 / log2(k^(2s) |Lambda|^(s-2))).
/// Preconditions (each named on violation): Lambda in Lambda(k,s), s >= 3,
/// |Lambda| >= k.
TkUpperBoundCheck tk_upper_bound_check(const ResidueSet& L, int k, int s);

} // namespace addcomb
