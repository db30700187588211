#include "addcomb/dissociated.hpp"

#include "addcomb/errors.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace addcomb {

bool SpanRepresentation::verify(const CyclicGroup& g) const {
    if (base.size() != coeff.size()) return false;
    std::int64_t acc = 0;
    for (std::size_t i = 0; i < base.size(); ++i)
        acc = g.add(acc, g.mul(coeff[i], base[i]));
    return acc == g.reduce(target);
}

namespace {

// Incremental span with back-pointers: fold elements in the given order,
// each contributing {-e, 0, +e} exactly once. parent[x] records how x was
// first reached, so any member of the span yields a certificate using each
// element at most once.
struct SpanFold {
    explicit SpanFold(const CyclicGroup& g)
        : group(g), reached(static_cast<std::size_t>(g.modulus()), false),
          parent_elem(static_cast<std::size_t>(g.modulus()), -1),
          parent_coeff(static_cast<std::size_t>(g.modulus()), 0),
          parent_prev(static_cast<std::size_t>(g.modulus()), 0) {
        reached[0] = true;
    }

    bool contains(std::int64_t r) const { return reached[static_cast<std::size_t>(group.reduce(r))]; }

    void fold(std::int64_t e) {
        elements.push_back(e);
        const int idx = static_cast<int>(elements.size()) - 1;
        std::vector<std::int64_t> snapshot;
        for (std::int64_t x = 0; x < group.modulus(); ++x)
            if (reached[static_cast<std::size_t>(x)]) snapshot.push_back(x);
        for (std::int64_t x : snapshot) {
            for (std::int8_t c : {std::int8_t{1}, std::int8_t{-1}}) {
                const std::int64_t y = c == 1 ? group.add(x, e) : group.sub(x, e);
                auto yi = static_cast<std::size_t>(y);
                if (!reached[yi]) {
                    reached[yi] = true;
                    parent_elem[yi] = idx;
                    parent_coeff[yi] = c;
                    parent_prev[yi] = x;
                }
            }
        }
    }

    SpanRepresentation extract(std::int64_t target) const {
        SpanRepresentation rep;
        rep.target = group.reduce(target);
        std::int64_t x = rep.target;
        while (x != 0) {
            const auto xi = static_cast<std::size_t>(x);
            rep.base.push_back(elements[static_cast<std::size_t>(parent_elem[xi])]);
            rep.coeff.push_back(parent_coeff[xi]);
            x = parent_prev[xi];
        }
        std::reverse(rep.base.begin(), rep.base.end());
        std::reverse(rep.coeff.begin(), rep.coeff.end());
        return rep;
    }

    ResidueSet as_set() const {
        ResidueSet s(group);
        for (std::int64_t x = 0; x < group.modulus(); ++x)
            if (reached[static_cast<std::size_t>(x)]) s.insert(x);
        return s;
    }

    CyclicGroup group;
    std::vector<std::int64_t> elements;
    std::vector<bool> reached;
    std::vector<int> parent_elem;
    std::vector<std::int8_t> parent_coeff;
    std::vector<std::int64_t> parent_prev;
};

} // namespace

ResidueSet span(const ResidueSet& E) {
    SpanFold fold(E.group());
    for (std::int64_t e : E.members()) fold.fold(e);
    return fold.as_set();
}

DissociatedVerdict is_dissociated(const ResidueSet& D) {
    SpanFold fold(D.group());
    DissociatedVerdict v;
    for (std::int64_t e : D.members()) {
        if (fold.contains(e)) {
            SpanRepresentation rep = fold.extract(e);
            v.dissociated = false;
            v.witness_elems = rep.base;
            v.witness_coeff = rep.coeff;
            v.witness_elems.push_back(e);
            v.witness_coeff.push_back(-1); // sum(rep) - e = 0
            return v;
        }
        fold.fold(e);
    }
    v.dissociated = true;
    return v;
}

ResidueSet maximal_dissociated_subset(const ResidueSet& S) {
    SpanFold fold(S.group());
    ResidueSet D(S.group());
    for (std::int64_t r : S.members()) {
        if (!fold.contains(r)) {
            fold.fold(r);
            D.insert(r);
        }
    }
    return D;
}

ChangDecomposition chang_decomposition(const ResidueSet& A, const Alpha& alpha) {
    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    SpanFold fold(A.group());
    ResidueSet D(A.group());
    for (std::int64_t r : R.members.members()) {
        if (!fold.contains(r)) {
            fold.fold(r);
            D.insert(r);
        }
    }
    ChangDecomposition out(R.members, D);
    out.boundary = R.boundary;
    out.covered = true;
    for (std::int64_t r : R.members.members()) {
        SpanRepresentation rep = fold.extract(r); // maximality: every r is spanned
        if (!rep.verify(A.group())) out.covered = false;
        out.reps.push_back(std::move(rep));
    }
    const double delta = A.density();
    const double ratio2 = delta / alpha.value * (delta / alpha.value);
    const double log_inv = delta < 1.0 ? std::log2(1.0 / delta) : 0.0;
    out.chang_bound = 2.0 * ratio2 * log_inv;
    out.derived_bound_c1 = 256.0 * ratio2 * log_inv;
    return out;
}

LambdaFamilyWitness is_lambda_family(const ResidueSet& L, int k, int s) {
    if (k < 1 || s < 1) throw input_error("is_lambda_family: k and s must be >= 1");
    const std::int64_t n = L.modulus();
    const auto elems = L.members();
    const int mass_cap = 2 * k;

    // reachable (mass, residue) pairs after each prefix, with first-reach
    // parents for witness extraction; mass >= 1 at residue 0 is a relation.
    const std::size_t states = static_cast<std::size_t>(mass_cap + 1) * static_cast<std::size_t>(n);
    auto state = [&](int m, std::int64_t x) {
        return static_cast<std::size_t>(m) * static_cast<std::size_t>(n) + static_cast<std::size_t>(x);
    };
    std::vector<bool> reach(states, false);
    std::vector<int> from_elem(states, -1);
    std::vector<std::int64_t> from_coeff(states, 0);
    std::vector<std::size_t> from_state(states, 0);
    reach[state(0, 0)] = true;

    for (std::size_t i = 0; i < elems.size(); ++i) {
        const std::int64_t lam = elems[i];
        // snapshot semantics: each element carries one coefficient
        std::vector<std::size_t> current;
        for (std::size_t st = 0; st < states; ++st)
            if (reach[st]) current.push_back(st);
        for (std::size_t st : current) {
            const int m = static_cast<int>(st / static_cast<std::size_t>(n));
            const auto x = static_cast<std::int64_t>(st % static_cast<std::size_t>(n));
            for (int c = -s; c <= s; ++c) {
                if (c == 0) continue;
                const int nm = m + std::abs(c);
                if (nm > mass_cap) continue;
                const std::int64_t nx = L.group().add(x, L.group().mul(c, lam));
                const std::size_t nst = state(nm, nx);
                if (!reach[nst]) {
                    reach[nst] = true;
                    from_elem[nst] = static_cast<int>(i);
                    from_coeff[nst] = c;
                    from_state[nst] = st;
                }
            }
        }
    }

    LambdaFamilyWitness w;
    for (int m = 1; m <= mass_cap; ++m) {
        const std::size_t st0 = state(m, 0);
        if (!reach[st0]) continue;
        w.member = false;
        std::size_t st = st0;
        while (st != state(0, 0)) {
            w.elems.push_back(elems[static_cast<std::size_t>(from_elem[st])]);
            w.coeff.push_back(from_coeff[st]);
            st = from_state[st];
        }
        std::reverse(w.elems.begin(), w.elems.end());
        std::reverse(w.coeff.begin(), w.coeff.end());
        return w;
    }
    w.member = true;
    return w;
}

namespace {

// Exact ceil(log2(N/m)) for 0 < m <= N: smallest t with 2^t m >= N.
int ceil_log2_inv_density(std::int64_t m, std::int64_t n) {
    int t = 0;
    BigCount lhs = m;
    while (lhs < n) {
        lhs <<= 1;
        ++t;
    }
    return t;
}

// Exact floor(log2(log2(N/m))): largest s >= 0 with 2^(2^s) <= N/m,
// i.e. m * 2^(2^s) <= N; -1 when even s = 0 fails (N/m < 2).
int floor_log2_log2_inv_density(std::int64_t m, std::int64_t n) {
    int s = -1;
    for (int cand = 0; cand < 62; ++cand) {
        BigCount need = BigCount(m) << (1u << cand);
        if (need <= n)
            s = cand;
        else
            break;
    }
    return s;
}

// Iterative deepening relation search: minimal (mass, j, lex s-vector) with
// j * target = sum lambda_i s_i, |s_i| <= s, sum |s_i| = mass <= 2k.
struct RelationSearch {
    RelationSearch(const CyclicGroup& g, std::vector<std::int64_t> lambda, int k, int s)
        : group(g), elems(std::move(lambda)), mass_cap(2 * k), coeff_cap(s) {
        const auto n = static_cast<std::size_t>(g.modulus());
        const auto L = elems.size();
        // reach[pos][m][x]: elements pos..end can produce residue x with mass exactly m
        reach.assign((L + 1) * static_cast<std::size_t>(mass_cap + 1) * n, false);
        at(L, 0, 0) = true;
        for (std::size_t pos = L; pos-- > 0;) {
            for (int m = 0; m <= mass_cap; ++m) {
                for (std::int64_t x = 0; x < g.modulus(); ++x) {
                    bool ok = false;
                    for (int c = -coeff_cap; c <= coeff_cap && !ok; ++c) {
                        if (std::abs(c) > m) continue;
                        const std::int64_t rest = g.sub(x, g.mul(c, elems[pos]));
                        ok = at(pos + 1, m - std::abs(c), rest);
                    }
                    if (ok) at(pos, m, x) = true;
                }
            }
        }
    }

    std::vector<bool>::reference at(std::size_t pos, int m, std::int64_t x) {
        const auto n = static_cast<std::size_t>(group.modulus());
        return reach[(pos * static_cast<std::size_t>(mass_cap + 1) + static_cast<std::size_t>(m)) * n +
                     static_cast<std::size_t>(group.reduce(x))];
    }
    bool at(std::size_t pos, int m, std::int64_t x) const {
        const auto n = static_cast<std::size_t>(group.modulus());
        return reach[(pos * static_cast<std::size_t>(mass_cap + 1) + static_cast<std::size_t>(m)) * n +
                     static_cast<std::size_t>(group.reduce(x))];
    }

    // Lexicographically first coefficient vector of mass exactly `mass_left`
    // hitting `target`; false when unreachable.
    bool dfs(std::size_t pos, int mass_left, std::int64_t target, std::vector<int>& out) const {
        if (pos == elems.size()) return mass_left == 0 && group.reduce(target) == 0;
        if (!at(pos, mass_left, target)) return false;
        for (int c = -coeff_cap; c <= coeff_cap; ++c) {
            if (std::abs(c) > mass_left) continue;
            if (dfs(pos + 1, mass_left - std::abs(c), group.sub(target, group.mul(c, elems[pos])), out)) {
                out[pos] = c;
                return true;
            }
        }
        return false;
    }

    // Returns (j, coefficients) for the first (mass, j, vector) in order.
    bool find(std::int64_t x, int s_range, int* j_out, std::vector<int>* coeff_out) const {
        for (int mass = 0; mass <= mass_cap; ++mass) {
            for (int j = 1; j <= s_range; ++j) {
                std::vector<int> c(elems.size(), 0);
                if (dfs(0, mass, group.mul(j, x), c)) {
                    *j_out = j;
                    *coeff_out = std::move(c);
                    return true;
                }
            }
        }
        return false;
    }

    CyclicGroup group;
    std::vector<std::int64_t> elems;
    int mass_cap, coeff_cap;
    std::vector<bool> reach;
};

} // namespace

ImprovedDecomposition improved_decomposition(const ResidueSet& A, const Alpha& alpha,
                                             ImprovedVariant variant) {
    const std::int64_t n = A.modulus();
    if (std::gcd(n, std::int64_t{6}) != 1)
        throw input_error("improved_decomposition: gcd(N,6) must be 1, N = " + std::to_string(n));
    if (A.empty()) throw input_error("improved_decomposition: A must be nonempty");
    const std::int64_t m = A.size();
    if (2 * m > n) throw input_error("improved_decomposition: delta must be <= 1/2");

    const int k = 2 * ceil_log2_inv_density(m, n);
    int s = 3;
    bool clamped = false;
    if (variant == ImprovedVariant::Tilde) {
        const int raw = floor_log2_log2_inv_density(m, n);
        clamped = raw < 3;
        s = std::max(3, raw);
    }

    SpectrumLevelSet R = spectrum_threshold(A, alpha);
    const ResidueSet Rstar = R.members.without_zero();

    // ascending greedy maximal Lambda(k,s) subset
    ResidueSet lambda(A.group());
    for (std::int64_t r : Rstar.members()) {
        ResidueSet candidate = lambda;
        candidate.insert(r);
        if (is_lambda_family(candidate, k, s).member) lambda = std::move(candidate);
    }

    // basis: Star = {0} u U_{j<=3} j^-1 Lambda; Tilde = U_{j<=s} j^-1 Lambda
    ResidueSet basis(A.group());
    const int j_max = variant == ImprovedVariant::Star ? 3 : s;
    std::vector<std::int64_t> inv_j(static_cast<std::size_t>(j_max) + 1, 0);
    for (int j = 1; j <= j_max; ++j) {
        if (std::gcd(n, static_cast<std::int64_t>(j)) != 1)
            throw input_error("improved_decomposition: j = " + std::to_string(j) +
                              " is not invertible modulo " + std::to_string(n));
        inv_j[static_cast<std::size_t>(j)] = A.group().inverse(j);
        for (std::int64_t l : lambda.members()) basis.insert(A.group().mul(inv_j[static_cast<std::size_t>(j)], l));
    }
    if (variant == ImprovedVariant::Star) basis.insert(0);

    ImprovedDecomposition out(R.members, lambda, basis);
    out.k = k;
    out.s = s;
    out.s_clamped = clamped;
    out.boundary = R.boundary;

    const RelationSearch search(A.group(), lambda.members(), k, s);
    out.covered = true;
    out.length_ok = true;
    for (std::int64_t r : R.members.members()) {
        SpanRepresentation rep;
        rep.target = r;
        if (r != 0) {
            int j = 0;
            std::vector<int> coeffs;
            if (!search.find(r, s, &j, &coeffs))
                throw budget_error("improved_decomposition: no relation found for residue " +
                                   std::to_string(r));
            // x = sum_i s_i (j^-1 lambda_i): expand each s_i into |s_i| signed copies
            const auto& lams = search.elems;
            for (std::size_t i = 0; i < lams.size(); ++i) {
                const int c = coeffs[i];
                for (int rep_cnt = 0; rep_cnt < std::abs(c); ++rep_cnt) {
                    rep.base.push_back(A.group().mul(inv_j[static_cast<std::size_t>(j)], lams[i]));
                    rep.coeff.push_back(c > 0 ? 1 : -1);
                }
            }
        }
        if (!rep.verify(A.group())) out.covered = false;
        // exact M <= 8 log2(1/delta)  <=>  2^M m^8 <= N^8
        const std::int64_t M = rep.length();
        if ((BigCount(1) << static_cast<unsigned>(M)) * pow_count(m, 8) > pow_count(n, 8))
            out.length_ok = false;
        out.max_length = std::max(out.max_length, M);
        out.reps.push_back(std::move(rep));
    }

    const double delta = A.density();
    const double log_inv = std::log2(1.0 / delta);
    const double ratio2 = (delta / alpha.value) * (delta / alpha.value);
    out.length_limit = 8.0 * log_inv;
    const double loglog = std::log2(std::max(log_inv, 1.0));
    out.star_size_bound =
        std::min(std::max(std::pow(2.0, 30) * ratio2 * log_inv, std::pow(2.0, 4.0 * loglog * loglog + 2.0)),
                 std::pow(2.0, 20) * ratio2 * std::pow(log_inv, 13.0 / 7.0));
    out.tilde_size_bound = std::pow(2.0, 20) * ratio2 * std::pow(log_inv, 5.0 / 3.0) * loglog;
    return out;
}

RudinIdentityCheck rudin_identity_check(const ResidueSet& D, int k) {
    if (k < 1) throw input_error("rudin_identity_check: k must be >= 1");
    DissociatedVerdict v = is_dissociated(D);
    if (!v.dissociated) throw input_error("rudin_identity_check: D is not dissociated: " + D.to_string());
    RudinIdentityCheck res;
    res.exact = energy_tk(D, k, CountMode::Certified);
    const auto power = power_spectrum(D);
    double acc = 0.0;
    for (double p : power) acc += std::pow(p, k);
    acc /= static_cast<double>(D.modulus());
    if (!(acc < 0x1p52)) throw precision_error("rudin_identity_check: spectral value too large");
    const double rounded = std::round(acc);
    if (std::abs(acc - rounded) >= 0.5 - 1e-12)
        throw precision_error("rudin_identity_check: rounding residual >= 0.5");
    res.spectral = BigCount(static_cast<std::int64_t>(rounded));
    res.ok = res.spectral == res.exact;
    return res;
}

double empirical_rudin_constant(const ResidueSet& D, int p,
                                std::span<const std::complex<double>> a) {
    if (p < 2 || p % 2 != 0) throw input_error("empirical_rudin_constant: p must be even and >= 2");
    if (a.size() != static_cast<std::size_t>(D.size()))
        throw input_error("empirical_rudin_constant: coefficient list must match |D|");
    DissociatedVerdict v = is_dissociated(D);
    if (!v.dissociated)
        throw input_error("empirical_rudin_constant: D is not dissociated: " + D.to_string());
    const std::int64_t n = D.modulus();
    const auto members = D.members();
    ComplexSignal f(D.group());
    for (std::size_t i = 0; i < members.size(); ++i)
        f.values[static_cast<std::size_t>(members[i])] = a[i];
    SpectrumTable F = dft(f); // |Fhat(x)| == |sum_n a_n e(nx)|
    double lhs = 0.0;
    for (const Complex& c : F.coefficients) lhs += std::pow(std::norm(c), p / 2);
    lhs /= static_cast<double>(n);
    double energy = 0.0;
    for (const auto& an : a) energy += std::norm(an);
    if (energy == 0.0) return 0.0;
    return std::pow(lhs / std::pow(energy, p / 2.0), 1.0 / p) / std::sqrt(static_cast<double>(p));
}

TkUpperBoundCheck tk_upper_bound_check(const ResidueSet& L, int k, int s) {
    if (s < 3) throw input_error("tk_upper_bound_check: precondition s >= 3 unmet (s = " +
                                 std::to_string(s) + ")");
    if (k < 1) throw input_error("tk_upper_bound_check: k must be >= 1");
    if (L.size() < k)
        throw input_error("tk_upper_bound_check: precondition |Lambda| >= k unmet (|Lambda| = " +
                          std::to_string(L.size()) + ", k = " + std::to_string(k) + ")");
    LambdaFamilyWitness w = is_lambda_family(L, k, s);
    if (!w.member) {
        std::string msg = "tk_upper_bound_check: precondition Lambda in Lambda(k,s) unmet; relation";
        for (std::size_t i = 0; i < w.elems.size(); ++i)
            msg += (i ? " + " : " ") + std::to_string(w.coeff[i]) + "*" + std::to_string(w.elems[i]);
        throw input_error(msg + " = 0 (mod " + std::to_string(L.modulus()) + ")");
    }
    TkUpperBoundCheck res;
    res.t_k = energy_tk(L, k, CountMode::Certified);
    const double lam = static_cast<double>(L.size());
    const double log2k = std::log2(static_cast<double>(k));
    double exponent = 0.0;
    if (k > 1) {
        const double denom = 2.0 * s * log2k + (s - 2) * std::log2(lam);
        exponent = 2.0 * s * k * log2k * log2k / denom;
    }
    res.log2_bound = 9.0 * k + k * log2k + k * std::log2(lam) + exponent;
    res.log2_count = res.t_k == 0 ? -std::numeric_limits<double>::infinity()
                                  : std::log2(res.t_k.convert_to<double>());
    res.bound = res.log2_bound < 1020 ? std::pow(2.0, res.log2_bound)
                                      : std::numeric_limits<double>::infinity();
    res.pass = res.log2_count <= res.log2_bound + 1e-12;
    return res;
}

} // namespace addcomb
