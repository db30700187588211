#include "addcomb/acceptance.hpp"

#include "addcomb/bohr.hpp"
#include "addcomb/dissociated.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/experiment.hpp"
#include "addcomb/fourier.hpp"
#include "addcomb/parallel.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/spectrum.hpp"
#include "addcomb/systems.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <ostream>
#include <sstream>

namespace addcomb {

namespace {

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

struct InstanceOutcome {
    std::int64_t checked = 0;
    std::int64_t failed = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    std::string note;
};

InstanceOutcome reduce(const std::vector<InstanceOutcome>& v) {
    InstanceOutcome total;
    for (const auto& o : v) {
        total.checked += o.checked;
        total.failed += o.failed;
        total.min_ratio = std::min(total.min_ratio, o.min_ratio);
        if (total.note.empty() && !o.note.empty()) total.note = o.note;
    }
    return total;
}

ResidueSet set_from_mask(std::int64_t n, std::uint64_t mask) {
    ResidueSet A{CyclicGroup(n)};
    for (std::int64_t b = 0; b < n; ++b)
        if (mask >> b & 1) A.insert(b);
    return A;
}

ResidueSet random_subset_of_size(CyclicGroup g, std::int64_t size, SplitMix64& rng) {
    std::vector<std::int64_t> pool(static_cast<std::size_t>(g.modulus()));
    std::iota(pool.begin(), pool.end(), 0);
    for (std::size_t i = pool.size(); i > 1; --i)
        std::swap(pool[i - 1], pool[rng.next_below(i)]);
    ResidueSet A(g);
    for (std::int64_t i = 0; i < size; ++i) A.insert(pool[static_cast<std::size_t>(i)]);
    return A;
}

ResidueSet random_nonempty(CyclicGroup g, SplitMix64& rng) {
    for (;;) {
        const Rational density(1 + rng.next_below(static_cast<std::uint64_t>(g.modulus())), g.modulus());
        ResidueSet A = random_set(g, density, rng);
        if (!A.empty()) return A;
    }
}

ResidueSet random_half_density(CyclicGroup g, SplitMix64& rng) {
    // nonempty with |A| <= N/2
    for (;;) {
        const auto half = static_cast<std::uint64_t>(g.modulus() / 2);
        const Rational density(1 + rng.next_below(half), g.modulus());
        ResidueSet A = random_set(g, density, rng);
        if (!A.empty() && 2 * A.size() <= g.modulus()) return A;
    }
}

CriterionResult make_result(int id, std::string name, const InstanceOutcome& o, const Timer& t,
                            double max_seconds = 0.0) {
    CriterionResult r;
    r.id = id;
    r.name = std::move(name);
    r.instances = o.checked;
    r.failures = o.failed;
    r.seconds = t.seconds();
    r.pass = o.failed == 0 && o.checked > 0 && (max_seconds <= 0.0 || r.seconds < max_seconds);
    std::ostringstream d;
    if (std::isfinite(o.min_ratio)) d << "min ratio " << o.min_ratio;
    if (!o.note.empty()) d << (d.tellp() > 0 ? "; " : "") << o.note;
    if (max_seconds > 0.0 && r.seconds >= max_seconds)
        d << (d.tellp() > 0 ? "; " : "") << "over the " << max_seconds << " s limit";
    r.detail = d.str();
    return r;
}

// ---- criterion 1: energy oracle equivalence -------------------------------

CriterionResult criterion_oracle_equivalence(const AcceptanceOptions& opt) {
    Timer timer;
    struct Case {
        ResidueSet B;
        int k;
        Case(ResidueSet b, int kk) : B(std::move(b)), k(kk) {}
    };
    std::vector<Case> cases;
    for (std::int64_t n = 4; n <= 12; ++n)
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            if (std::popcount(mask) > 5) continue;
            for (int k : {2, 3}) cases.emplace_back(set_from_mask(n, mask), k);
        }
    SplitMix64 root(opt.seed ^ 0x01);
    for (int i = 0; i < 500; ++i) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(61)); // 4..64
        const int k = rng.next_below(2) == 0 ? 2 : 3;
        const std::int64_t cap = k == 2 ? 56 : 14; // |B|^(2k) <= 1e7
        const std::int64_t size = static_cast<std::int64_t>(rng.next_below(
            static_cast<std::uint64_t>(std::min(n, cap) + 1)));
        cases.emplace_back(random_subset_of_size(CyclicGroup(n), size, rng), k);
    }
    auto outcomes = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        const auto& c = cases[i];
        InstanceOutcome o;
        o.checked = 1;
        const BigCount oracle = energy_tk_bruteforce(c.B, c.k, opt.budget);
        if (energy_tk(c.B, c.k, CountMode::Certified) != oracle) ++o.failed;
        try {
            if (energy_tk(c.B, c.k, CountMode::Fast) != oracle) ++o.failed;
        } catch (const precision_error&) {
            // fast path declined to certify; the exact path above already matched
        }
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(1, "energy oracle equivalence (exhaustive |B|<=5, N=4..12; 500 random N<=64)",
                       reduce(outcomes), timer, 300.0);
}

// ---- criterion 2: main theorem sweep --------------------------------------

std::vector<std::pair<std::int64_t, std::uint64_t>> exhaustive_family(std::int64_t n_lo,
                                                                      std::int64_t n_hi) {
    std::vector<std::pair<std::int64_t, std::uint64_t>> family;
    for (std::int64_t n = n_lo; n <= n_hi; ++n)
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask)
            family.emplace_back(n, mask);
    return family;
}

CriterionResult criterion_main_theorem(const AcceptanceOptions& opt) {
    Timer timer;
    const auto family = exhaustive_family(5, 11);
    const Rational grid[3] = {Rational(1), Rational(1, 2), Rational(1, 4)};
    auto outcomes = run_indexed<InstanceOutcome>(family.size(), opt.threads, [&](std::size_t i) {
        const auto [n, mask] = family[i];
        const ResidueSet A = set_from_mask(n, mask);
        const Rational delta = A.density_exact();
        InstanceOutcome o;
        for (const Rational& c : grid) {
            const Alpha alpha = Alpha::from_rational(Rational(delta * c));
            for (int k : {2, 3}) {
                EnergyReport rep = verify_main_theorem(A, alpha, k);
                ++o.checked;
                if (!rep.pass) {
                    ++o.failed;
                    if (o.note.empty()) o.note = "violation at A=" + A.to_string();
                }
                o.min_ratio = std::min(o.min_ratio, rep.ratio);
            }
        }
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(2, "main theorem sweep (exhaustive N=5..11, alpha in {d,d/2,d/4}, k in {2,3})",
                       reduce(outcomes), timer, 600.0);
}

// ---- criterion 3: level-set lemmas -----------------------------------------

CriterionResult criterion_level_lemmas(const AcceptanceOptions& opt) {
    Timer timer;
    const auto family = exhaustive_family(5, 11);
    const Rational grid[3] = {Rational(1), Rational(1, 2), Rational(1, 4)};
    auto outcomes = run_indexed<InstanceOutcome>(family.size(), opt.threads, [&](std::size_t i) {
        const auto [n, mask] = family[i];
        const ResidueSet A = set_from_mask(n, mask);
        const Rational delta = A.density_exact();
        InstanceOutcome o;
        for (const Rational& c : grid) {
            const Alpha alpha = Alpha::from_rational(Rational(delta * c));
            for (const SpectrumLevelSet& level : dyadic_levels(A, alpha)) {
                for (int k : {2, 4}) {
                    EnergyReport rep = verify_level_lemma(A, level.alpha, k);
                    ++o.checked;
                    if (!rep.pass) {
                        ++o.failed;
                        if (o.note.empty())
                            o.note = "violation at A=" + A.to_string() + " level " +
                                     std::to_string(level.index);
                    }
                    o.min_ratio = std::min(o.min_ratio, rep.ratio);
                }
            }
        }
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(3, "level-set lemmas (dyadic windows of the exhaustive family, k in {2,4})",
                       reduce(outcomes), timer);
}

// ---- criterion 4: matrix theorem -------------------------------------------

CriterionResult criterion_matrix_theorem(const AcceptanceOptions& opt) {
    Timer timer;
    InstanceOutcome total;

    // (a) S_{k,0} == T_k on 200 random instances
    struct Case {
        ResidueSet B;
        int k;
        Case(ResidueSet b, int kk) : B(std::move(b)), k(kk) {}
    };
    std::vector<Case> cases;
    SplitMix64 root(opt.seed ^ 0x04);
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(61));
        const int k = 1 + static_cast<int>(rng.next_below(3));
        cases.emplace_back(random_nonempty(CyclicGroup(n), rng), k);
    }
    auto part_a = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        if (count_solutions(cases[i].B, cases[i].k, 0, SolveMode::Exact, opt.budget) !=
            energy_tk(cases[i].B, cases[i].k, CountMode::Certified))
            ++o.failed;
        return std::vector<InstanceOutcome>{o};
    });
    InstanceOutcome a = reduce(part_a);
    total.checked += a.checked;
    total.failed += a.failed;

    // (b) exhaustive A in Z_7, alpha = delta/2, k in {1,2}, d = 1
    const auto family = exhaustive_family(7, 7);
    auto part_b = run_indexed<InstanceOutcome>(family.size(), opt.threads, [&](std::size_t i) {
        const auto [n, mask] = family[i];
        const ResidueSet A = set_from_mask(n, mask);
        const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() / 2));
        InstanceOutcome o;
        for (int k : {1, 2}) {
            EnergyReport rep = verify_matrix_theorem(A, alpha, k, 1, SolveMode::Exact, opt.budget);
            ++o.checked;
            if (!rep.pass) ++o.failed;
            o.min_ratio = std::min(o.min_ratio, rep.ratio);
        }
        return std::vector<InstanceOutcome>{o};
    });
    InstanceOutcome b = reduce(part_b);
    total.checked += b.checked;
    total.failed += b.failed;
    total.min_ratio = b.min_ratio;

    // (c) build_matrix(2,2) equals the displayed 3x16 matrix entry-for-entry
    const std::int8_t expected[3][16] = {
        {1, 1, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, -1, -1},
        {0, 1, 0, 1, 0, 1, 0, 1, 0, -1, 0, -1, 0, -1, 0, -1},
        {0, 0, 1, 1, 0, 0, 1, 1, 0, 0, -1, -1, 0, 0, -1, -1},
    };
    const EquationSystem M = build_matrix(2, 2);
    ++total.checked;
    bool matrix_ok = M.rows == 3 && M.cols == 16;
    for (int r = 0; r < 3 && matrix_ok; ++r)
        for (int c = 0; c < 16; ++c)
            if (M.at(r, c) != expected[r][c]) matrix_ok = false;
    if (!matrix_ok) {
        ++total.failed;
        total.note = "build_matrix(2,2) mismatch";
    }
    return make_result(4, "matrix theorem (S_{k,0}=T_k x200; exhaustive Z_7 d=1; 3x16 matrix)", total,
                       timer);
}

// ---- criterion 5: Gowers monotonicity --------------------------------------

CriterionResult criterion_gowers(const AcceptanceOptions& opt) {
    Timer timer;
    std::vector<ComplexSignal> signals;
    SplitMix64 root(opt.seed ^ 0x05);
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(29)); // 4..32
        if (i < 100) {
            ComplexSignal f{CyclicGroup(n)};
            for (auto& v : f.values)
                v = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
            signals.push_back(std::move(f));
        } else {
            signals.push_back(indicator(random_set(CyclicGroup(n), Rational(1, 2), rng)));
        }
    }
    auto outcomes = run_indexed<InstanceOutcome>(signals.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        MonotonicityCheck mono = gowers_monotonicity_check(signals[i], 3, opt.budget);
        if (!mono.ok) ++o.failed;
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(5, "Gowers monotonicity (100 random complex + 100 indicators, N<=32, d<=3)",
                       reduce(outcomes), timer);
}

// ---- criterion 6: Fourier identities ----------------------------------------

CriterionResult criterion_fourier_identities(const AcceptanceOptions& opt) {
    Timer timer;
    SplitMix64 root(opt.seed ^ 0x06);
    std::vector<std::uint64_t> forks(100);
    for (std::size_t i = 0; i < forks.size(); ++i) forks[i] = i;
    auto outcomes = run_indexed<InstanceOutcome>(forks.size(), opt.threads, [&](std::size_t i) {
        SplitMix64 rng = root.fork(forks[i]);
        const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(63)); // 2..64
        ComplexSignal f{CyclicGroup(n)}, g_real{CyclicGroup(n)};
        for (auto& v : f.values)
            v = Complex(2.0 * rng.next_double() - 1.0, 2.0 * rng.next_double() - 1.0);
        for (auto& v : g_real.values) v = Complex(2.0 * rng.next_double() - 1.0, 0.0);
        const ResidueSet A = random_nonempty(CyclicGroup(n), rng);

        InstanceOutcome o;
        auto check = [&o](bool ok) {
            ++o.checked;
            if (!ok) ++o.failed;
        };
        check(parseval_check(f).ok);
        {
            const ComplexSignal back = inverse_dft(dft(f));
            double err = 0.0;
            for (std::size_t x = 0; x < f.values.size(); ++x)
                err = std::max(err, std::abs(back.values[x] - f.values[x]));
            check(err < 1e-9);
        }
        check(convolution_transform_identity_check(f, g_real).ok);
        check(char_function_identity_check(indicator(A)).identity_holds);
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(
        6, "Fourier identities (Parseval, inversion, convolution transform, char function; x100)",
        reduce(outcomes), timer);
}

// ---- criterion 7: Chang coverage --------------------------------------------

CriterionResult criterion_chang(const AcceptanceOptions& opt) {
    Timer timer;
    struct Case {
        ResidueSet A;
        Rational coeff;
        Case(ResidueSet a, Rational c) : A(std::move(a)), coeff(std::move(c)) {}
    };
    std::vector<Case> cases;
    SplitMix64 root(opt.seed ^ 0x07);
    for (int i = 0; i < 200; ++i) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
        const std::int64_t n = 4 + static_cast<std::int64_t>(rng.next_below(61));
        const Rational coeff(1, std::int64_t{1} << rng.next_below(3)); // 1, 1/2, 1/4
        cases.emplace_back(random_nonempty(CyclicGroup(n), rng), coeff);
    }
    auto outcomes = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        const ResidueSet& A = cases[i].A;
        const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() * cases[i].coeff));
        ChangDecomposition dec = chang_decomposition(A, alpha);
        bool ok = dec.covered && dec.reps.size() == static_cast<std::size_t>(dec.spectrum.size());
        for (const auto& rep : dec.reps)
            if (!rep.verify(A.group())) ok = false;
        const ResidueSet spanned = span(dec.basis); // literal Span(D) >= R_alpha
        if (!dec.spectrum.is_subset_of(spanned)) ok = false;
        if (!ok) ++o.failed;
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(7, "Chang coverage (200 random (A,alpha), N<=64; Span(D) contains R_alpha)",
                       reduce(outcomes), timer);
}

// ---- criterion 8: improved decomposition ------------------------------------

CriterionResult criterion_improved(const AcceptanceOptions& opt) {
    Timer timer;
    struct Case {
        ResidueSet A;
        Rational coeff;
        Case(ResidueSet a, Rational c) : A(std::move(a)), coeff(std::move(c)) {}
    };
    std::vector<Case> cases;
    SplitMix64 root(opt.seed ^ 0x08);
    const std::int64_t moduli[4] = {25, 35, 49, 55};
    std::uint64_t idx = 0;
    for (std::int64_t n : moduli)
        for (int i = 0; i < 25; ++i, ++idx) {
            SplitMix64 rng = root.fork(idx);
            const Rational coeff(1, std::int64_t{1} << (1 + rng.next_below(2))); // 1/2 or 1/4
            cases.emplace_back(random_half_density(CyclicGroup(n), rng), coeff);
        }
    auto outcomes = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        const ResidueSet& A = cases[i].A;
        const Alpha alpha = Alpha::from_rational(Rational(A.density_exact() * cases[i].coeff));
        ImprovedDecomposition dec = improved_decomposition(A, alpha, ImprovedVariant::Star);
        bool ok = dec.covered && dec.length_ok &&
                  dec.reps.size() == static_cast<std::size_t>(dec.spectrum.size());
        for (const auto& rep : dec.reps)
            if (!rep.verify(A.group())) ok = false;
        if (!ok) {
            ++o.failed;
            o.note = "failure at A=" + A.to_string();
        }
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(8, "improved decomposition (N in {25,35,49,55}, 100 random A, M <= 8 log2(1/d))",
                       reduce(outcomes), timer);
}

// ---- criterion 9: Rudin identity --------------------------------------------

CriterionResult criterion_rudin(const AcceptanceOptions& opt) {
    Timer timer;
    struct Case {
        ResidueSet D;
        int k;
        Case(ResidueSet d, int kk) : D(std::move(d)), k(kk) {}
    };
    std::vector<Case> cases;
    SplitMix64 root(opt.seed ^ 0x09);
    for (int i = 0; i < 100; ++i) {
        SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
        const std::int64_t n = 8 + static_cast<std::int64_t>(rng.next_below(57)); // 8..64
        const ResidueSet seed_set = random_nonempty(CyclicGroup(n), rng);
        cases.emplace_back(maximal_dissociated_subset(seed_set), rng.next_below(2) == 0 ? 2 : 3);
    }
    auto outcomes = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        if (!rudin_identity_check(cases[i].D, cases[i].k).ok) ++o.failed;
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(9, "Rudin identity (spectral power mean == T_k, 100 random dissociated D)",
                       reduce(outcomes), timer);
}

// ---- criterion 10: T_k upper bound on Lambda(k,s) sets ------------------------

CriterionResult criterion_tk_upper_bound(const AcceptanceOptions& opt) {
    Timer timer;
    struct Case {
        ResidueSet L;
        int k;
        Case(ResidueSet l, int kk) : L(std::move(l)), k(kk) {}
    };
    std::vector<Case> cases;
    SplitMix64 root(opt.seed ^ 0x0A);
    for (int k : {2, 3}) {
        int made = 0;
        for (std::uint64_t attempt = 0; made < 100; ++attempt) {
            SplitMix64 rng = root.fork((static_cast<std::uint64_t>(k) << 32) | attempt);
            const std::int64_t n = 16 + static_cast<std::int64_t>(rng.next_below(241)); // 16..256
            const ResidueSet pool = random_set(CyclicGroup(n), Rational(16, n), rng);
            ResidueSet lambda{CyclicGroup(n)};
            for (std::int64_t r : pool.members()) {
                if (r == 0) continue;
                ResidueSet candidate = lambda;
                candidate.insert(r);
                if (is_lambda_family(candidate, k, 3).member) lambda = std::move(candidate);
            }
            if (lambda.size() < k) continue; // not admissible, draw again
            cases.emplace_back(std::move(lambda), k);
            ++made;
        }
    }
    auto outcomes = run_indexed<InstanceOutcome>(cases.size(), opt.threads, [&](std::size_t i) {
        InstanceOutcome o;
        o.checked = 1;
        if (!tk_upper_bound_check(cases[i].L, cases[i].k, 3).pass) ++o.failed;
        return std::vector<InstanceOutcome>{o};
    });
    return make_result(10, "T_k(Lambda) upper bound (admissible Lambda(k,3), 100 samples per k in {2,3})",
                       reduce(outcomes), timer);
}

// ---- criterion 11: Bohr suite -------------------------------------------------

CriterionResult criterion_bohr(const AcceptanceOptions& opt) {
    Timer timer;
    InstanceOutcome total;

    // (a) exhaustive K subset of Z_10, eps in {0.1, 0.25, 0.4} + 200 random (K,eps)
    {
        const Rational eps_grid[3] = {Rational(1, 10), Rational(1, 4), Rational(2, 5)};
        std::vector<std::pair<std::uint64_t, int>> insts;
        for (std::uint64_t mask = 0; mask < 1024; ++mask)
            for (int e = 0; e < 3; ++e) insts.emplace_back(mask, e);
        auto part = run_indexed<InstanceOutcome>(insts.size(), opt.threads, [&](std::size_t i) {
            InstanceOutcome o;
            o.checked = 1;
            const auto [mask, e] = insts[i];
            BohrSpec spec{set_from_mask(10, mask), Eps::from_rational(eps_grid[e])};
            if (!bourgain_size_check(spec).pass) ++o.failed;
            return std::vector<InstanceOutcome>{o};
        });
        InstanceOutcome a = reduce(part);
        total.checked += a.checked;
        total.failed += a.failed;
    }
    {
        SplitMix64 root(opt.seed ^ 0x0B);
        std::vector<BohrSpec> specs;
        for (int i = 0; i < 200; ++i) {
            SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
            const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(100)); // 2..101
            const ResidueSet K = random_set(CyclicGroup(n), Rational(1, 4), rng);
            const std::int64_t q = 2 + static_cast<std::int64_t>(rng.next_below(39));
            const std::int64_t p = 1 + static_cast<std::int64_t>(rng.next_below(
                static_cast<std::uint64_t>(q - 1)));
            specs.push_back(BohrSpec{K, Eps::from_rational(Rational(p, q))});
        }
        auto part = run_indexed<InstanceOutcome>(specs.size(), opt.threads, [&](std::size_t i) {
            InstanceOutcome o;
            o.checked = 1;
            if (!bourgain_size_check(specs[i]).pass) ++o.failed;
            return std::vector<InstanceOutcome>{o};
        });
        InstanceOutcome b = reduce(part);
        total.checked += b.checked;
        total.failed += b.failed;
    }

    // (b) containment on 200 random A, N <= 101
    {
        SplitMix64 root(opt.seed ^ 0x1B);
        std::vector<ResidueSet> sets;
        for (int i = 0; i < 200; ++i) {
            SplitMix64 rng = root.fork(static_cast<std::uint64_t>(i));
            const std::int64_t n = 2 + static_cast<std::int64_t>(rng.next_below(100));
            sets.push_back(random_nonempty(CyclicGroup(n), rng));
        }
        auto part = run_indexed<InstanceOutcome>(sets.size(), opt.threads, [&](std::size_t i) {
            InstanceOutcome o;
            o.checked = 1;
            ContainmentCheck c = verify_bohr_containment(sets[i]);
            if (!c.pass) {
                ++o.failed;
                o.note = "containment failure at A=" + sets[i].to_string();
            }
            return std::vector<InstanceOutcome>{o};
        });
        InstanceOutcome b = reduce(part);
        total.checked += b.checked;
        total.failed += b.failed;
        if (total.note.empty()) total.note = b.note;
    }

    // (c) full proposition on the N in {25,35,49,55} family
    {
        SplitMix64 root(opt.seed ^ 0x2B);
        std::vector<ResidueSet> sets;
        const std::int64_t moduli[4] = {25, 35, 49, 55};
        std::uint64_t idx = 0;
        for (std::int64_t n : moduli)
            for (int i = 0; i < 25; ++i, ++idx) {
                SplitMix64 rng = root.fork(idx);
                sets.push_back(random_half_density(CyclicGroup(n), rng));
            }
        auto part = run_indexed<InstanceOutcome>(sets.size(), opt.threads, [&](std::size_t i) {
            InstanceOutcome o;
            o.checked = 1;
            if (!verify_full_proposition(sets[i]).pass) {
                ++o.failed;
                o.note = "full proposition failure at A=" + sets[i].to_string();
            }
            return std::vector<InstanceOutcome>{o};
        });
        InstanceOutcome c = reduce(part);
        total.checked += c.checked;
        total.failed += c.failed;
        if (total.note.empty()) total.note = c.note;
    }
    return make_result(11, "Bohr suite (Bourgain size exhaustive+random; containment; full proposition)",
                       total, timer);
}

// ---- criterion 12: determinism ------------------------------------------------

CriterionResult criterion_determinism(const AcceptanceOptions& opt) {
    Timer timer;
    InstanceOutcome total;

    ExperimentConfig sweep;
    sweep.command = "verify-main";
    sweep.moduli = {5, 6};
    sweep.exhaustive = true;
    sweep.alphas = {"delta", "delta/2"};
    sweep.ks = {2};
    sweep.seed = opt.seed;
    sweep.threads = opt.threads;

    ExperimentConfig randomized = sweep;
    randomized.command = "verify-main";
    randomized.moduli = {16};
    randomized.exhaustive = false;
    randomized.random_instances = 10;

    for (const ExperimentConfig& cfg : {sweep, randomized}) {
        ++total.checked;
        const std::string a = emit_json(run_verify_main(cfg).report, false);
        const std::string b = emit_json(run_verify_main(cfg).report, false);
        if (a != b) {
            ++total.failed;
            total.note = "non-deterministic report for " + cfg.command;
        }
    }
    return make_result(12, "determinism (same config+seed => byte-identical JSON, timestamp aside)",
                       total, timer);
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream* progress) {
    using Fn = CriterionResult (*)(const AcceptanceOptions&);
    const Fn criteria[] = {
        criterion_oracle_equivalence, criterion_main_theorem, criterion_level_lemmas,
        criterion_matrix_theorem,     criterion_gowers,       criterion_fourier_identities,
        criterion_chang,              criterion_improved,     criterion_rudin,
        criterion_tk_upper_bound,    criterion_bohr,         criterion_determinism,
    };
    std::vector<CriterionResult> results;
    for (Fn fn : criteria) {
        CriterionResult r = fn(opt);
        if (progress) {
            (*progress) << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                        << " | " << r.instances << " instances, " << r.failures << " failures ("
                        << r.seconds << " s)" << (r.detail.empty() ? "" : "; " + r.detail) << '\n';
            progress->flush();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace addcomb
