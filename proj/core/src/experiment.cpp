#include "addcomb/experiment.hpp"

#include "addcomb/acceptance.hpp"
#include "addcomb/bohr.hpp"
#include "addcomb/dissociated.hpp"
#include "addcomb/energy.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/parallel.hpp"
#include "addcomb/rng.hpp"
#include "addcomb/set_spec.hpp"
#include "addcomb/spectrum.hpp"
#include "addcomb/systems.hpp"
#include "addcomb/version.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace addcomb {

namespace {

std::string members_text(const ResidueSet& s) {
    std::string out;
    for (std::int64_t r : s.members()) {
        if (!out.empty()) out += ',';
        out += std::to_string(r);
    }
    return out;
}

std::string residues_text(const std::vector<std::int64_t>& v) {
    std::string out;
    for (std::int64_t r : v) {
        if (!out.empty()) out += ',';
        out += std::to_string(r);
    }
    return out;
}

std::string pad(std::int64_t v, int width) {
    std::string s = std::to_string(v);
    while (static_cast<int>(s.size()) < width) s.insert(s.begin(), '0');
    return s;
}

void add_energy_fields(RunRecord& rec, const EnergyReport& rep) {
    rec.add("N", rv_int(rep.modulus));
    rec.add("k", rv_int(rep.k));
    if (rep.d > 0) rec.add("d", rv_int(rep.d));
    rec.add("B_size", rv_int(rep.set_size));
    rec.add(rep.d > 0 ? "s_kd" : "t_k", rv_count(rep.count));
    rec.add("bound", rv_float(rep.bound));
    rec.add("ratio", rv_float(rep.ratio));
    rec.add("delta", rv_float(rep.delta));
    rec.add("alpha_value", rv_float(rep.alpha));
    rec.add("exact_comparison", rv_bool(rep.exact_comparison));
    if (rep.odd_k) rec.add("odd_k", rv_bool(true));
    rec.add("check", rv_text(rep.check));
    if (!rep.boundary.empty()) rec.add("boundary_slack", rv_text(residues_text(rep.boundary)));
    rec.add("pass", rv_bool(rep.pass));
}

RunOutcome finish(RunReport rep, const ExperimentConfig& cfg, int refusals = 0) {
    rep.command = cfg.command;
    rep.seed = cfg.seed;
    rep.rng_id = SplitMix64::id();
    rep.version = kVersion;
    rep.timestamp = iso8601_utc_now();
    rep.sort_records();

    std::int64_t passes = 0, fails = 0, asserted = 0;
    double min_ratio = std::numeric_limits<double>::infinity();
    double max_rudin = -1.0;
    std::int64_t boundary_warnings = 0;
    for (const auto& r : rep.records) {
        if (const ReportValue* v = r.find("pass")) {
            ++asserted;
            if (v->text == "true")
                ++passes;
            else
                ++fails;
        }
        if (const ReportValue* v = r.find("ratio")) {
            if (v->kind == ReportValue::Kind::Number) min_ratio = std::min(min_ratio, std::stod(v->text));
        }
        if (const ReportValue* v = r.find("empirical_rudin_C"))
            max_rudin = std::max(max_rudin, std::stod(v->text));
        if (r.find("boundary_slack") != nullptr) ++boundary_warnings;
    }
    rep.aggregate.emplace_back("records", rv_int(static_cast<std::int64_t>(rep.records.size())));
    rep.aggregate.emplace_back("asserted", rv_int(asserted));
    rep.aggregate.emplace_back("passes", rv_int(passes));
    rep.aggregate.emplace_back("failures", rv_int(fails));
    if (std::isfinite(min_ratio)) rep.aggregate.emplace_back("min_ratio", rv_float(min_ratio));
    if (max_rudin >= 0.0) rep.aggregate.emplace_back("max_empirical_rudin_C", rv_float(max_rudin));
    if (boundary_warnings > 0)
        rep.aggregate.emplace_back("boundary_warnings", rv_int(boundary_warnings));
    if (refusals > 0) rep.aggregate.emplace_back("refusals", rv_int(refusals));

    RunOutcome out;
    out.report = std::move(rep);
    out.exit_code = refusals > 0 ? 2 : (fails > 0 ? 1 : 0);
    return out;
}

void check_budgets(const ExperimentConfig& cfg) {
    if (!(cfg.budget.max_tuples > 0) || !(cfg.budget.max_seconds > 0))
        throw input_error("budgets must be positive");
}

CountMode parse_energy_mode(const std::string& mode) {
    if (mode.empty() || mode == "certified") return CountMode::Certified;
    if (mode == "fast") return CountMode::Fast;
    throw input_error("unknown energy mode '" + mode + "' (fast|certified)");
}

SolveMode parse_solve_mode(const std::string& mode) {
    if (mode.empty() || mode == "exact") return SolveMode::Exact;
    if (mode == "fast") return SolveMode::Fast;
    if (mode == "enumerate") return SolveMode::Enumerate;
    throw input_error("unknown systems mode '" + mode + "' (enumerate|exact|fast)");
}

} // namespace

RunOutcome run_spectrum(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("spectrum: at least one --set is required");
    if (cfg.alphas.empty()) throw input_error("spectrum: at least one --alpha is required");
    RunReport rep;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet A = make_set(set_text);
        for (const auto& alpha_text : cfg.alphas) {
            const Alpha alpha = parse_alpha_expr(alpha_text).eval(A.density_exact());
            SpectrumLevelSet R = spectrum_threshold(A, alpha);
            SizeBoundCheck size = spectrum_size_bound_check(A, alpha);
            auto levels = dyadic_levels(A, alpha);

            RunRecord rec;
            rec.key = "set=" + set_text + "|alpha=" + alpha_text;
            rec.add("N", rv_int(A.modulus()));
            rec.add("set", rv_text(set_text));
            rec.add("alpha", rv_text(alpha_text));
            rec.add("alpha_value", rv_float(alpha.value));
            rec.add("delta", rv_float(A.density()));
            rec.add("R", rv_text(members_text(R.members)));
            rec.add("R_size", rv_int(R.members.size()));
            rec.add("size_bound", rv_float(size.bound));
            rec.add("exact_comparison", rv_bool(size.exact_comparison));
            std::string lv;
            for (const auto& l : levels) {
                if (!lv.empty()) lv += ';';
                lv += std::to_string(l.index) + ":{" + members_text(l.members) + "}";
            }
            rec.add("dyadic_levels", rv_text(lv));
            if (!R.boundary.empty()) rec.add("boundary_slack", rv_text(residues_text(R.boundary)));
            rec.add("check", rv_text("spectrum_size_bound"));
            rec.add("pass", rv_bool(size.pass));
            rep.records.push_back(std::move(rec));
        }
    }
    return finish(std::move(rep), cfg);
}

RunOutcome run_energy(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("energy: at least one --set is required");
    const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{2} : cfg.ks;
    const CountMode mode = parse_energy_mode(cfg.mode);
    RunReport rep;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet B = make_set(set_text);
        for (int k : ks) {
            RunRecord rec;
            rec.key = "set=" + set_text + "|k=" + pad(k, 2);
            rec.add("N", rv_int(B.modulus()));
            rec.add("set", rv_text(set_text));
            rec.add("k", rv_int(k));
            bool fallback = false;
            BigCount t;
            try {
                t = energy_tk(B, k, mode);
            } catch (const precision_error&) {
                t = energy_tk(B, k, CountMode::Certified);
                fallback = true;
            }
            rec.add("t_k", rv_count(t));
            rec.add("mode", rv_text(mode == CountMode::Fast ? "fast" : "certified"));
            if (fallback) rec.add("fallback_to_certified", rv_bool(true));
            const double tuples = std::pow(static_cast<double>(B.size()), 2.0 * k);
            if (tuples <= cfg.budget.max_tuples) {
                const BigCount oracle = energy_tk_bruteforce(B, k, cfg.budget);
                rec.add("oracle", rv_count(oracle));
                rec.add("check", rv_text("oracle_equivalence"));
                rec.add("pass", rv_bool(oracle == t));
            }
            rep.records.push_back(std::move(rec));
        }
    }
    return finish(std::move(rep), cfg);
}

RunOutcome run_systems(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("systems: at least one --set is required");
    const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{2} : cfg.ks;
    const std::vector<int> ds = cfg.ds.empty() ? std::vector<int>{0} : cfg.ds;
    const SolveMode mode = parse_solve_mode(cfg.mode);
    RunReport rep;
    int refusals = 0;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet B = make_set(set_text);
        for (int k : ks) {
            for (int d : ds) {
                RunRecord rec;
                rec.key = "set=" + set_text + "|k=" + pad(k, 2) + "|d=" + pad(d, 2);
                rec.add("N", rv_int(B.modulus()));
                rec.add("set", rv_text(set_text));
                rec.add("k", rv_int(k));
                rec.add("d", rv_int(d));
                try {
                    const BigCount s = count_solutions(B, k, d, mode, cfg.budget);
                    rec.add("s_kd", rv_count(s));
                    if (d == 0) {
                        const BigCount t = energy_tk(B, k, CountMode::Certified);
                        rec.add("t_k", rv_count(t));
                        rec.add("check", rv_text("skd_equals_tk_at_d0"));
                        rec.add("pass", rv_bool(s == t));
                    }
                } catch (const budget_error& e) {
                    rec.add("refused", rv_text(e.what()));
                    ++refusals;
                }
                rep.records.push_back(std::move(rec));
            }
        }
    }
    return finish(std::move(rep), cfg, refusals);
}

RunOutcome run_gowers(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("gowers: at least one --set is required");
    if (cfg.d_max < 2) throw input_error("gowers: --d-max must be >= 2");
    RunReport rep;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet A = make_set(set_text);
        const ComplexSignal f = indicator(A);
        MonotonicityCheck mono = gowers_monotonicity_check(f, cfg.d_max, cfg.budget);
        RunRecord rec;
        rec.key = "set=" + set_text;
        rec.add("N", rv_int(A.modulus()));
        rec.add("set", rv_text(set_text));
        rec.add("delta", rv_float(A.density()));
        for (std::size_t i = 0; i < mono.norms.size(); ++i)
            rec.add("u" + std::to_string(i + 1), rv_float(mono.norms[i]));
        rec.add("max_violation", rv_float(mono.max_violation));
        rec.add("tolerance", rv_float(mono.tolerance));
        rec.add("check", rv_text("gowers_monotonicity"));
        rec.add("pass", rv_bool(mono.ok));
        rep.records.push_back(std::move(rec));
    }
    return finish(std::move(rep), cfg);
}

RunOutcome run_chang(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("chang: at least one --set is required");
    if (cfg.alphas.empty()) throw input_error("chang: at least one --alpha is required");
    RunReport rep;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet A = make_set(set_text);
        for (const auto& alpha_text : cfg.alphas) {
            const Alpha alpha = parse_alpha_expr(alpha_text).eval(A.density_exact());
            ChangDecomposition dec = chang_decomposition(A, alpha);
            std::int64_t max_m = 0;
            for (const auto& r : dec.reps) max_m = std::max(max_m, r.length());
            RunRecord rec;
            rec.key = "set=" + set_text + "|alpha=" + alpha_text;
            rec.add("N", rv_int(A.modulus()));
            rec.add("set", rv_text(set_text));
            rec.add("alpha", rv_text(alpha_text));
            rec.add("alpha_value", rv_float(alpha.value));
            rec.add("delta", rv_float(A.density()));
            rec.add("R_size", rv_int(dec.spectrum.size()));
            rec.add("D", rv_text(members_text(dec.basis)));
            rec.add("D_size", rv_int(dec.basis.size()));
            rec.add("max_M", rv_int(max_m));
            rec.add("chang_bound", rv_float(dec.chang_bound));
            rec.add("derived_bound_at_C1", rv_float(dec.derived_bound_c1));
            bool pass = dec.covered;
            if (!dec.basis.empty()) {
                RudinIdentityCheck rudin = rudin_identity_check(dec.basis, 2);
                rec.add("rudin_identity_ok", rv_bool(rudin.ok));
                pass = pass && rudin.ok;
                std::vector<std::complex<double>> ones(static_cast<std::size_t>(dec.basis.size()), 1.0);
                rec.add("empirical_rudin_C", rv_float(empirical_rudin_constant(dec.basis, 4, ones)));
            }
            if (!dec.boundary.empty()) rec.add("boundary_slack", rv_text(residues_text(dec.boundary)));
            rec.add("check", rv_text("chang_coverage"));
            rec.add("pass", rv_bool(pass));
            rep.records.push_back(std::move(rec));
        }
    }
    return finish(std::move(rep), cfg);
}

RunOutcome run_improved(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.sets.empty()) throw input_error("improved: at least one --set is required");
    if (cfg.alphas.empty()) throw input_error("improved: at least one --alpha is required");
    ImprovedVariant variant;
    if (cfg.variant == "star")
        variant = ImprovedVariant::Star;
    else if (cfg.variant == "tilde")
        variant = ImprovedVariant::Tilde;
    else
        throw input_error("improved: unknown variant '" + cfg.variant + "' (star|tilde)");
    RunReport rep;
    for (const auto& set_text : cfg.sets) {
        const ResidueSet A = make_set(set_text);
        for (const auto& alpha_text : cfg.alphas) {
            const Alpha alpha = parse_alpha_expr(alpha_text).eval(A.density_exact());
            ImprovedDecomposition dec = improved_decomposition(A, alpha, variant);
            RunRecord rec;
            rec.key = "set=" + set_text + "|alpha=" + alpha_text + "|variant=" + cfg.variant;
            rec.add("N", rv_int(A.modulus()));
            rec.add("set", rv_text(set_text));
            rec.add("alpha", rv_text(alpha_text));
            rec.add("alpha_value", rv_float(alpha.value));
            rec.add("delta", rv_float(A.density()));
            rec.add("variant", rv_text(cfg.variant));
            rec.add("k", rv_int(dec.k));
            rec.add("s", rv_int(dec.s));
            if (dec.s_clamped) rec.add("s_clamped", rv_bool(true));
            rec.add("R_size", rv_int(dec.spectrum.size()));
            rec.add("lambda_size", rv_int(dec.lambda.size()));
            rec.add("basis", rv_text(members_text(dec.basis)));
            rec.add("basis_size", rv_int(dec.basis.size()));
            rec.add("max_M", rv_int(dec.max_length));
            rec.add("length_limit", rv_float(dec.length_limit));
            rec.add("size_bound_report",
                    rv_float(variant == ImprovedVariant::Star ? dec.star_size_bound : dec.tilde_size_bound));
            bool pass = dec.covered && dec.length_ok;
            if (dec.lambda.size() >= dec.k) {
                TkUpperBoundCheck ub = tk_upper_bound_check(dec.lambda, dec.k, dec.s);
                rec.add("lambda_t_k", rv_count(ub.t_k));
                rec.add("lambda_t_k_log2_bound", rv_float(ub.log2_bound));
                rec.add("lambda_t_k_bound_ok", rv_bool(ub.pass));
                pass = pass && ub.pass;
            }
            if (!dec.boundary.empty()) rec.add("boundary_slack", rv_text(residues_text(dec.boundary)));
            rec.add("check", rv_text("improved_coverage_and_length"));
            rec.add("pass", rv_bool(pass));
            rep.records.push_back(std::move(rec));
        }
    }
    return finish(std::move(rep), cfg);
}

RunOutcome run_bohr(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    RunReport rep;
    if (cfg.bohr_modulus > 0) {
        if (cfg.bohr_eps.empty()) throw input_error("bohr: --eps is required with --N");
        BohrSpec spec{ResidueSet(CyclicGroup(cfg.bohr_modulus), cfg.bohr_freqs),
                      Eps::from_rational(parse_rational(cfg.bohr_eps))};
        const ResidueSet B = bohr_set(spec);
        BourgainCheck size = bourgain_size_check(spec);
        RunRecord rec;
        rec.key = "N=" + pad(cfg.bohr_modulus, 4) + "|K=" + members_text(spec.freqs) +
                  "|eps=" + cfg.bohr_eps;
        rec.add("N", rv_int(cfg.bohr_modulus));
        rec.add("K", rv_text(members_text(spec.freqs)));
        rec.add("eps", rv_text(cfg.bohr_eps));
        rec.add("bohr_set", rv_text(members_text(B)));
        rec.add("size", rv_int(B.size()));
        rec.add("bourgain_bound", rv_float(size.bound));
        rec.add("exact_comparison", rv_bool(size.exact_comparison));
        rec.add("check", rv_text("bourgain_size"));
        rec.add("pass", rv_bool(size.pass));
        rep.records.push_back(std::move(rec));
    }
    if (cfg.contain) {
        for (const auto& set_text : cfg.sets) {
            const ResidueSet A = make_set(set_text);
            ContainmentCheck c = verify_bohr_containment(A);
            RunRecord rec;
            rec.key = "set=" + set_text + "|containment";
            rec.add("N", rv_int(A.modulus()));
            rec.add("set", rv_text(set_text));
            rec.add("delta", rv_float(A.density()));
            rec.add("alpha_value", rv_float(c.alpha));
            rec.add("R_star_size", rv_int(c.r_star.size()));
            rec.add("B1", rv_text(members_text(c.bohr1)));
            rec.add("min_certificate", rv_float(c.min_certificate));
            rec.add("max_sine", rv_float(c.max_sine));
            rec.add("check", rv_text("bohr_in_2a_minus_2a"));
            rec.add("pass", rv_bool(c.pass));
            rep.records.push_back(std::move(rec));

            if (std::gcd(A.modulus(), std::int64_t{6}) == 1 && 2 * A.size() <= A.modulus() &&
                !A.empty()) {
                FullPropositionCheck fp = verify_full_proposition(A);
                RunRecord frec;
                frec.key = "set=" + set_text + "|full-proposition";
                frec.add("N", rv_int(A.modulus()));
                frec.add("set", rv_text(set_text));
                frec.add("delta", rv_float(A.density()));
                frec.add("lambda_star_size", rv_int(fp.decomposition.basis.size()));
                frec.add("lambda_star_size_bound", rv_float(fp.lambda_star_size_bound));
                frec.add("B2_size", rv_int(fp.bohr2.size()));
                frec.add("B2_in_B1", rv_bool(fp.b2_in_b1));
                frec.add("B2_in_2A_minus_2A", rv_bool(fp.b2_in_diffset));
                frec.add("check", rv_text("full_proposition_chain"));
                frec.add("pass", rv_bool(fp.pass));
                rep.records.push_back(std::move(frec));
            }
        }
    }
    if (rep.records.empty())
        throw input_error("bohr: nothing to do (give --N/--K/--eps or --contain with --set)");
    return finish(std::move(rep), cfg);
}

namespace {

struct SweepInstance {
    std::int64_t modulus = 0;
    std::uint64_t mask = 0;       // exhaustive
    int random_index = -1;        // randomized
    std::string set_label;
    ResidueSet set;

    SweepInstance(std::int64_t n, ResidueSet s) : modulus(n), set(std::move(s)) {}
};

std::vector<SweepInstance> sweep_family(const ExperimentConfig& cfg) {
    if (cfg.moduli.empty()) throw input_error("verify sweep: --N is required");
    std::vector<SweepInstance> out;
    if (cfg.exhaustive) {
        for (std::int64_t n : cfg.moduli) {
            if (n < 1 || n > 20)
                throw budget_error("exhaustive sweep limited to 1 <= N <= 20, got " + std::to_string(n));
            for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
                ResidueSet A{CyclicGroup(n)};
                for (std::int64_t b = 0; b < n; ++b)
                    if (mask >> b & 1) A.insert(b);
                SweepInstance inst(n, std::move(A));
                inst.mask = mask;
                inst.set_label = "mask=" + pad(static_cast<std::int64_t>(mask), 7);
                out.push_back(std::move(inst));
            }
        }
    } else {
        const int count = cfg.random_instances > 0 ? cfg.random_instances : 100;
        SplitMix64 root(cfg.seed);
        std::uint64_t idx = 0;
        for (std::int64_t n : cfg.moduli) {
            for (int i = 0; i < count; ++i, ++idx) {
                SplitMix64 rng = root.fork(idx);
                ResidueSet A{CyclicGroup(n)};
                do {
                    const Rational density(1 + rng.next_below(static_cast<std::uint64_t>(n)), n);
                    A = random_set(CyclicGroup(n), density, rng);
                } while (A.empty());
                SweepInstance inst(n, std::move(A));
                inst.random_index = i;
                inst.set_label = "rand=" + pad(i, 5);
                out.push_back(std::move(inst));
            }
        }
    }
    return out;
}

} // namespace

RunOutcome run_verify_main(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.alphas.empty()) throw input_error("verify-main: --alpha-grid is required");
    const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{2} : cfg.ks;
    const auto family = sweep_family(cfg);
    auto records = run_indexed<RunRecord>(
        family.size(), cfg.threads, [&](std::size_t i) {
            const SweepInstance& inst = family[i];
            std::vector<RunRecord> recs;
            const Rational delta = inst.set.density_exact();
            for (const auto& alpha_text : cfg.alphas) {
                const AlphaExpr expr = parse_alpha_expr(alpha_text);
                const Alpha alpha = expr.eval(delta);
                if (!(*alpha.square > 0) || *alpha.square > delta * delta) continue; // grid entry invalid here
                for (int k : ks) {
                    EnergyReport er = verify_main_theorem(inst.set, alpha, k);
                    RunRecord rec;
                    rec.key = "N=" + pad(inst.modulus, 4) + "|" + inst.set_label +
                              "|alpha=" + alpha_text + "|k=" + pad(k, 2);
                    rec.add("set", rv_text(members_text(inst.set)));
                    add_energy_fields(rec, er);
                    recs.push_back(std::move(rec));
                }
            }
            return recs;
        });
    RunReport rep;
    rep.records = std::move(records);
    return finish(std::move(rep), cfg);
}

RunOutcome run_verify_matrix(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    if (cfg.alphas.empty()) throw input_error("verify-matrix: --alpha-grid is required");
    const std::vector<int> ks = cfg.ks.empty() ? std::vector<int>{1, 2} : cfg.ks;
    const std::vector<int> ds = cfg.ds.empty() ? std::vector<int>{1} : cfg.ds;
    const auto family = sweep_family(cfg);
    auto records = run_indexed<RunRecord>(
        family.size(), cfg.threads, [&](std::size_t i) {
            const SweepInstance& inst = family[i];
            std::vector<RunRecord> recs;
            const Rational delta = inst.set.density_exact();
            for (const auto& alpha_text : cfg.alphas) {
                const Alpha alpha = parse_alpha_expr(alpha_text).eval(delta);
                if (!(*alpha.square > 0) || *alpha.square > delta * delta) continue;
                for (int k : ks) {
                    for (int d : ds) {
                        EnergyReport er = verify_matrix_theorem(inst.set, alpha, k, d, SolveMode::Exact,
                                                                cfg.budget);
                        RunRecord rec;
                        rec.key = "N=" + pad(inst.modulus, 4) + "|" + inst.set_label +
                                  "|alpha=" + alpha_text + "|k=" + pad(k, 2) + "|d=" + pad(d, 2);
                        rec.add("set", rv_text(members_text(inst.set)));
                        add_energy_fields(rec, er);
                        recs.push_back(std::move(rec));
                    }
                }
            }
            return recs;
        });
    RunReport rep;
    rep.records = std::move(records);
    return finish(std::move(rep), cfg);
}

RunOutcome run_verify_all(const ExperimentConfig& cfg) {
    check_budgets(cfg);
    AcceptanceOptions opt;
    opt.seed = cfg.seed;
    opt.threads = cfg.threads;
    opt.budget = cfg.budget;
    const auto results = run_acceptance(opt, nullptr);
    RunReport rep;
    for (const auto& cr : results) {
        RunRecord rec;
        rec.key = "criterion-" + pad(cr.id, 2);
        rec.add("name", rv_text(cr.name));
        rec.add("instances", rv_int(cr.instances));
        rec.add("failures", rv_int(cr.failures));
        rec.add("seconds", rv_float(cr.seconds));
        if (!cr.detail.empty()) rec.add("detail", rv_text(cr.detail));
        rec.add("check", rv_text("acceptance_criterion"));
        rec.add("pass", rv_bool(cr.pass));
        rep.records.push_back(std::move(rec));
    }
    return finish(std::move(rep), cfg);
}

} // namespace addcomb
