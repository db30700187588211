// addcomb: spectra, additive energies, Gowers norms, dissociated bases and
// Bohr sets over Z/NZ, with every inequality checked on the instances you
// give it. Reports are machine-readable (JSON or CSV) and reproducible:
// rerunning a command with the same seed yields the same bytes.

#include "addcomb/acceptance.hpp"
#include "addcomb/errors.hpp"
#include "addcomb/experiment.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>

namespace {

using addcomb::ExperimentConfig;
using addcomb::RunOutcome;

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(',', pos);
        if (next == std::string::npos) {
            if (pos < text.size()) out.push_back(text.substr(pos));
            break;
        }
        out.push_back(text.substr(pos, next - pos));
        pos = next + 1;
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
    std::vector<int> out;
    for (const auto& item : split_list(text)) {
        int v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (ec != std::errc() || p != item.data() + item.size())
            throw addcomb::input_error(std::string("bad ") + what + " list entry '" + item + "'");
        out.push_back(v);
    }
    return out;
}

// "5..11" or "5,7,11"
std::vector<std::int64_t> parse_modulus_list(const std::string& text) {
    std::vector<std::int64_t> out;
    const auto dots = text.find("..");
    if (dots != std::string::npos) {
        const std::int64_t lo = std::stoll(text.substr(0, dots));
        const std::int64_t hi = std::stoll(text.substr(dots + 2));
        if (lo < 1 || hi < lo) throw addcomb::input_error("bad modulus range '" + text + "'");
        for (std::int64_t n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    for (const auto& item : split_list(text)) out.push_back(std::stoll(item));
    return out;
}

std::vector<std::int64_t> parse_freq_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t next = text.find(';', pos);
        const std::string item =
            next == std::string::npos ? text.substr(pos) : text.substr(pos, next - pos);
        if (!item.empty()) out.push_back(std::stoll(item));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return out;
}

struct OutputOptions {
    std::string format = "json";
    std::string out_path;
    bool no_timestamp = false;
};

int emit(const RunOutcome& outcome, const OutputOptions& out) {
    std::string text;
    if (out.format == "json")
        text = addcomb::emit_json(outcome.report, !out.no_timestamp);
    else if (out.format == "csv")
        text = addcomb::emit_csv(outcome.report);
    else
        throw addcomb::input_error("unknown format '" + out.format + "' (json|csv)");
    if (out.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(out.out_path, std::ios::binary);
        if (!f) throw addcomb::input_error("cannot open output file '" + out.out_path + "'");
        f << text;
    }
    if (outcome.exit_code == 1) {
        for (const auto& rec : outcome.report.records)
            if (rec.failed()) {
                std::cerr << "violation: " << rec.key << '\n';
                for (const auto& [k, v] : rec.fields) std::cerr << "  " << k << " = " << v.text << '\n';
            }
    }
    return outcome.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fourier-analytic workbench for subsets of Z/NZ: large spectra, additive "
                 "energies, linear systems, Gowers norms, dissociated bases, Bohr sets."};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    OutputOptions out;
    std::string alpha_list, k_list, d_list, modulus_list, freq_list;

    app.add_option("--format", out.format, "Report format: json or csv")->capture_default_str();
    app.add_option("--out", out.out_path, "Write the report to a file instead of stdout");
    app.add_flag("--no-timestamp", out.no_timestamp, "Omit the timestamp field from JSON");
    app.add_option("--seed", cfg.seed, "Seed for all randomized instances")->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (0 = auto, env ADDCOMB_THREADS)");
    app.add_option("--budget-tuples", cfg.budget.max_tuples, "Enumeration budget per instance")
        ->capture_default_str();
    app.add_option("--budget-seconds", cfg.budget.max_seconds, "Time budget per instance")
        ->capture_default_str();

    auto add_sets = [&](CLI::App* sub) {
        sub->add_option("--set", cfg.sets,
                        "Set spec, e.g. \"N=10,list:0,1\", \"N=16,random:delta=0.25,seed=7\", "
                        "\"N=20,ap:start=3,step=5,len=4\", \"N=10,bohr:K=1;3,eps=0.25\"");
    };
    auto add_alphas = [&](CLI::App* sub, const char* name) {
        sub->add_option(name, alpha_list, "Comma list of alpha expressions: delta, delta/2, 1/4, 0.1");
    };

    CLI::App* spectrum = app.add_subcommand("spectrum", "Large spectrum R_alpha, size bound, dyadic levels");
    add_sets(spectrum);
    add_alphas(spectrum, "--alpha");

    CLI::App* energy = app.add_subcommand("energy", "Additive energy T_k with oracle cross-check");
    add_sets(energy);
    energy->add_option("--k", k_list, "Comma list of k values");
    energy->add_option("--mode", cfg.mode, "fast | certified (default certified)");

    CLI::App* systems = app.add_subcommand("systems", "Solution counts S_{k,d} of the sign system");
    add_sets(systems);
    systems->add_option("--k", k_list, "Comma list of k values");
    systems->add_option("--d", d_list, "Comma list of d values");
    systems->add_option("--mode", cfg.mode, "enumerate | exact | fast (default exact)");

    CLI::App* gowers = app.add_subcommand("gowers", "Gowers uniformity norms U^1..U^dmax of indicators");
    add_sets(gowers);
    gowers->add_option("--d-max", cfg.d_max, "Largest uniformity degree")->capture_default_str();

    CLI::App* chang = app.add_subcommand("chang", "Maximal dissociated basis of R_alpha with certificates");
    add_sets(chang);
    add_alphas(chang, "--alpha");

    CLI::App* improved = app.add_subcommand("improved", "Lambda(k,s) basis decomposition of R_alpha");
    add_sets(improved);
    add_alphas(improved, "--alpha");
    improved->add_option("--variant", cfg.variant, "star | tilde")->capture_default_str();

    CLI::App* bohr = app.add_subcommand("bohr", "Bohr sets, Bourgain size bound, 2A-2A containments");
    bohr->add_option("--N", cfg.bohr_modulus, "Modulus for --K/--eps");
    bohr->add_option("--K", freq_list, "Semicolon list of frequencies, e.g. 1;3");
    bohr->add_option("--eps", cfg.bohr_eps, "Radius as a rational or decimal, e.g. 1/4 or 0.25");
    add_sets(bohr);
    bohr->add_flag("--contain", cfg.contain, "Verify the 2A-2A containment propositions on --set");

    CLI::App* vmain = app.add_subcommand("verify-main", "Energy lower bound sweep over set families");
    vmain->add_option("--N", modulus_list, "Moduli: range 5..11 or comma list");
    add_alphas(vmain, "--alpha-grid");
    vmain->add_option("--k", k_list, "Comma list of k values");
    vmain->add_flag("--exhaustive", cfg.exhaustive, "All nonempty subsets of each Z_N");
    vmain->add_option("--random", cfg.random_instances, "Random sets per modulus (default 100)");

    CLI::App* vmatrix = app.add_subcommand("verify-matrix", "System solution-count bound sweep");
    vmatrix->add_option("--N", modulus_list, "Moduli: range or comma list");
    add_alphas(vmatrix, "--alpha-grid");
    vmatrix->add_option("--k", k_list, "Comma list of k values");
    vmatrix->add_option("--d", d_list, "Comma list of d values");
    vmatrix->add_flag("--exhaustive", cfg.exhaustive, "All nonempty subsets of each Z_N");
    vmatrix->add_option("--random", cfg.random_instances, "Random sets per modulus (default 100)");

    CLI::App* vall = app.add_subcommand("verify-all", "The full acceptance battery");

    for (CLI::App* sub : app.get_subcommands([](CLI::App*) { return true; })) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (!alpha_list.empty()) cfg.alphas = split_list(alpha_list);
        if (!k_list.empty()) cfg.ks = parse_int_list(k_list, "k");
        if (!d_list.empty()) cfg.ds = parse_int_list(d_list, "d");
        if (!modulus_list.empty()) cfg.moduli = parse_modulus_list(modulus_list);
        if (!freq_list.empty()) cfg.bohr_freqs = parse_freq_list(freq_list);

        RunOutcome outcome;
        if (spectrum->parsed()) {
            cfg.command = "spectrum";
            outcome = addcomb::run_spectrum(cfg);
        } else if (energy->parsed()) {
            cfg.command = "energy";
            outcome = addcomb::run_energy(cfg);
        } else if (systems->parsed()) {
            cfg.command = "systems";
            outcome = addcomb::run_systems(cfg);
        } else if (gowers->parsed()) {
            cfg.command = "gowers";
            outcome = addcomb::run_gowers(cfg);
        } else if (chang->parsed()) {
            cfg.command = "chang";
            outcome = addcomb::run_chang(cfg);
        } else if (improved->parsed()) {
            cfg.command = "improved";
            outcome = addcomb::run_improved(cfg);
        } else if (bohr->parsed()) {
            cfg.command = "bohr";
            outcome = addcomb::run_bohr(cfg);
        } else if (vmain->parsed()) {
            cfg.command = "verify-main";
            outcome = addcomb::run_verify_main(cfg);
        } else if (vmatrix->parsed()) {
            cfg.command = "verify-matrix";
            outcome = addcomb::run_verify_matrix(cfg);
        } else if (vall->parsed()) {
            cfg.command = "verify-all";
            outcome = addcomb::run_verify_all(cfg);
        } else {
            std::cerr << "no subcommand\n";
            return 2;
        }
        return emit(outcome, out);
    } catch (const addcomb::input_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const addcomb::budget_error& e) {
        std::cerr << "budget refusal: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
