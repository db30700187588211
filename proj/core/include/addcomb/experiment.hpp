#pragma once

#include "addcomb/budget.hpp"
#include "addcomb/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace addcomb {

/// One CLI invocation's worth of work. Same config + seed => byte-identical
/// JSON (timestamp aside): instances derive forked rng streams from their
/// index and records are sorted by canonical key before emission.
struct ExperimentConfig {
    std::string command;

    std::vector<std::string> sets;    // SetSpec strings
    std::vector<std::string> alphas;  // alpha expressions ("delta/2", "1/4", ...)
    std::vector<int> ks;
    std::vector<int> ds;
    std::string variant = "star";     // improved: star | tilde
    int d_max = 3;                    // gowers
    std::string mode;                 // energy: fast|certified; systems: enumerate|exact|fast

    std::vector<std::int64_t> moduli; // verify sweeps
    bool exhaustive = false;
    int random_instances = 0;

    std::int64_t bohr_modulus = 0;    // bohr subcommand
    std::vector<std::int64_t> bohr_freqs;
    std::string bohr_eps;
    bool contain = false;             // run containment propositions on --set inputs

    std::uint64_t seed = 1;
    Budget budget;
    int threads = 0;
};

/// exit_code: 0 all asserted checks pass, 1 at least one violation,
/// 2 invalid input / budget refusal.
struct RunOutcome {
    RunReport report;
    int exit_code = 0;
};

RunOutcome run_spectrum(const ExperimentConfig& cfg);
RunOutcome run_energy(const ExperimentConfig& cfg);
RunOutcome run_systems(const ExperimentConfig& cfg);
RunOutcome run_gowers(const ExperimentConfig& cfg);
RunOutcome run_chang(const ExperimentConfig& cfg);
RunOutcome run_improved(const ExperimentConfig& cfg);
RunOutcome run_bohr(const ExperimentConfig& cfg);
RunOutcome run_verify_main(const ExperimentConfig& cfg);
RunOutcome run_verify_matrix(const ExperimentConfig& cfg);
RunOutcome run_verify_all(const ExperimentConfig& cfg);

} // namespace addcomb
