#pragma once

#include "addcomb/budget.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace addcomb {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::int64_t instances = 0;
    std::int64_t failures = 0;
    double seconds = 0.0;
    std::string detail;
};

struct AcceptanceOptions {
    std::uint64_t seed = 0x5EED5EEDull;
    int threads = 0;
    Budget budget;
};

/// The full verification battery: exhaustive small-N sweeps, randomized
/// instance families, oracle-equivalence checks and the determinism
/// contract. Every inequality is pinned at its stated tolerance. Progress
/// lines go to `progress` when given.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt,
                                            std::ostream* progress = nullptr);

} // namespace addcomb
