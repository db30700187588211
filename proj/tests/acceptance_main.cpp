// Acceptance suite: runs the full verification battery and prints one
// pass/fail line per criterion. Exits nonzero if any criterion fails.

#include "addcomb/acceptance.hpp"

#include <cstdlib>
#include <cstring>
#include <iostream>

int main(int argc, char** argv) {
    addcomb::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
            opt.seed = std::strtoull(argv[++i], nullptr, 10);
        else if (std::strcmp(argv[i], "--threads") == 0 && i + 1 < argc)
            opt.threads = std::atoi(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--seed S] [--threads T]\n";
            return 2;
        }
    }

    std::cout << "acceptance battery (seed " << opt.seed << ")\n";
    const auto results = addcomb::run_acceptance(opt, &std::cout);

    std::int64_t failed = 0, instances = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        instances += r.instances;
    }
    std::cout << (failed == 0 ? "ALL CRITERIA PASS" : "CRITERIA FAILED") << " (" << results.size()
              << " criteria, " << instances << " instances, " << failed << " failing)\n";
    return failed == 0 ? 0 : 1;
}
