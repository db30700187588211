#pragma once

#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace addcomb {

/// Worker count: explicit request, else ADDCOMB_THREADS, else hardware.
int effective_threads(int requested);

/// Runs fn(0..n-1) across workers (strided). Rethrows the first exception.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn);

/// Sweep helper: produces per-index record groups in deterministic index
/// order regardless of scheduling.
template <typename Record, typename F>
std::vector<Record> run_indexed(std::size_t n, int threads, F&& f) {
    std::vector<std::vector<Record>> buckets(n);
    parallel_for(n, threads, [&](std::size_t i) { buckets[i] = f(i); });
    std::vector<Record> out;
    for (auto& b : buckets)
        for (auto& r : b) out.push_back(std::move(r));
    return out;
}

} // namespace addcomb
