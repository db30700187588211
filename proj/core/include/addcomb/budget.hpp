#pragma once

#include <chrono>
#include <cstdint>

namespace addcomb {

/// Per-instance guards for enumeration and transform paths.
/// max_tuples counts enumerated tuples / inner-loop evaluations and is
/// checked up front; max_seconds is polled inside the literal enumerators.
struct Budget {
    double max_tuples = 1e7;
    double max_seconds = 60.0;
};

/// Cooperative wall-clock guard for enumeration recursions.
class Deadline {
public:
    explicit Deadline(double seconds)
        : end_(std::chrono::steady_clock::now() +
               std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(seconds))) {}

    /// Cheap to call per leaf; the clock is read every 64k ticks.
    bool expired() {
        if ((++ticks_ & 0xFFFF) != 0) return false;
        return std::chrono::steady_clock::now() > end_;
    }

private:
    std::chrono::steady_clock::time_point end_;
    std::uint64_t ticks_ = 0;
};

} // namespace addcomb
