#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>

namespace zsr {

/// Limits shared by every exhaustive search.
struct SearchLimits {
    std::uint64_t max_nodes = 100'000'000;
    double max_seconds = 60.0;
    int jobs = 1;
};

/// Thread-safe node/time accounting for one search call.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchLimits& limits)
        : max_nodes_(limits.max_nodes),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(limits.max_seconds))) {}

    /// Charges one node; returns false once any limit is hit.
    bool charge() {
        if (exhausted_.load(std::memory_order_relaxed)) return false;
        const auto n = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (n > max_nodes_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        if ((n & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_) {
            exhausted_.store(true, std::memory_order_relaxed);
            return false;
        }
        return true;
    }

    bool exhausted() const { return exhausted_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    std::uint64_t max_nodes_;
    std::chrono::steady_clock::time_point deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exhausted_{false};
};

}  // namespace zsr
