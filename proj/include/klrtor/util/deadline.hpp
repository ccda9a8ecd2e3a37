#pragma once
// Wall-clock budgets, checked cooperatively at loop boundaries.

#include <atomic>
#include <chrono>
#include <optional>
#include <stdexcept>
#include <string>

namespace klrtor {

class BudgetExhausted : public std::runtime_error {
public:
    BudgetExhausted() : std::runtime_error("time budget exhausted") {}
    explicit BudgetExhausted(const std::string& what) : std::runtime_error(what) {}
};

/// A single step would need more memory than allowed; treated like running out of time.
class MemoryBudgetExceeded : public BudgetExhausted {
public:
    explicit MemoryBudgetExceeded(const std::string& what) : BudgetExhausted(what) {}
};

/// Errors in the problem domain (bad permutations, violated preconditions).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Deadline {
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default; // unlimited
    explicit Deadline(double seconds)
        : end_(Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(seconds))) {}

    bool expired() const {
        if (cancelled_.load(std::memory_order_relaxed)) return true;
        return end_ && Clock::now() >= *end_;
    }
    void check() const {
        if (expired()) throw BudgetExhausted();
    }
    void cancel() { cancelled_.store(true); }

private:
    std::optional<Clock::time_point> end_;
    std::atomic<bool> cancelled_{false};
};

/// Null-safe check for optional deadline pointers.
inline void check_deadline(const Deadline* d) {
    if (d) d->check();
}

} // namespace klrtor
