#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace symcode {

// Work limit for the potentially long-running searches. `steps` is an
// abstract operation count (search-tree nodes, enumerated words, ...);
// `seconds` is wall clock. Either limit alone can fire.
struct Budget {
    std::uint64_t max_steps = std::numeric_limits<std::uint64_t>::max();
    double max_seconds = std::numeric_limits<double>::infinity();

    static Budget unlimited() { return {}; }
    static Budget steps(std::uint64_t s) { return {s, std::numeric_limits<double>::infinity()}; }
    static Budget seconds(double s) { return {std::numeric_limits<std::uint64_t>::max(), s}; }
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class BudgetMeter {
  public:
    explicit BudgetMeter(const Budget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Returns true once a limit is hit. Wall clock is polled every 64k steps.
    bool spend(std::uint64_t steps = 1) {
        used_ += steps;
        if (used_ > budget_.max_steps) return true;
        if ((used_ >> 16) != last_poll_) {
            last_poll_ = used_ >> 16;
            if (elapsed_seconds() > budget_.max_seconds) return true;
        }
        return false;
    }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

    std::uint64_t used_steps() const { return used_; }

  private:
    Budget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t used_ = 0;
    std::uint64_t last_poll_ = 0;
};

}  // namespace symcode
