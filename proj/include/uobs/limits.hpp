#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

namespace uobs {

using Clock = std::chrono::steady_clock;

// Process-wide wall-clock deadline honoured by every exhaustive search.
// The CLI sets it from --budget-ms or the UOBS_BUDGET_MS environment variable.
void set_global_deadline(std::optional<Clock::time_point> deadline);
std::optional<Clock::time_point> global_deadline();

class ScopedDeadline {
 public:
  explicit ScopedDeadline(std::optional<std::chrono::milliseconds> budget);
  ~ScopedDeadline();
  ScopedDeadline(const ScopedDeadline&) = delete;
  ScopedDeadline& operator=(const ScopedDeadline&) = delete;

 private:
  std::optional<Clock::time_point> saved_;
};

// Step counter for one search. A zero limit means unlimited steps; the global
// deadline is checked either way. Throws BudgetExceeded when exhausted.
class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit = 0, std::string what = "search");
  void tick();
  std::uint64_t steps() const { return steps_; }

 private:
  std::uint64_t limit_;
  std::uint64_t steps_ = 0;
  std::string what_;
};

}  // namespace uobs
