#include "uobs/limits.hpp"

#include <atomic>

#include "uobs/error.hpp"

namespace uobs {

namespace {
// Nanoseconds since the clock epoch; zero means no deadline.
std::atomic<long long> g_deadline{0};
}  // namespace

void set_global_deadline(std::optional<Clock::time_point> deadline) {
  g_deadline.store(deadline ? deadline->time_since_epoch().count() : 0);
}

std::optional<Clock::time_point> global_deadline() {
  long long raw = g_deadline.load();
  if (raw == 0) return std::nullopt;
  return Clock::time_point(Clock::duration(raw));
}

ScopedDeadline::ScopedDeadline(std::optional<std::chrono::milliseconds> budget) : saved_(global_deadline()) {
  if (budget) set_global_deadline(Clock::now() + *budget);
}

ScopedDeadline::~ScopedDeadline() { set_global_deadline(saved_); }

StepCounter::StepCounter(std::uint64_t limit, std::string what) : limit_(limit), what_(std::move(what)) {}

void StepCounter::tick() {
  ++steps_;
  if (limit_ && steps_ > limit_)
    throw BudgetExceeded(what_ + ": effort limit of " + std::to_string(limit_) + " steps reached");
  if ((steps_ & 1023) == 0) {
    long long raw = g_deadline.load(std::memory_order_relaxed);
    if (raw && Clock::now().time_since_epoch().count() > raw) throw BudgetExceeded(what_ + ": time budget exhausted");
  }
}

}  // namespace uobs
