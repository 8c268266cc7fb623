#pragma once

#include <exception>
#include <mutex>

namespace uobs {

// Runs body(i) for i in [0, count) under OpenMP. Exceptions cannot cross an
// OpenMP region, so the first one is captured and rethrown afterwards; the
// remaining iterations are skipped cheaply.
template <class Body>
void parallel_for(long long count, bool parallel, Body&& body) {
  std::exception_ptr error;
  std::mutex lock;
  bool failed = false;
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (long long i = 0; i < count; ++i) {
    bool skip;
    {
      std::lock_guard<std::mutex> guard(lock);
      skip = failed;
    }
    if (skip) continue;
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> guard(lock);
      if (!failed) {
        failed = true;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace uobs
