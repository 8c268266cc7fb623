#pragma once

#include <stdexcept>
#include <string>

namespace uobs {

// Malformed or out-of-domain input (bad file, loop edge, unknown family).
class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured size or effort cap was hit before a definite answer.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A class predicate turned out not to be closed under the chosen relation.
class NotClosed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Internal consistency check failed (two computations that must agree did not).
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace uobs
