#pragma once

#include <stdexcept>
#include <string>

namespace irrlab {

/// Raised when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive oracle would exceed its configured budget.
/// Oracles never truncate silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace irrlab
