#pragma once

#include <stdexcept>
#include <string>

namespace rootforge {

/// A documented precondition of an operation was violated by its input.
class ContractError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A closure computation grew past its configured cap.
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A set that must be contained in another is not.
class SubsetError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Numerical procedure failed to converge.
class ConvergenceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace rootforge
