#pragma once

#include <stdexcept>
#include <string>

namespace fragile {

// Requested dimension exceeds the dense-storage caps.
class DimensionCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

// A numerical routine (eigensolver) did not converge.
class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent routes that must agree did not.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A state file or JSON document does not follow the state format.
class MalformedState : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotAnEigenstate : public std::runtime_error {
 public:
  NotAnEigenstate(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace fragile
