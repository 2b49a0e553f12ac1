#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ctcost {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller-supplied value violates a documented precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A computation could not be carried out to the required accuracy.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// Two nearly degenerate eigenvalue groups are coupled by the Hamiltonian
/// derivative, so the counterdiabatic field is undefined.
class DegenerateCrossing : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Sorted-index level tracking met a true level crossing inside a sector.
class LevelCrossing : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class IntegrationDiverged : public NumericalError {
 public:
  IntegrationDiverged(std::size_t step, const std::string& what)
      : NumericalError("integration diverged at step " + std::to_string(step) + ": " + what),
        step_(step) {}

  std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

}  // namespace ctcost
