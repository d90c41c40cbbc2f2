#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace frabessel {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition or parameter window was violated, or the requested value
// lies on a pole or outside the supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A numerical procedure could not reach the requested accuracy. The best
// estimate found so far travels with the exception.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// An integrand or summand produced a non-finite value.
class EvaluationError : public Error {
 public:
  EvaluationError(const std::string& what, double location)
      : Error(what), location_(location) {}

  double location() const noexcept { return location_; }

 private:
  double location_;
};

}  // namespace frabessel
