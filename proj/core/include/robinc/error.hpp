#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace robinc {

using Complex = std::complex<double>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Precondition violated by the caller (bad parameters, NaN input, n < 2, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A root solve, curve projection or polish step on the set geometry failed.
class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Sampled certificate (Hölder pair, test-function bounds) rejected by its audit.
class AuditFailure : public Error {
 public:
  using Error::Error;
};

/// Optimizer gave up; the best iterate found so far travels with the exception.
class SolverFailure : public Error {
 public:
  SolverFailure(const std::string& what, std::vector<Complex> best_iterate)
      : Error(what), best_iterate_(std::move(best_iterate)) {}

  const std::vector<Complex>& best_iterate() const noexcept { return best_iterate_; }

 private:
  std::vector<Complex> best_iterate_;
};

}  // namespace robinc
