#pragma once

#include <stdexcept>
#include <string>

namespace pcix {

// Bad input: nonpositive entries, ragged grids, broken reciprocity, n out of range.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// An iterative solver ran out of iterations.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

// A repair was requested on a matrix that has nothing to repair.
class AlreadyConsistentError : public std::logic_error {
 public:
  explicit AlreadyConsistentError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace pcix
