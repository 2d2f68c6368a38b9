#pragma once

#include <stdexcept>
#include <string>

namespace hcmc {

/// A precondition on an argument was violated (range, sign, zero class, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input is geometrically degenerate: a point on or numerically at the ideal
/// boundary, a zero-length edge, a face violating the triangle inequality.
class DegenerateInput : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation would overflow (cosh of a large argument).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace hcmc
