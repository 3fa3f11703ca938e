#pragma once

#include <stdexcept>
#include <string>

namespace netrisk {

/// Malformed input: bad market, bad parameters, invalid partition.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numeric route could not deliver the requested accuracy.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what, double achieved_error = -1.0)
      : std::runtime_error(what), achieved_error_(achieved_error) {}

  /// Best error estimate reached before giving up, or -1 if not applicable.
  double achieved_error() const noexcept { return achieved_error_; }

 private:
  double achieved_error_;
};

}  // namespace netrisk
