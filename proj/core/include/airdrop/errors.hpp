#pragma once

#include <stdexcept>
#include <string>

namespace airdrop {

/// Bad configuration or malformed input (scenario files, invalid paths,
/// out-of-range parameters). Maps to exit code 1 in the CLI.
class ValidationError : public std::runtime_error {
public:
  explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A request the toolkit refuses on purpose, e.g. a brute-force instance
/// beyond the enumeration guard. Maps to exit code 2 in the CLI.
class CapabilityRefusal : public std::runtime_error {
public:
  explicit CapabilityRefusal(const std::string& msg) : std::runtime_error(msg) {}
};

/// Numerical failure (singular system, factorization breakdown).
/// Maps to exit code 3 in the CLI.
class NumericError : public std::runtime_error {
public:
  explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Cholesky factorization hit a non-positive pivot. `minor_index` is the
/// zero-based index of the offending leading principal minor.
class NotPositiveDefinite : public NumericError {
public:
  NotPositiveDefinite(const std::string& msg, int minor_index)
      : NumericError(msg), minor_index_(minor_index) {}
  int minor_index() const noexcept { return minor_index_; }

private:
  int minor_index_;
};

}  // namespace airdrop
