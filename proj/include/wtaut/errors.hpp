#pragma once

#include <stdexcept>
#include <string>

namespace wtaut {

/// Malformed input to a mathematical operation (bad partition, non-square
/// matrix, non-symmetric polynomial, ...).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Request exceeds a configured computational cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad command-line or configuration input.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wtaut
