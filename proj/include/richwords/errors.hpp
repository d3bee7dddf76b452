#pragma once

#include <stdexcept>
#include <string>

namespace richwords {

/// Raised when an operation that is only defined for rich words gets a
/// non-rich input (UPS-factorization need not exist otherwise).
class NotRichError : public std::domain_error {
 public:
  explicit NotRichError(const std::string& what) : std::domain_error(what) {}
};

/// Raised when a floor cannot be resolved at the working precision; the
/// caller is expected to retry with more bits.
class PrecisionError : public std::runtime_error {
 public:
  explicit PrecisionError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed or version-mismatched report files.
class SchemaError : public std::runtime_error {
 public:
  explicit SchemaError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace richwords
