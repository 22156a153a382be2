#pragma once

#include <stdexcept>
#include <string>

namespace propq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Broken structural invariant (bad group table, non-projection, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Dimension mismatch between operands.
struct ShapeError : Error {
  using Error::Error;
};

/// Out-of-range or malformed argument.
struct ParameterError : Error {
  using Error::Error;
};

/// Unreadable or inconsistent run configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace propq
