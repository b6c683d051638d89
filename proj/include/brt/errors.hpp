#pragma once

#include <stdexcept>

namespace brt {

// Thrown for invalid configuration (unknown keys, out-of-range parameters).
// The CLI maps this to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for malformed or insufficient input data. CLI exit code 3.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown for numerical failures (overflowing recursions, degenerate
// variances, too many failed fits). CLI exit code 4.
struct NumericalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace brt
