#pragma once

#include <stdexcept>
#include <string>

namespace ciss {

// Base type for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid configuration: bad counts, impossible geometry, unknown enum names.
struct ConfigError : Error {
  using Error::Error;
};

// Raster or tensor dimensions do not match.
struct ShapeError : Error {
  using Error::Error;
};

// Task index or similar argument out of range.
struct RangeError : Error {
  using Error::Error;
};

// File format, corruption or version problems.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ciss
