#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace g2lab {

// Base class for all library errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Mixing forms or frames of different ambient dimension.
struct DimensionError : Error {
  using Error::Error;
};

// Malformed multi-index: out of range, repeated, or not strictly increasing.
struct IndexError : Error {
  using Error::Error;
};

// Metric operation requested on a frame not declared orthonormal.
struct MetricError : Error {
  using Error::Error;
};

// Exact linear solve failed a structural precondition (unbound parameters,
// rank defect, inconsistent system where consistency is required).
struct SolveError : Error {
  using Error::Error;
};

// Text input rejected; `position` is a byte offset into the original text.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t pos)
      : Error(what + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
  std::size_t position;
};

}  // namespace g2lab
