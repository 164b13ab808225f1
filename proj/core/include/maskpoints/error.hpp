#pragma once

#include <stdexcept>
#include <string>

namespace maskpoints {

enum class ErrorKind {
  DegeneratePolygon,
  DimensionMismatch,
  EmptyMask,
  MalformedRle,
  EmptyBoundary,
  EmptyBand,
  InvalidCount,
  InfeasibleCount,
  OutOfBounds,
  CardinalityMismatch,
  DegenerateInput,
  InsufficientPoints,
  LayoutError,
  ConfigError,
  ParseError,
  SchemaError,
  IoError,
};

/// Library-wide exception. Every precondition violation carries a kind so
/// callers (and tests) can distinguish failure classes without string parsing.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

const char* to_string(ErrorKind kind) noexcept;

}  // namespace maskpoints
