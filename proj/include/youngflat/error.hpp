#pragma once

#include <stdexcept>
#include <string>

namespace youngflat {

enum class ErrorKind {
  InvalidRemoval,
  NotAStrip,
  ShapeError,
  DegreeMismatch,
  DimensionMismatch,
  SyntaxError,
  IndexError,
  NotHomogeneous,
  DegenerateInput,
  ZeroDenominator,
  FormatError,
};

const char* to_string(ErrorKind kind);

/// Single exception type for every contract violation in the library; the kind
/// lets callers (the CLI in particular) map failures onto exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace youngflat
