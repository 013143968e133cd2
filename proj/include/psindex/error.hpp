#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace psindex {

enum class ErrorKind {
  DepthExhausted,
  NotElliptic,
  ShapeMismatch,
  ParseError,
  NotInvertible,
  BandwidthExceeded,
  NonIntegerWinding,
  NoPlateau,
  CapExceeded,
  NegativeValuation,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. Parse errors also carry a 1-based
/// line and column; both are 0 for the other kinds.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  Error(ErrorKind kind, const std::string& message, int line, int column);

  ErrorKind kind() const noexcept { return kind_; }
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  ErrorKind kind_;
  int line_ = 0;
  int column_ = 0;
};

}  // namespace psindex
