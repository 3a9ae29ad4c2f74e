#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace leibniz {

/// Stable error codes. The numeric values are part of the CLI contract and
/// must not be renumbered.
enum class ErrorCode : int {
  DivisionByZero = 1,
  MixedFields = 2,
  BadIndex = 3,
  BadField = 4,
  NotInvertible = 5,
  NotMonomorphism = 6,
  NotUnipotent = 7,
  BadConstantTerm = 8,
  ZeroDiagonal = 9,
  NotInIdeal = 10,
  UnsolvableInCharP = 11,
  WindowTooSmall = 12,
  DimensionMismatch = 13,
  ParseError = 14,
};

std::string_view error_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the text parsers; position is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& message);

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when [d, theta] = target has no solution because some (k-1)
/// vanishes in the field. Carries every obstructed gamma index.
class CharPObstruction : public Error {
 public:
  explicit CharPObstruction(std::vector<std::size_t> indices);

  const std::vector<std::size_t>& indices() const noexcept { return indices_; }

 private:
  std::vector<std::size_t> indices_;
};

}  // namespace leibniz
