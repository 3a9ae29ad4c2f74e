#include "leibniz/error.hpp"

namespace leibniz {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedFields: return "MixedFields";
    case ErrorCode::BadIndex: return "BadIndex";
    case ErrorCode::BadField: return "BadField";
    case ErrorCode::NotInvertible: return "NotInvertible";
    case ErrorCode::NotMonomorphism: return "NotMonomorphism";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::BadConstantTerm: return "BadConstantTerm";
    case ErrorCode::ZeroDiagonal: return "ZeroDiagonal";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::UnsolvableInCharP: return "UnsolvableInCharP";
    case ErrorCode::WindowTooSmall: return "WindowTooSmall";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(message), code_(code) {}

ParseError::ParseError(std::size_t position, const std::string& message)
    : Error(ErrorCode::ParseError,
            message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

std::string obstruction_message(const std::vector<std::size_t>& indices) {
  std::string msg = "commutator equation unsolvable in positive characteristic at index";
  if (indices.size() > 1) msg += "es";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    msg += (i == 0 ? " " : ", ");
    msg += std::to_string(indices[i]);
  }
  return msg;
}

}  // namespace

CharPObstruction::CharPObstruction(std::vector<std::size_t> indices)
    : Error(ErrorCode::UnsolvableInCharP, obstruction_message(indices)),
      indices_(std::move(indices)) {}

}  // namespace leibniz
