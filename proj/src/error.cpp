#include "recolor/error.hpp"

namespace recolor {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidGraph: return "InvalidGraph";
    case ErrorCode::InvalidColoring: return "InvalidColoring";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::NotEnoughColors: return "NotEnoughColors";
    case ErrorCode::NotPEO: return "NotPEO";
    case ErrorCode::NotWidth2: return "NotWidth2";
    case ErrorCode::OmegaTooLarge: return "OmegaTooLarge";
    case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
    case ErrorCode::InvalidOrdering: return "InvalidOrdering";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ImproperStart: return "ImproperStart";
    case ErrorCode::ImproperStep: return "ImproperStep";
    case ErrorCode::NoOpStep: return "NoOpStep";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::NoValidColor: return "NoValidColor";
    case ErrorCode::AuditViolation: return "AuditViolation";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what, std::optional<std::size_t> index)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
      code_(code),
      index_(index) {}

}  // namespace recolor
