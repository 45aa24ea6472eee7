#include "graphfb/error.hpp"

namespace graphfb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::DuplicateEdgeConflict: return "DuplicateEdgeConflict";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::EigFailure: return "EigFailure";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotOrthogonal: return "NotOrthogonal";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::TieViolation: return "TieViolation";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::InvalidDepth: return "InvalidDepth";
    case ErrorCode::ZeroSignal: return "ZeroSignal";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
  }
  return "Unknown";
}

bool is_numeric_failure(ErrorCode code) {
  switch (code) {
    case ErrorCode::EigFailure:
    case ErrorCode::DegenerateSpectrum:
    case ErrorCode::Infeasible:
    case ErrorCode::TieViolation:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::ZeroSignal:
      return true;
    default:
      return false;
  }
}

}  // namespace graphfb
