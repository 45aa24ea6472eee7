#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graphfb {

enum class ErrorCode {
  InvalidParam,
  SelfLoop,
  NegativeWeight,
  Disconnected,
  DuplicateEdgeConflict,
  LengthMismatch,
  ShapeMismatch,
  ParseError,
  IoError,
  NotSymmetric,
  EigFailure,
  TooLarge,
  NotOrthogonal,
  DegenerateSpectrum,
  OutOfRange,
  TieViolation,
  Infeasible,
  InvalidDepth,
  ZeroSignal,
  HypothesisViolated,
};

std::string_view to_string(ErrorCode code);

/// True for failures of a numerical procedure, as opposed to bad input.
bool is_numeric_failure(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace graphfb
