#pragma once

#include <stdexcept>
#include <string>

namespace epsilon_lab {

enum class ErrorKind {
  InvalidArgument,
  NotADistribution,
  NotStochastic,
  NotUnifilar,
  MultipleRecurrentClasses,
  AlphabetMismatch,
  NonConvergence,
  NotPSD,
  SaturationInfeasible,
  OutputStateCorrespondenceAmbiguous,
  ZeroDivisor,
  MissingE,
  UnknownName,
  ParamOutOfRange,
  DegenerateParameters,
  TargetOutOfRange,
  TooShort,
  ShapeMismatch,
  ParseError,
  UnknownFigure,
};

const char* to_string(ErrorKind kind);

// Process exit status for the command-line tool: 1 parse/usage, 2 validation,
// 3 computation.
int exit_code(ErrorKind kind);

// Base exception for every library failure. The kind is what callers switch on;
// the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace epsilon_lab
