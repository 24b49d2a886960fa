#include "epsilon_lab/error.hpp"

namespace epsilon_lab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotADistribution: return "NotADistribution";
    case ErrorKind::NotStochastic: return "NotStochastic";
    case ErrorKind::NotUnifilar: return "NotUnifilar";
    case ErrorKind::MultipleRecurrentClasses: return "MultipleRecurrentClasses";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotPSD: return "NotPSD";
    case ErrorKind::SaturationInfeasible: return "SaturationInfeasible";
    case ErrorKind::OutputStateCorrespondenceAmbiguous: return "OutputStateCorrespondenceAmbiguous";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::MissingE: return "MissingE";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::ParamOutOfRange: return "ParamOutOfRange";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::TargetOutOfRange: return "TargetOutOfRange";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownFigure: return "UnknownFigure";
  }
  return "Unknown";
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownName:
    case ErrorKind::UnknownFigure:
      return 1;
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotADistribution:
    case ErrorKind::NotStochastic:
    case ErrorKind::NotUnifilar:
    case ErrorKind::MultipleRecurrentClasses:
    case ErrorKind::AlphabetMismatch:
    case ErrorKind::ParamOutOfRange:
    case ErrorKind::DegenerateParameters:
    case ErrorKind::TargetOutOfRange:
    case ErrorKind::ShapeMismatch:
      return 2;
    case ErrorKind::NonConvergence:
    case ErrorKind::NotPSD:
    case ErrorKind::SaturationInfeasible:
    case ErrorKind::OutputStateCorrespondenceAmbiguous:
    case ErrorKind::ZeroDivisor:
    case ErrorKind::MissingE:
    case ErrorKind::TooShort:
      return 3;
  }
  return 3;
}

}  // namespace epsilon_lab
