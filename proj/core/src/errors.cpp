#include "restheory/errors.hpp"

namespace restheory {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::NotAPreorder: return "NotAPreorder";
    case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
    case ErrorKind::DNotDownwardClosed: return "DNotDownwardClosed";
    case ErrorKind::FNotMonotoneOnDomain: return "FNotMonotoneOnDomain";
    case ErrorKind::RequiresTheory: return "RequiresTheory";
    case ErrorKind::CarrierTooLarge: return "CarrierTooLarge";
    case ErrorKind::UncertifiedMediatingMap: return "UncertifiedMediatingMap";
    case ErrorKind::ClosureMismatch: return "ClosureMismatch";
    case ErrorKind::WindowClosureMismatch: return "WindowClosureMismatch";
    case ErrorKind::BaseNotDeterministic: return "BaseNotDeterministic";
    case ErrorKind::UncertifiedInput: return "UncertifiedInput";
    case ErrorKind::WdcNotDownwardClosed: return "WdcNotDownwardClosed";
    case ErrorKind::SNotDownwardClosed: return "SNotDownwardClosed";
    case ErrorKind::AxisWindowMismatch: return "AxisWindowMismatch";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::WNotAChain: return "WNotAChain";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace restheory
