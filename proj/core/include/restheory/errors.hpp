#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace restheory {

enum class ErrorKind {
  AxiomViolation,
  NotAPreorder,
  NotOrderPreserving,
  DNotDownwardClosed,
  FNotMonotoneOnDomain,
  RequiresTheory,
  CarrierTooLarge,
  UncertifiedMediatingMap,
  ClosureMismatch,
  WindowClosureMismatch,
  BaseNotDeterministic,
  UncertifiedInput,
  WdcNotDownwardClosed,
  SNotDownwardClosed,
  AxisWindowMismatch,
  DimensionMismatch,
  WNotAChain,
  BadParameters,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

// Every domain failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace restheory
