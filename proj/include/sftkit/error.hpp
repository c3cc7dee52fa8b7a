#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sftkit {

enum class ErrorKind {
  ZeroRowOrColumn,
  EmptyShift,
  SinkOrSourceAfterPruning,
  InadmissibleWord,
  NegativeShiftOneSided,
  NotPeriodic,
  WordTooShort,
  InvalidCode,
  NotPositiveClass,
  InvalidElement,
  NotClosed,
  NotTailEquivalent,
  DegreeImpossible,
  NotComposable,
  NotInSource,
  CocycleInconsistent,
  FloorOutOfRange,
  ZeroFloorValue,
  NotInCrossSection,
  InvalidPartition,
  DegenerateN,
  InvalidFlowData,
  DepthExceeded,
  LeastPeriodViolation,
  ParseError,
  UnknownVerb,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type; `kind()` is the
// machine-readable discriminator, `what()` carries the human message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sftkit
