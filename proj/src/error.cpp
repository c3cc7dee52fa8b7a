#include "sftkit/error.hpp"

namespace sftkit {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroRowOrColumn: return "ZeroRowOrColumn";
    case ErrorKind::EmptyShift: return "EmptyShift";
    case ErrorKind::SinkOrSourceAfterPruning: return "SinkOrSourceAfterPruning";
    case ErrorKind::InadmissibleWord: return "InadmissibleWord";
    case ErrorKind::NegativeShiftOneSided: return "NegativeShiftOneSided";
    case ErrorKind::NotPeriodic: return "NotPeriodic";
    case ErrorKind::WordTooShort: return "WordTooShort";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::NotPositiveClass: return "NotPositiveClass";
    case ErrorKind::InvalidElement: return "InvalidElement";
    case ErrorKind::NotClosed: return "NotClosed";
    case ErrorKind::NotTailEquivalent: return "NotTailEquivalent";
    case ErrorKind::DegreeImpossible: return "DegreeImpossible";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::NotInSource: return "NotInSource";
    case ErrorKind::CocycleInconsistent: return "CocycleInconsistent";
    case ErrorKind::FloorOutOfRange: return "FloorOutOfRange";
    case ErrorKind::ZeroFloorValue: return "ZeroFloorValue";
    case ErrorKind::NotInCrossSection: return "NotInCrossSection";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::DegenerateN: return "DegenerateN";
    case ErrorKind::InvalidFlowData: return "InvalidFlowData";
    case ErrorKind::DepthExceeded: return "DepthExceeded";
    case ErrorKind::LeastPeriodViolation: return "LeastPeriodViolation";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownVerb: return "UnknownVerb";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace sftkit
