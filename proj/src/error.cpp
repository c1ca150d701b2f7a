#include "chordpower/error.hpp"

namespace chordpower {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyChord: return "EmptyChord";
    case ErrorCode::NonPositivePitch: return "NonPositivePitch";
    case ErrorCode::NonPositiveObjective: return "NonPositiveObjective";
    case ErrorCode::NotADyad: return "NotADyad";
    case ErrorCode::NoRationalWithinTolerance: return "NoRationalWithinTolerance";
    case ErrorCode::UnparseableNote: return "UnparseableNote";
    case ErrorCode::MixedPitchUnits: return "MixedPitchUnits";
    case ErrorCode::AboveNyquist: return "AboveNyquist";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::InvalidRecord: return "InvalidRecord";
    case ErrorCode::SampleOutOfRange: return "SampleOutOfRange";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoFailure: return "IoFailure";
  }
  return "Unknown";
}

}  // namespace chordpower
