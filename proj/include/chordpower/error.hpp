#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chordpower {

enum class ErrorCode {
  EmptyChord,
  NonPositivePitch,
  NonPositiveObjective,
  NotADyad,
  NoRationalWithinTolerance,
  UnparseableNote,
  MixedPitchUnits,
  AboveNyquist,
  InvalidConfig,
  InvalidRecord,
  SampleOutOfRange,
  ParseError,
  IoFailure,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Syntax error in a chord or pitch string; position is a 0-based offset.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& reason)
      : Error(ErrorCode::ParseError,
              "parse error at position " + std::to_string(position) + ": " + reason),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace chordpower
