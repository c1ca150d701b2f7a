#pragma once

// Emotional power of chords and of generic objective-function changes.
// All logarithms are base 2.

#include <cstdint>
#include <string>
#include <vector>

#include "chordpower/proportion.hpp"

namespace chordpower {

enum class Classification { Major, Minor, Symmetric, AestheticOnly };

std::string_view to_string(Classification c);

enum class Flag : std::uint8_t {
  NearNeutral = 1 << 0,
  Saturation = 1 << 1,
  BeyondValidRange = 1 << 2,
  ExtendedChord = 1 << 3,
  Dyad = 1 << 4,
  Monad = 1 << 5,
};

std::string_view to_string(Flag f);

/// Small value-type set of flags; iteration order is the enum order.
class Flags {
 public:
  static constexpr Flag all[] = {Flag::NearNeutral, Flag::Saturation, Flag::BeyondValidRange,
                                 Flag::ExtendedChord, Flag::Dyad, Flag::Monad};

  void set(Flag f) noexcept { bits_ |= static_cast<std::uint8_t>(f); }
  bool has(Flag f) const noexcept { return (bits_ & static_cast<std::uint8_t>(f)) != 0; }
  bool empty() const noexcept { return bits_ == 0; }
  std::vector<Flag> list() const;

  friend bool operator==(Flags, Flags) = default;

 private:
  std::uint8_t bits_ = 0;
};

/// Names joined with `sep`, e.g. "near_neutral;saturation". Empty set gives "".
std::string join(Flags flags, char sep);

/// Thresholds for the correction rule and the perception-range flags.
struct AnalysisConfig {
  double neutral_threshold = 0.50;  // |pwe + pwe2| strictly below this neutralizes
  double saturation = 2.4;          // |pwe| at or above
  double valid_upper = 3.0;         // |pwe| strictly above
};

struct EmotionReport {
  ProportionPair proportions;
  double pwe = 0.0;
  double pwe2 = 0.0;
  double utilitarian = 0.0;
  Classification classification = Classification::Symmetric;
  Flags flags{};
  double relative_objective = 1.0;  // geometric mean of the main proportion; pwe = log2 of it
};

/// (1/M) log2 of the product of the numbers, negated for inverse proportions.
double pwe_of(const Proportion& p);

EmotionReport analyze(const Chord& chord, const AnalysisConfig& cfg = {});

/// log2(s1/s0). Throws NonPositiveObjective.
double relative_objective_power(double s0, double s1);

struct SituationParams {
  double s0 = 1.0;
  double s1 = 1.0;
  double need_factor = 0.0;
};

/// need_factor * log2(s1/s0).
double scaled_emotion(const SituationParams& params);

/// Tenney harmonic distance log2(a*b) of a two-voice chord. Throws NotADyad.
double harmonic_distance(const Chord& dyad);

}  // namespace chordpower
