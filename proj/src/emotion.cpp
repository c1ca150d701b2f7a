#include "chordpower/emotion.hpp"

#include <cmath>

#include "chordpower/error.hpp"

namespace chordpower {

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Major: return "major";
    case Classification::Minor: return "minor";
    case Classification::Symmetric: return "symmetric";
    case Classification::AestheticOnly: return "aesthetic_only";
  }
  return "?";
}

std::string_view to_string(Flag f) {
  switch (f) {
    case Flag::NearNeutral: return "near_neutral";
    case Flag::Saturation: return "saturation";
    case Flag::BeyondValidRange: return "beyond_valid_range";
    case Flag::ExtendedChord: return "extended_chord";
    case Flag::Dyad: return "dyad";
    case Flag::Monad: return "monad";
  }
  return "?";
}

std::vector<Flag> Flags::list() const {
  std::vector<Flag> out;
  for (Flag f : all) {
    if (has(f)) out.push_back(f);
  }
  return out;
}

std::string join(Flags flags, char sep) {
  std::string out;
  for (Flag f : flags.list()) {
    if (!out.empty()) out += sep;
    out += to_string(f);
  }
  return out;
}

double pwe_of(const Proportion& p) {
  const double magnitude = log2_of(p.product()) / static_cast<double>(p.voices());
  if (magnitude == 0.0) return 0.0;
  return p.direction() == Direction::Inverse ? -magnitude : magnitude;
}

EmotionReport analyze(const Chord& chord, const AnalysisConfig& cfg) {
  EmotionReport r{.proportions = proportion_pair(chord)};
  const auto& pair = r.proportions;
  const std::size_t m = chord.voices();

  r.pwe = pwe_of(pair.main());
  r.pwe2 = pwe_of(pair.side());
  r.relative_objective = std::exp2(r.pwe);

  if (m <= 2) {
    r.classification = Classification::AestheticOnly;
    r.utilitarian = 0.0;
    r.flags.set(m == 1 ? Flag::Monad : Flag::Dyad);
  } else if (pair.group == Group::G3) {
    r.classification = Classification::Symmetric;
    r.utilitarian = 0.0;
  } else {
    r.classification = pair.group == Group::G1 ? Classification::Major : Classification::Minor;
    const double sum = r.pwe + r.pwe2;
    if (std::abs(sum) < cfg.neutral_threshold) {
      r.flags.set(Flag::NearNeutral);
      r.utilitarian = sum / 2.0;
    } else {
      r.utilitarian = r.pwe;
    }
  }

  const double amplitude = std::abs(r.pwe);
  if (amplitude >= cfg.saturation) r.flags.set(Flag::Saturation);
  if (amplitude > cfg.valid_upper) r.flags.set(Flag::BeyondValidRange);
  if (m >= 4) r.flags.set(Flag::ExtendedChord);
  return r;
}

double relative_objective_power(double s0, double s1) {
  if (!(s0 > 0.0) || !(s1 > 0.0)) {
    throw Error(ErrorCode::NonPositiveObjective, "objective values must be positive");
  }
  return std::log2(s1 / s0);
}

double scaled_emotion(const SituationParams& params) {
  if (!(params.need_factor >= 0.0)) {
    throw Error(ErrorCode::InvalidConfig, "need factor must be non-negative");
  }
  return params.need_factor * relative_objective_power(params.s0, params.s1);
}

double harmonic_distance(const Chord& dyad) {
  if (dyad.voices() != 2) {
    throw Error(ErrorCode::NotADyad, "harmonic distance needs exactly two voices, got " +
                                         std::to_string(dyad.voices()));
  }
  return log2_of(direct_proportion(dyad).product());
}

}  // namespace chordpower
