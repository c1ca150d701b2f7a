#pragma once

// Real-valued pitches (Hz, cents, 12-TET note names) to low-complexity exact
// ratios via Stern-Brocot descent.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "chordpower/proportion.hpp"

namespace chordpower {

struct RationalizationConfig {
  double tolerance_cents = 20.0;
  std::int64_t max_component = 64;  // cap on numerator and denominator
  double reference_freq = 440.0;    // A4
};

/// Throws InvalidConfig.
void validate(const RationalizationConfig& cfg);

/// |1200 log2((p/q) / x)|.
double cents_error(std::int64_t p, std::int64_t q, double x);

/// Among p/q with p, q <= max_component and within tolerance of x, the one of
/// least Tenney height log2(p*q). The minimizer is unique: it is the first
/// Stern-Brocot node inside the tolerance window. Throws
/// NoRationalWithinTolerance.
Rational best_rational(double x, const RationalizationConfig& cfg = {});

/// Hz of a scientific-pitch note name such as "Eb4" or "C#-1". Throws
/// UnparseableNote.
double note_to_freq(std::string_view name, const RationalizationConfig& cfg = {});

namespace pitch {
struct Frequency { double hz; };
struct Cents { double cents; };  // offset from the chord root
struct Note { std::string name; };
struct Exact { Rational value; };
}  // namespace pitch

using PitchSpec = std::variant<pitch::Frequency, pitch::Cents, pitch::Note, pitch::Exact>;

/// One token: "220Hz", "386c", "Eb4", "5/4", "3", "1.25".
PitchSpec parse_pitch_spec(std::string_view token);

/// Each spec as a real ratio to the lowest voice, in input order. Throws
/// MixedPitchUnits when Hz-valued and unitless specs are combined.
std::vector<double> relative_ratios(std::span<const PitchSpec> specs, const RationalizationConfig& cfg = {});

/// Each voice is approximated relative to the lowest one. All-exact input is
/// taken as is. Hz-valued specs (frequencies, notes) cannot be mixed with
/// unitless ones (cents, exact ratios): MixedPitchUnits.
Chord rationalize_chord(std::span<const PitchSpec> specs, const RationalizationConfig& cfg = {});

}  // namespace chordpower
