#pragma once

// Deterministic chord rendering and 16-bit PCM WAV output.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chordpower/proportion.hpp"

namespace chordpower {

enum class Timbre { Pure, Harmonic };

struct SynthConfig {
  double base_freq = 220.0;  // Hz of the lowest voice
  double duration_s = 2.0;
  int sample_rate = 44100;
  Timbre timbre = Timbre::Pure;
  int partial_count = 8;             // harmonic timbre only
  double rolloff_db_per_partial = 6.0;
  double fade_ms = 10.0;
  double peak = 0.9;
};

/// Throws InvalidConfig.
void validate(const SynthConfig& cfg);

/// base_freq * n_i / n_1 for each voice of the direct proportion.
std::vector<double> voice_frequencies(const Chord& chord, const SynthConfig& cfg);

/// Mono buffer of round(duration_s * sample_rate) samples. Every partial starts
/// at zero phase; raised-cosine fades at both ends; scaled so that
/// max |sample| == peak. Partials at or above Nyquist are dropped; a voice
/// whose fundamental is there throws AboveNyquist. Parallel over samples.
std::vector<double> render_chord(const Chord& chord, const SynthConfig& cfg = {});

/// a, gap_s of silence, b. Each chord segment is normalized on its own.
std::vector<double> render_comparison(const Chord& a, const Chord& b, double gap_s, const SynthConfig& cfg = {});

/// RIFF/WAVE, PCM 16-bit little-endian mono. Samples map to round(s * 32767),
/// half away from zero. Throws SampleOutOfRange for |s| > 1 or NaN.
std::vector<std::uint8_t> encode_wav(std::span<const double> samples, int sample_rate);
void write_wav(std::span<const double> samples, int sample_rate, std::ostream& out);
/// Throws IoFailure.
void write_wav(std::span<const double> samples, int sample_rate, const std::filesystem::path& destination);

namespace detail {

struct Partial {
  double freq;
  double amplitude;
};

// Shared by the parallel kernel and the serial reference so both evaluate the
// same expression per sample.
std::vector<Partial> partials_for(const Chord& chord, const SynthConfig& cfg);
std::size_t sample_count(const SynthConfig& cfg);
double fade_gain(std::size_t n, std::size_t total, std::size_t fade_len);
std::size_t fade_length(const SynthConfig& cfg, std::size_t total);
double sample_at(std::span<const Partial> partials, std::size_t n, int sample_rate);

}  // namespace detail

}  // namespace chordpower
