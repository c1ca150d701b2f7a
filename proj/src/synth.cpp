#include "chordpower/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <omp.h>

#include "chordpower/error.hpp"

namespace chordpower {

void validate(const SynthConfig& cfg) {
  auto fail = [](const std::string& what) { return Error(ErrorCode::InvalidConfig, what); };
  if (!(cfg.base_freq > 0.0) || !std::isfinite(cfg.base_freq)) throw fail("base_freq must be positive");
  if (!(cfg.duration_s > 0.0) || !std::isfinite(cfg.duration_s)) throw fail("duration_s must be positive");
  if (cfg.sample_rate < 8000) throw fail("sample_rate must be at least 8000");
  if (cfg.partial_count < 1) throw fail("partial_count must be at least 1");
  if (!(cfg.rolloff_db_per_partial >= 0.0)) throw fail("rolloff_db_per_partial must be non-negative");
  if (!(cfg.fade_ms >= 0.0) || !std::isfinite(cfg.fade_ms)) throw fail("fade_ms must be non-negative");
  if (!(cfg.peak > 0.0 && cfg.peak <= 1.0)) throw fail("peak must be in (0, 1]");
}

std::vector<double> voice_frequencies(const Chord& chord, const SynthConfig& cfg) {
  const auto direct = direct_proportion(chord);
  const auto& n = direct.numbers();
  std::vector<double> out;
  out.reserve(n.size());
  for (const auto& v : n) out.push_back(cfg.base_freq * Rational(v, n.front()).convert_to<double>());
  return out;
}

namespace detail {

std::vector<Partial> partials_for(const Chord& chord, const SynthConfig& cfg) {
  validate(cfg);
  const double nyquist = cfg.sample_rate / 2.0;
  const int count = cfg.timbre == Timbre::Pure ? 1 : cfg.partial_count;
  std::vector<Partial> partials;
  for (double f : voice_frequencies(chord, cfg)) {
    if (f >= nyquist) {
      throw Error(ErrorCode::AboveNyquist, "voice at " + std::to_string(f) + " Hz is not below Nyquist (" +
                                               std::to_string(nyquist) + " Hz)");
    }
    for (int k = 1; k <= count; ++k) {
      const double fk = f * k;
      if (fk >= nyquist) break;
      const double amplitude = std::pow(10.0, -cfg.rolloff_db_per_partial * (k - 1) / 20.0);
      partials.push_back({fk, amplitude});
    }
  }
  return partials;
}

std::size_t sample_count(const SynthConfig& cfg) {
  return static_cast<std::size_t>(std::llround(cfg.duration_s * cfg.sample_rate));
}

std::size_t fade_length(const SynthConfig& cfg, std::size_t total) {
  const auto len = static_cast<std::size_t>(std::llround(cfg.fade_ms / 1000.0 * cfg.sample_rate));
  return std::min(len, total / 2);
}

double fade_gain(std::size_t n, std::size_t total, std::size_t fade_len) {
  if (fade_len == 0) return 1.0;
  const std::size_t from_edge = std::min(n, total - 1 - n);
  if (from_edge >= fade_len) return 1.0;
  return 0.5 * (1.0 - std::cos(std::numbers::pi * static_cast<double>(from_edge) / static_cast<double>(fade_len)));
}

double sample_at(std::span<const Partial> partials, std::size_t n, int sample_rate) {
  const double t = static_cast<double>(n) / sample_rate;
  double s = 0.0;
  for (const auto& p : partials) s += p.amplitude * std::sin(2.0 * std::numbers::pi * p.freq * t);
  return s;
}

}  // namespace detail

std::vector<double> render_chord(const Chord& chord, const SynthConfig& cfg) {
  const auto partials = detail::partials_for(chord, cfg);
  const std::size_t total = detail::sample_count(cfg);
  const std::size_t fade = detail::fade_length(cfg, total);
  std::vector<double> out(total);
  const auto count = static_cast<std::ptrdiff_t>(total);

  double peak = 0.0;
#pragma omp parallel for schedule(static) reduction(max : peak)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(i);
    const double s = detail::fade_gain(n, total, fade) * detail::sample_at(partials, n, cfg.sample_rate);
    out[n] = s;
    peak = std::max(peak, std::abs(s));
  }

  if (peak > 0.0) {
    const double gain = cfg.peak / peak;
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] *= gain;
  }
  return out;
}

std::vector<double> render_comparison(const Chord& a, const Chord& b, double gap_s, const SynthConfig& cfg) {
  if (!(gap_s >= 0.0) || !std::isfinite(gap_s)) throw Error(ErrorCode::InvalidConfig, "gap must be non-negative");
  auto out = render_chord(a, cfg);
  const auto second = render_chord(b, cfg);
  out.resize(out.size() + static_cast<std::size_t>(std::llround(gap_s * cfg.sample_rate)), 0.0);
  out.insert(out.end(), second.begin(), second.end());
  return out;
}

}  // namespace chordpower
