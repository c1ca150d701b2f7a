#include <cmath>

#include "chordpower/reference.hpp"

namespace chordpower::reference {

std::vector<double> render_chord(const Chord& chord, const SynthConfig& cfg) {
  const auto partials = detail::partials_for(chord, cfg);
  const std::size_t total = detail::sample_count(cfg);
  const std::size_t fade = detail::fade_length(cfg, total);

  std::vector<double> out(total);
  double peak = 0.0;
  for (std::size_t n = 0; n < total; ++n) {
    out[n] = detail::fade_gain(n, total, fade) * detail::sample_at(partials, n, cfg.sample_rate);
    peak = std::max(peak, std::abs(out[n]));
  }
  if (peak > 0.0) {
    const double gain = cfg.peak / peak;
    for (double& s : out) s *= gain;
  }
  return out;
}

}  // namespace chordpower::reference
