#pragma once

// Serial reference versions of the OpenMP kernels. Tests compare the parallel
// kernels against these; the benchmark times both.

#include <vector>

#include "chordpower/atlas.hpp"
#include "chordpower/synth.hpp"

namespace chordpower::reference {

std::vector<TriadRecord> enumerate_triads(int max_n, bool octave_only, const AnalysisConfig& cfg = {});

std::vector<double> render_chord(const Chord& chord, const SynthConfig& cfg = {});

}  // namespace chordpower::reference
