#include <numeric>

#include "chordpower/reference.hpp"

namespace chordpower::reference {

std::vector<TriadRecord> enumerate_triads(int max_n, bool octave_only, const AnalysisConfig& cfg) {
  std::vector<TriadRecord> out;
  for (int a = 1; a <= max_n; ++a) {
    for (int b = a; b <= max_n; ++b) {
      for (int c = b; c <= max_n; ++c) {
        if (octave_only && c > 2 * a) continue;
        if (std::gcd(std::gcd(a, b), c) != 1) continue;
        out.push_back(record_of(chord_of({a, b, c}), cfg));
      }
    }
  }
  return out;
}

}  // namespace chordpower::reference
