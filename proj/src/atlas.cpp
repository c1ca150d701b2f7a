#include "chordpower/atlas.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <omp.h>

namespace chordpower {

TriadRecord record_of(const Chord& chord, const AnalysisConfig& cfg) {
  EmotionReport r = analyze(chord, cfg);
  const auto& direct = r.proportions.direct.numbers();
  std::vector<double> cents;
  cents.reserve(direct.size() - 1);
  for (std::size_t i = 1; i < direct.size(); ++i) {
    const Rational ratio(direct[i], direct[0]);
    cents.push_back(1200.0 * std::log2(ratio.convert_to<double>()));
  }
  return TriadRecord{std::move(r.proportions.direct),
                     std::move(r.proportions.inverse),
                     r.proportions.group,
                     r.classification,
                     r.pwe,
                     r.pwe2,
                     r.utilitarian,
                     r.flags,
                     std::move(cents)};
}

std::vector<TriadRecord> enumerate_triads(int max_n, bool octave_only, const AnalysisConfig& cfg) {
  if (max_n < 1) return {};
  std::vector<std::vector<TriadRecord>> by_root(static_cast<std::size_t>(max_n));

  // Small roots carry the most (b, c) pairs.
#pragma omp parallel for schedule(dynamic, 1)
  for (int a = 1; a <= max_n; ++a) {
    auto& bucket = by_root[static_cast<std::size_t>(a - 1)];
    const int top = octave_only ? std::min(max_n, 2 * a) : max_n;
    for (int b = a; b <= top; ++b) {
      const int gab = std::gcd(a, b);
      for (int c = b; c <= top; ++c) {
        if (std::gcd(gab, c) != 1) continue;
        bucket.push_back(record_of(chord_of({a, b, c}), cfg));
      }
    }
  }

  std::vector<TriadRecord> out;
  for (auto& bucket : by_root) {
    out.insert(out.end(), std::make_move_iterator(bucket.begin()), std::make_move_iterator(bucket.end()));
  }
  return out;
}

const std::vector<AppendixEntry>& appendix_entries() {
  static const std::vector<AppendixEntry> entries = [] {
    std::vector<AppendixEntry> e;
    auto add = [&](std::string label, Chord chord, std::string commentary, bool symmetric) {
      e.push_back(AppendixEntry{std::move(label), std::move(chord), std::move(commentary), symmetric});
    };
    add("1:1:1", chord_of({1, 1, 1}), "unison", true);
    add("1:2:4", chord_of({1, 2, 4}), "", true);
    add("4:6:9", chord_of({4, 6, 9}), "\"fifth\" triad", true);
    add("16:20:25", chord_of({16, 20, 25}), "augmented triad", true);

    add("1:2:3", chord_of({1, 2, 3}), "", false);
    add("2:3:4", chord_of({2, 3, 4}), "", false);
    add("2:3:5", chord_of({2, 3, 5}), "", false);
    add("2:3:8", chord_of({2, 3, 8}), "", false);
    add("2:4:5", chord_of({2, 4, 5}), "", false);
    add("2:5:6", chord_of({2, 5, 6}), "", false);
    add("2:5:8", chord_of({2, 5, 8}), "", false);
    add("3:4:5", chord_of({3, 4, 5}), "", false);
    add("/3:/4:/5", complement(chord_of({3, 4, 5})), "", false);
    add("3:4:6", chord_of({3, 4, 6}), "", false);
    add("3:4:8", chord_of({3, 4, 8}), "", false);
    add("3:5:6", chord_of({3, 5, 6}), "", false);
    add("3:5:8", chord_of({3, 5, 8}), "", false);
    add("3:6:8", chord_of({3, 6, 8}), "", false);
    add("4:5:6", chord_of({4, 5, 6}), "major triad", false);
    add("/4:/5:/6", complement(chord_of({4, 5, 6})), "minor triad", false);
    add("4:5:8", chord_of({4, 5, 8}), "", false);
    add("5:6:8", chord_of({5, 6, 8}), "", false);
    return e;
  }();
  return entries;
}

std::vector<TriadRecord> appendix_table(const AnalysisConfig& cfg) {
  std::vector<TriadRecord> out;
  for (const auto& e : appendix_entries()) out.push_back(record_of(e.chord, cfg));
  return out;
}

}  // namespace chordpower
