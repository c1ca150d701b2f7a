#pragma once

// Triad enumeration, the reference table of chord powers, and dataset export
// (CSV, JSON, SVG octave map).

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "chordpower/emotion.hpp"

namespace chordpower {

/// One analyzed chord, ready for export or plotting. Produced only by
/// record_of, so it always agrees with analyze().
struct TriadRecord {
  Proportion direct;
  Proportion inverse;
  Group group;
  Classification classification;
  double pwe;
  double pwe2;
  double utilitarian;
  Flags flags;
  std::vector<double> cents_from_root;  // 1200 log2(n_i / n_1) for i >= 2
};

TriadRecord record_of(const Chord& chord, const AnalysisConfig& cfg = {});

/// All a <= b <= c <= max_n with gcd(a, b, c) = 1, sorted by (a, b, c).
/// octave_only keeps c/a <= 2. Parallel over a; the result does not depend on
/// the thread count.
std::vector<TriadRecord> enumerate_triads(int max_n, bool octave_only, const AnalysisConfig& cfg = {});

struct AppendixEntry {
  std::string label;       // as printed, e.g. "4:5:6" or "/4:/5:/6"
  Chord chord;
  std::string commentary;  // "", "unison", "major triad", ...
  bool symmetric_section;
};

/// The 22 reference chords: four symmetric triads, then eighteen consonant
/// ones, in table order.
const std::vector<AppendixEntry>& appendix_entries();

std::vector<TriadRecord> appendix_table(const AnalysisConfig& cfg = {});

enum class ExportFormat { Csv, Json };

/// CSV: header "direct,inverse,group,pwe,pwe2,utilitarian,flags", reals with six
/// decimals, flags ';'-joined. JSON: array of objects with the same keys, reals
/// in shortest round-trip form, flags as an array.
void export_records(std::span<const TriadRecord> records, ExportFormat format, std::ostream& out);
std::string export_records(std::span<const TriadRecord> records, ExportFormat format);
/// Throws IoFailure.
void export_records(std::span<const TriadRecord> records, ExportFormat format,
                    const std::filesystem::path& destination);

/// Scatter of triads on a 1000x1000 canvas: x = cents(b/a), y = cents(c/b),
/// both 0..1200. Circles for G1, squares for G2, triangles for G3; marker
/// radius grows with |pwe|. Non-triads throw InvalidRecord; points outside the
/// octave square are left out.
void render_octave_map(std::span<const TriadRecord> records, std::ostream& out);
std::string render_octave_map(std::span<const TriadRecord> records);
void render_octave_map(std::span<const TriadRecord> records, const std::filesystem::path& destination);

/// Fixed-point text with `decimals` digits, "C" formatting regardless of
/// locale; -0 prints as 0.
std::string format_fixed(double value, int decimals);

}  // namespace chordpower
