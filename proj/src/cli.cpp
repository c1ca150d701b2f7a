#include "chordpower/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordpower/atlas.hpp"
#include "chordpower/chord_spec.hpp"
#include "chordpower/emotion.hpp"
#include "chordpower/error.hpp"
#include "chordpower/synth.hpp"

namespace chordpower::cli {

std::string round2(double value) {
  const auto hundredths = static_cast<long long>(std::round(value * 100.0));
  const long long magnitude = hundredths < 0 ? -hundredths : hundredths;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%lld.%02lld", hundredths < 0 ? "-" : "", magnitude / 100, magnitude % 100);
  return buf;
}

namespace {

using ordered_json = nlohmann::ordered_json;

struct Output {
  std::string path;  // empty: stdout
};

void emit(const Output& dest, std::ostream& out, const std::string& text) {
  if (dest.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(dest.path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + dest.path + " for writing");
  file << text;
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "write failed: " + dest.path);
}

std::string flags_text(Flags f) {
  const auto joined = join(f, ',');
  return joined.empty() ? "none" : joined;
}

ordered_json flags_json(Flags f) {
  auto a = ordered_json::array();
  for (Flag flag : f.list()) a.push_back(to_string(flag));
  return a;
}

std::string analyze_text(const std::string& input, const EmotionReport& r) {
  std::ostringstream s;
  s << "chord " << input << '\n'
    << "direct=" << to_string(r.proportions.direct) << " inverse=" << to_string(r.proportions.inverse)
    << " group=" << to_string(r.proportions.group) << '\n'
    << "classification=" << to_string(r.classification) << " pwe=" << round2(r.pwe)
    << " pwe2=" << round2(r.pwe2) << " utilitarian=" << round2(r.utilitarian) << '\n'
    << "flags=" << flags_text(r.flags) << '\n';
  return s.str();
}

std::string analyze_json(const std::string& input, const EmotionReport& r) {
  ordered_json j;
  j["input"] = input;
  j["direct"] = to_string(r.proportions.direct);
  j["inverse"] = to_string(r.proportions.inverse);
  j["group"] = to_string(r.proportions.group);
  j["classification"] = to_string(r.classification);
  j["pwe"] = r.pwe;
  j["pwe2"] = r.pwe2;
  j["utilitarian"] = r.utilitarian;
  j["flags"] = flags_json(r.flags);
  return j.dump() + "\n";
}

std::string records_text(const std::vector<TriadRecord>& records, const std::vector<std::string>* labels) {
  std::ostringstream s;
  auto row = [&](const std::string& label, const std::string& direct, const std::string& inverse,
                 const std::string& group, const std::string& cls, const std::string& pwe,
                 const std::string& pwe2, const std::string& util, const std::string& flags) {
    if (labels) s << std::left << std::setw(10) << label;
    s << std::left << std::setw(12) << direct << std::setw(16) << inverse << std::setw(6) << group
      << std::setw(15) << cls << std::right << std::setw(7) << pwe << std::setw(8) << pwe2 << std::setw(8)
      << util << "  " << flags << '\n';
  };
  row("chord", "direct", "inverse", "group", "class", "pwe", "pwe2", "util", "flags");
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    row(labels ? (*labels)[i] : "", to_string(r.direct), to_string(r.inverse), std::string(to_string(r.group)),
        std::string(to_string(r.classification)), round2(r.pwe), round2(r.pwe2), round2(r.utilitarian),
        flags_text(r.flags));
  }
  return s.str();
}

void add_rationalizer_flags(CLI::App* cmd, RationalizationConfig& cfg) {
  cmd->add_option("--tolerance-cents", cfg.tolerance_cents, "Rationalizer tolerance in cents")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-component", cfg.max_component, "Largest numerator/denominator allowed")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{1} << 40));
  cmd->add_option("--reference-freq", cfg.reference_freq, "Frequency of A4 in Hz")->check(CLI::PositiveNumber);
}

void add_synth_flags(CLI::App* cmd, SynthConfig& cfg, std::string& timbre) {
  cmd->add_option("--base-freq", cfg.base_freq, "Hz of the lowest voice");
  cmd->add_option("--duration", cfg.duration_s, "Seconds per chord");
  cmd->add_option("--sample-rate", cfg.sample_rate, "Samples per second");
  cmd->add_option("--timbre", timbre, "pure or harmonic")->check(CLI::IsMember({"pure", "harmonic"}));
  cmd->add_option("--partials", cfg.partial_count, "Partials per voice (harmonic timbre)");
  cmd->add_option("--rolloff-db", cfg.rolloff_db_per_partial, "dB drop per partial (harmonic timbre)");
  cmd->add_option("--fade-ms", cfg.fade_ms, "Fade in/out length in ms");
  cmd->add_option("--peak", cfg.peak, "Peak sample magnitude in (0, 1]");
}

std::string default_wav_name(const Chord& chord) {
  auto name = to_string(direct_proportion(chord));
  std::replace(name.begin(), name.end(), ':', '-');
  return name + ".wav";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Proportions and emotional power of musical chords", "chordpower"};
  app.require_subcommand(1);

  RationalizationConfig rcfg;
  SynthConfig scfg;
  std::string timbre = "pure";

  std::string chord_a, chord_b;
  bool as_json = false, as_csv = false, octave = false;
  int max_n = 0;
  double gap_s = 0.5;
  Output dest;

  auto* analyze_cmd = app.add_subcommand("analyze", "Classify a chord and compute its power");
  analyze_cmd->add_option("chord", chord_a, "4:5:6, /4:/5:/6, 1,5/4,3/2, C4,E4,G4 or 220Hz,...")->required();
  analyze_cmd->add_flag("--json", as_json, "Full-precision JSON output");
  add_rationalizer_flags(analyze_cmd, rcfg);

  auto* table_cmd = app.add_subcommand("table", "Reference table of chord powers");
  auto* table_csv = table_cmd->add_flag("--csv", as_csv, "CSV output");
  table_cmd->add_flag("--json", as_json, "JSON output")->excludes(table_csv);
  table_cmd->add_option("-o,--output", dest.path, "Write to FILE instead of stdout");

  auto* enum_cmd = app.add_subcommand("enumerate", "All coprime triads a <= b <= c <= N");
  enum_cmd->add_option("--max-n", max_n, "Largest proportion number")->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--octave", octave, "Keep only chords spanning at most an octave");
  auto* enum_csv = enum_cmd->add_flag("--csv", as_csv, "CSV output");
  enum_cmd->add_flag("--json", as_json, "JSON output")->excludes(enum_csv);
  enum_cmd->add_option("-o,--output", dest.path, "Write to FILE instead of stdout");

  auto* map_cmd = app.add_subcommand("map", "SVG map of the octave's triads");
  map_cmd->add_option("--max-n", max_n, "Largest proportion number")->required()->check(CLI::PositiveNumber);
  map_cmd->add_option("-o,--output", dest.path, "SVG file")->required();

  auto* synth_cmd = app.add_subcommand("synth", "Render a chord to WAV");
  synth_cmd->add_option("chord", chord_a, "Chord to render")->required();
  synth_cmd->add_option("-o,--output", dest.path, "WAV file (default: proportion name)");
  add_synth_flags(synth_cmd, scfg, timbre);
  add_rationalizer_flags(synth_cmd, rcfg);

  auto* compare_cmd = app.add_subcommand("compare", "Render two chords back to back");
  compare_cmd->add_option("chord_a", chord_a, "First chord")->required();
  compare_cmd->add_option("chord_b", chord_b, "Second chord")->required();
  compare_cmd->add_option("-o,--output", dest.path, "WAV file (default: compare.wav)");
  compare_cmd->add_option("--gap", gap_s, "Seconds of silence between the chords");
  add_synth_flags(compare_cmd, scfg, timbre);
  add_rationalizer_flags(compare_cmd, rcfg);

  auto* rat_cmd = app.add_subcommand("rationalize", "Approximate pitches by simple ratios");
  rat_cmd->add_option("pitches", chord_a, "Comma-separated notes, Hz, cents or ratios")->required();
  rat_cmd->add_flag("--json", as_json, "JSON output");
  add_rationalizer_flags(rat_cmd, rcfg);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 1;
  }
  scfg.timbre = timbre == "harmonic" ? Timbre::Harmonic : Timbre::Pure;

  try {
    if (analyze_cmd->parsed()) {
      const auto report = analyze(parse_chord_spec(chord_a, rcfg));
      emit(dest, out, as_json ? analyze_json(chord_a, report) : analyze_text(chord_a, report));
    } else if (table_cmd->parsed()) {
      const auto records = appendix_table();
      if (as_csv || as_json) {
        emit(dest, out, export_records(records, as_csv ? ExportFormat::Csv : ExportFormat::Json));
      } else {
        std::vector<std::string> labels;
        for (const auto& e : appendix_entries()) labels.push_back(e.label);
        emit(dest, out, records_text(records, &labels));
      }
    } else if (enum_cmd->parsed()) {
      const auto records = enumerate_triads(max_n, octave);
      if (as_csv || as_json) {
        emit(dest, out, export_records(records, as_csv ? ExportFormat::Csv : ExportFormat::Json));
      } else {
        emit(dest, out, records_text(records, nullptr));
      }
    } else if (map_cmd->parsed()) {
      const auto records = enumerate_triads(max_n, true);
      render_octave_map(records, std::filesystem::path(dest.path));
      out << "wrote " << dest.path << " (" << records.size() << " triads)\n";
    } else if (synth_cmd->parsed()) {
      const auto chord = parse_chord_spec(chord_a, rcfg);
      const auto samples = render_chord(chord, scfg);
      const auto path = dest.path.empty() ? default_wav_name(chord) : dest.path;
      write_wav(samples, scfg.sample_rate, std::filesystem::path(path));
      out << "wrote " << path << " (" << samples.size() << " samples at " << scfg.sample_rate << " Hz)\n";
    } else if (compare_cmd->parsed()) {
      const auto a = parse_chord_spec(chord_a, rcfg);
      const auto b = parse_chord_spec(chord_b, rcfg);
      const auto samples = render_comparison(a, b, gap_s, scfg);
      const auto path = dest.path.empty() ? std::string("compare.wav") : dest.path;
      write_wav(samples, scfg.sample_rate, std::filesystem::path(path));
      out << "wrote " << path << " (" << to_string(direct_proportion(a)) << " then "
          << to_string(direct_proportion(b)) << ", " << samples.size() << " samples)\n";
    } else if (rat_cmd->parsed()) {
      std::vector<PitchSpec> specs;
      std::vector<std::string> tokens;
      {
        std::stringstream ss(chord_a);
        for (std::string tok; std::getline(ss, tok, ',');) {
          tokens.push_back(tok);
          specs.push_back(parse_pitch_spec(tok));
        }
      }
      const auto chord = rationalize_chord(specs, rcfg);
      const auto ratios = relative_ratios(specs, rcfg);
      const bool exact = std::all_of(specs.begin(), specs.end(),
                                     [](const PitchSpec& s) { return std::holds_alternative<pitch::Exact>(s); });
      ordered_json voices = ordered_json::array();
      std::ostringstream text;
      for (std::size_t i = 0; i < specs.size(); ++i) {
        const Rational r = exact ? std::get<pitch::Exact>(specs[i]).value / chord.pitches().front()
                                 : best_rational(ratios[i], rcfg);
        const double err_cents = 1200.0 * std::log2(r.convert_to<double>() / ratios[i]);
        ordered_json v;
        v["spec"] = tokens[i];
        v["ratio"] = ratios[i];
        v["rational"] = r.str();
        v["cents_error"] = err_cents;
        voices.push_back(std::move(v));
        text << tokens[i] << " -> " << r.str() << " (" << round2(err_cents) << " cents)\n";
      }
      const auto direct = to_string(direct_proportion(chord));
      if (as_json) {
        ordered_json j;
        j["input"] = chord_a;
        j["voices"] = std::move(voices);
        j["direct"] = direct;
        emit(dest, out, j.dump() + "\n");
      } else {
        text << "chord " << direct << '\n';
        emit(dest, out, text.str());
      }
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return e.code() == ErrorCode::IoFailure ? 2 : 1;
  }
  return 0;
}

}  // namespace chordpower::cli
