#include "chordpower/rationalizer.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <string>
#include <type_traits>

#include "chordpower/error.hpp"

namespace chordpower {

void validate(const RationalizationConfig& cfg) {
  if (!(cfg.tolerance_cents > 0.0) || !std::isfinite(cfg.tolerance_cents)) {
    throw Error(ErrorCode::InvalidConfig, "tolerance_cents must be positive");
  }
  // p + q must not overflow during the descent.
  if (cfg.max_component < 1 || cfg.max_component > (std::int64_t{1} << 40)) {
    throw Error(ErrorCode::InvalidConfig, "max_component must be in [1, 2^40]");
  }
  if (!(cfg.reference_freq > 0.0) || !std::isfinite(cfg.reference_freq)) {
    throw Error(ErrorCode::InvalidConfig, "reference_freq must be positive");
  }
}

double cents_error(std::int64_t p, std::int64_t q, double x) {
  const double ratio = static_cast<double>(p) / static_cast<double>(q);
  return std::abs(1200.0 * std::log2(ratio / x));
}

Rational best_rational(double x, const RationalizationConfig& cfg) {
  validate(cfg);
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw Error(ErrorCode::NonPositivePitch, "cannot rationalize a non-positive value");
  }
  // Bounds of the current subtree: left = lp/lq, right = rp/rq (1/0 is +inf).
  std::int64_t lp = 0, lq = 1, rp = 1, rq = 0;
  for (;;) {
    const std::int64_t p = lp + rp;
    const std::int64_t q = lq + rq;
    if (p > cfg.max_component || q > cfg.max_component) {
      throw Error(ErrorCode::NoRationalWithinTolerance,
                  "no ratio with components <= " + std::to_string(cfg.max_component) +
                      " within " + std::to_string(cfg.tolerance_cents) + " cents of " +
                      std::to_string(x));
    }
    if (cents_error(p, q, x) <= cfg.tolerance_cents) return Rational(p, q);
    if (static_cast<double>(p) / static_cast<double>(q) < x) {
      lp = p;
      lq = q;
    } else {
      rp = p;
      rq = q;
    }
  }
}

double note_to_freq(std::string_view name, const RationalizationConfig& cfg) {
  auto bad = [&] { return Error(ErrorCode::UnparseableNote, "unparseable note name '" + std::string(name) + "'"); };
  if (name.empty()) throw bad();

  static constexpr int letter_offset[] = {9, 11, 0, 2, 4, 5, 7};  // A..G from C
  const char letter = name[0];
  if (letter < 'A' || letter > 'G') throw bad();
  int semitone = letter_offset[letter - 'A'];

  std::size_t pos = 1;
  if (pos < name.size() && (name[pos] == '#' || name[pos] == 'b')) {
    semitone += name[pos] == '#' ? 1 : -1;
    ++pos;
  }
  int octave = 0;
  const char* first = name.data() + pos;
  const char* last = name.data() + name.size();
  if (first == last) throw bad();
  auto [ptr, ec] = std::from_chars(first, last, octave);
  if (ec != std::errc{} || ptr != last) throw bad();

  const int midi = 12 * (octave + 1) + semitone;
  return cfg.reference_freq * std::exp2((midi - 69) / 12.0);
}

namespace {

bool ends_with_ci(std::string_view s, std::string_view suffix) {
  if (s.size() < suffix.size()) return false;
  return std::equal(suffix.begin(), suffix.end(), s.end() - static_cast<std::ptrdiff_t>(suffix.size()),
                    [](char a, char b) { return std::tolower(a) == std::tolower(b); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view token) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw ParseError(0, "not a number in '" + std::string(token) + "'");
  }
  return v;
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

Rational parse_exact(std::string_view s) {
  const auto bad = [&](std::size_t at) { return ParseError(at, "not an exact ratio: '" + std::string(s) + "'"); };
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num)) throw bad(0);
    if (!all_digits(den)) throw bad(slash + 1);
    const BigInt d(std::string{den});
    if (d == 0) throw bad(slash + 1);
    return Rational(BigInt(std::string{num}), d);
  }
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if (!(whole.empty() || all_digits(whole)) || !all_digits(frac)) throw bad(0);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    return Rational(BigInt(std::string{whole.empty() ? "0" : whole} + std::string{frac}), scale);
  }
  if (!all_digits(s)) throw bad(0);
  return Rational(BigInt(std::string{s}));
}

bool is_absolute(const PitchSpec& s) {
  return std::holds_alternative<pitch::Frequency>(s) || std::holds_alternative<pitch::Note>(s);
}

}  // namespace

PitchSpec parse_pitch_spec(std::string_view token) {
  const auto t = trim(token);
  if (t.empty()) throw ParseError(0, "empty pitch");
  if (ends_with_ci(t, "hz")) return pitch::Frequency{parse_real(trim(t.substr(0, t.size() - 2)), t)};
  if (t.back() == 'c') return pitch::Cents{parse_real(t.substr(0, t.size() - 1), t)};
  if (t.front() >= 'A' && t.front() <= 'G') {
    note_to_freq(t);
    return pitch::Note{std::string(t)};
  }
  return pitch::Exact{parse_exact(t)};
}

std::vector<double> relative_ratios(std::span<const PitchSpec> specs, const RationalizationConfig& cfg) {
  validate(cfg);
  if (specs.empty()) throw Error(ErrorCode::EmptyChord, "no pitches given");
  const bool absolute = is_absolute(specs.front());
  for (const auto& s : specs) {
    if (is_absolute(s) != absolute) {
      throw Error(ErrorCode::MixedPitchUnits, "cannot mix Hz-valued pitches with ratios or cents");
    }
  }

  std::vector<double> values;
  values.reserve(specs.size());
  for (const auto& s : specs) {
    const double v = std::visit(
        [&](const auto& spec) -> double {
          using T = std::decay_t<decltype(spec)>;
          if constexpr (std::is_same_v<T, pitch::Frequency>) return spec.hz;
          else if constexpr (std::is_same_v<T, pitch::Cents>) return std::exp2(spec.cents / 1200.0);
          else if constexpr (std::is_same_v<T, pitch::Note>) return note_to_freq(spec.name, cfg);
          else return spec.value.template convert_to<double>();
        },
        s);
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::NonPositivePitch, "voice " + std::to_string(values.size()) + " is not a positive pitch");
    }
    values.push_back(v);
  }
  const double lowest = *std::min_element(values.begin(), values.end());
  for (double& v : values) v /= lowest;
  return values;
}

Chord rationalize_chord(std::span<const PitchSpec> specs, const RationalizationConfig& cfg) {
  validate(cfg);
  const bool all_exact = std::all_of(specs.begin(), specs.end(),
                                     [](const PitchSpec& s) { return std::holds_alternative<pitch::Exact>(s); });
  if (!specs.empty() && all_exact) {
    std::vector<Rational> exact;
    for (const auto& s : specs) exact.push_back(std::get<pitch::Exact>(s).value);
    return Chord(std::move(exact));
  }

  const auto ratios = relative_ratios(specs, cfg);
  std::vector<Rational> out;
  out.reserve(ratios.size());
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    try {
      out.push_back(best_rational(ratios[i], cfg));
    } catch (const Error& e) {
      throw Error(e.code(), "voice " + std::to_string(i) + ": " + e.what());
    }
  }
  return Chord(std::move(out));
}

}  // namespace chordpower
