#include "chordpower/proportion.hpp"

#include <algorithm>
#include <cmath>

#include "chordpower/error.hpp"

namespace chordpower {

namespace mp = boost::multiprecision;

Chord::Chord(std::vector<Rational> pitches) : pitches_(std::move(pitches)) {
  if (pitches_.empty()) {
    throw Error(ErrorCode::EmptyChord, "chord has no voices");
  }
  for (std::size_t i = 0; i < pitches_.size(); ++i) {
    if (pitches_[i] <= 0) {
      throw Error(ErrorCode::NonPositivePitch,
                  "pitch " + std::to_string(i) + " is not positive: " + pitches_[i].str());
    }
  }
  std::sort(pitches_.begin(), pitches_.end());
}

Chord Chord::scaled(const Rational& k) const {
  std::vector<Rational> out;
  out.reserve(pitches_.size());
  for (const auto& p : pitches_) out.push_back(p * k);
  return Chord(std::move(out));
}

Chord normalize_chord(std::vector<Rational> raw_pitches) { return Chord(std::move(raw_pitches)); }

Chord chord_of(std::initializer_list<long long> numbers) {
  std::vector<Rational> pitches;
  pitches.reserve(numbers.size());
  for (long long n : numbers) pitches.emplace_back(n);
  return Chord(std::move(pitches));
}

BigInt gcd_of(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) g = mp::gcd(g, v);
  return g;
}

BigInt lcm_of(std::span<const BigInt> values) {
  BigInt l = 1;
  for (const auto& v : values) l = mp::lcm(l, v);
  return l;
}

double log2_of(const BigInt& x) {
  const auto top = mp::msb(x);
  if (top < 1000) return std::log2(x.convert_to<double>());
  const auto shift = top - 60;
  const BigInt head = x >> shift;
  return std::log2(head.convert_to<double>()) + static_cast<double>(shift);
}

Proportion::Proportion(Direction direction, std::vector<BigInt> numbers)
    : direction_(direction), numbers_(std::move(numbers)) {
  if (numbers_.empty()) throw Error(ErrorCode::InvalidRecord, "empty proportion");
  for (const auto& n : numbers_) {
    if (n <= 0) throw Error(ErrorCode::InvalidRecord, "proportion numbers must be positive");
  }
  if (gcd_of(numbers_) != 1) throw Error(ErrorCode::InvalidRecord, "proportion is not coprime");
  const bool ordered = direction_ == Direction::Direct
                           ? std::is_sorted(numbers_.begin(), numbers_.end())
                           : std::is_sorted(numbers_.rbegin(), numbers_.rend());
  if (!ordered) throw Error(ErrorCode::InvalidRecord, "proportion numbers out of order");
}

BigInt Proportion::product() const {
  BigInt p = 1;
  for (const auto& n : numbers_) p *= n;
  return p;
}

std::string to_string(const Proportion& p) {
  std::string out;
  const char* prefix = p.direction() == Direction::Inverse ? "/" : "";
  for (std::size_t i = 0; i < p.numbers().size(); ++i) {
    if (i) out += ':';
    out += prefix;
    out += p.numbers()[i].str();
  }
  return out;
}

std::string_view to_string(Group g) {
  switch (g) {
    case Group::G1: return "G1";
    case Group::G2: return "G2";
    case Group::G3: return "G3";
  }
  return "?";
}

namespace {

std::vector<BigInt> integer_tuple(const Chord& chord) {
  std::vector<BigInt> denominators;
  denominators.reserve(chord.voices());
  for (const auto& p : chord.pitches()) denominators.push_back(mp::denominator(p));
  const BigInt scale = lcm_of(denominators);

  std::vector<BigInt> ints;
  ints.reserve(chord.voices());
  for (const auto& p : chord.pitches()) ints.push_back(mp::numerator(p) * (scale / mp::denominator(p)));
  const BigInt g = gcd_of(ints);
  for (auto& n : ints) n /= g;
  return ints;
}

// Inverse numbers are L / a_i with L the lcm of the direct numbers; their gcd
// is 1 whenever the direct tuple is coprime.
std::vector<BigInt> inverse_tuple(const std::vector<BigInt>& direct) {
  const BigInt l = lcm_of(direct);
  std::vector<BigInt> out;
  out.reserve(direct.size());
  for (const auto& a : direct) out.push_back(l / a);
  return out;
}

}  // namespace

Proportion direct_proportion(const Chord& chord) {
  return Proportion(Direction::Direct, integer_tuple(chord));
}

Proportion inverse_proportion(const Chord& chord) {
  return Proportion(Direction::Inverse, inverse_tuple(integer_tuple(chord)));
}

ProportionPair proportion_pair(const Chord& chord) {
  auto direct = integer_tuple(chord);
  auto inverse = inverse_tuple(direct);
  Proportion d(Direction::Direct, std::move(direct));
  Proportion i(Direction::Inverse, std::move(inverse));
  BigInt dp = d.product();
  BigInt ip = i.product();
  const Group g = dp < ip ? Group::G1 : (dp > ip ? Group::G2 : Group::G3);
  return ProportionPair{std::move(d), std::move(i), std::move(dp), std::move(ip), g};
}

Chord complement(const Chord& chord) {
  std::vector<Rational> out;
  out.reserve(chord.voices());
  for (const auto& p : chord.pitches()) out.push_back(1 / p);
  return Chord(std::move(out));
}

bool equivalent(const Chord& a, const Chord& b) {
  return a.voices() == b.voices() && direct_proportion(a) == direct_proportion(b);
}

Chord chord_of(const Proportion& p) {
  std::vector<Rational> pitches;
  pitches.reserve(p.voices());
  for (const auto& n : p.numbers()) {
    if (p.direction() == Direction::Direct) {
      pitches.emplace_back(n);
    } else {
      pitches.emplace_back(Rational(1) / Rational(n));
    }
  }
  return Chord(std::move(pitches));
}

}  // namespace chordpower
