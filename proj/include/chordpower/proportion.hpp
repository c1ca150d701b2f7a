#pragma once

// Exact chord proportions: direct/inverse coprime integer tuples, the three
// product groups, and complementary chords.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace chordpower {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// A set of M simultaneous pitches, held as exact positive rationals in
/// ascending order. Units are irrelevant; only ratios matter.
class Chord {
 public:
  /// Sorts a copy of `pitches`. Throws EmptyChord or NonPositivePitch.
  explicit Chord(std::vector<Rational> pitches);

  const std::vector<Rational>& pitches() const noexcept { return pitches_; }
  std::size_t voices() const noexcept { return pitches_.size(); }

  /// Every pitch multiplied by k (k > 0).
  Chord scaled(const Rational& k) const;

  friend bool operator==(const Chord&, const Chord&) = default;

 private:
  std::vector<Rational> pitches_;
};

Chord normalize_chord(std::vector<Rational> raw_pitches);

/// Convenience for integer proportions, e.g. chord_of({4, 5, 6}).
Chord chord_of(std::initializer_list<long long> numbers);

enum class Direction { Direct, Inverse };

/// A coprime integer tuple. Direct tuples are ascending ("4:5:6"); inverse
/// tuples list the reciprocal denominators voice by voice, which makes them
/// descending ("/15:/12:/10").
class Proportion {
 public:
  /// Throws InvalidRecord if the tuple is empty, non-positive, not coprime or
  /// not ordered for its direction.
  Proportion(Direction direction, std::vector<BigInt> numbers);

  Direction direction() const noexcept { return direction_; }
  const std::vector<BigInt>& numbers() const noexcept { return numbers_; }
  std::size_t voices() const noexcept { return numbers_.size(); }
  BigInt product() const;

  friend bool operator==(const Proportion&, const Proportion&) = default;

 private:
  Direction direction_;
  std::vector<BigInt> numbers_;
};

/// "4:5:6" or "/15:/12:/10".
std::string to_string(const Proportion& p);

enum class Group { G1, G2, G3 };

std::string_view to_string(Group g);

/// Both proportions of a chord with their products. The main proportion is the
/// one with the smaller product; for G3 it is the direct one.
struct ProportionPair {
  Proportion direct;
  Proportion inverse;
  BigInt direct_product;
  BigInt inverse_product;
  Group group;

  const Proportion& main() const noexcept { return group == Group::G2 ? inverse : direct; }
  const Proportion& side() const noexcept { return group == Group::G2 ? direct : inverse; }
};

Proportion direct_proportion(const Chord& chord);
Proportion inverse_proportion(const Chord& chord);
ProportionPair proportion_pair(const Chord& chord);

/// Reciprocal pitches: A:B:C becomes /C:/B:/A.
Chord complement(const Chord& chord);

/// True iff a = k*b for some rational k > 0.
bool equivalent(const Chord& a, const Chord& b);

/// The chord a proportion denotes: numbers as pitches for direct, their
/// reciprocals for inverse.
Chord chord_of(const Proportion& p);

BigInt lcm_of(std::span<const BigInt> values);
BigInt gcd_of(std::span<const BigInt> values);

/// log2 of a positive integer of any size.
double log2_of(const BigInt& x);

}  // namespace chordpower
