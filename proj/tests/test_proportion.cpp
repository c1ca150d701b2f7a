// Unit tests: chord normalization, direct/inverse proportions, groups,
// complements.

#include <catch2/catch_amalgamated.hpp>

#include "chordpower/error.hpp"
#include "chordpower/proportion.hpp"
#include "support/oracles.hpp"

using namespace chordpower;

namespace {

std::vector<BigInt> ints(std::initializer_list<long long> v) {
  std::vector<BigInt> out;
  for (long long n : v) out.emplace_back(n);
  return out;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected chordpower::Error");
  return ErrorCode::IoFailure;
}

}  // namespace

TEST_CASE("normalize_chord sorts and validates", "[proportion]") {
  const auto c = normalize_chord({Rational(3, 2), Rational(1), Rational(5, 4)});
  CHECK(c.pitches() == std::vector<Rational>{Rational(1), Rational(5, 4), Rational(3, 2)});

  const auto single = normalize_chord({Rational(440)});
  CHECK(single.voices() == 1);

  CHECK(code_of([] { normalize_chord({Rational(1), Rational(-2)}); }) == ErrorCode::NonPositivePitch);
  CHECK(code_of([] { normalize_chord({Rational(0)}); }) == ErrorCode::NonPositivePitch);
  CHECK(code_of([] { normalize_chord({}); }) == ErrorCode::EmptyChord);
}

TEST_CASE("direct_proportion", "[proportion]") {
  CHECK(direct_proportion(normalize_chord({1, Rational(5, 4), Rational(3, 2)})).numbers() == ints({4, 5, 6}));
  CHECK(direct_proportion(chord_of({2, 2, 2})).numbers() == ints({1, 1, 1}));
  CHECK(direct_proportion(normalize_chord({Rational(1, 2), Rational(3, 4), Rational(5, 6)})).numbers() ==
        ints({6, 9, 10}));
  CHECK(to_string(direct_proportion(chord_of({4, 5, 6}))) == "4:5:6");
}

TEST_CASE("inverse_proportion", "[proportion]") {
  const auto inv = inverse_proportion(chord_of({4, 5, 6}));
  CHECK(inv.direction() == Direction::Inverse);
  CHECK(inv.numbers() == ints({15, 12, 10}));
  CHECK(to_string(inv) == "/15:/12:/10");
  CHECK(to_string(inverse_proportion(chord_of({16, 20, 25}))) == "/25:/20:/16");
  CHECK(to_string(inverse_proportion(chord_of({1, 1, 1}))) == "/1:/1:/1");
}

TEST_CASE("proportion_pair groups and main proportion", "[proportion]") {
  const auto major = proportion_pair(chord_of({4, 5, 6}));
  CHECK(major.group == Group::G1);
  CHECK(major.direct_product == 120);
  CHECK(major.inverse_product == 1800);
  CHECK(to_string(major.main()) == "4:5:6");
  CHECK(to_string(major.side()) == "/15:/12:/10");

  const auto minor = proportion_pair(chord_of({10, 12, 15}));
  CHECK(minor.group == Group::G2);
  CHECK(to_string(minor.main()) == "/6:/5:/4");
  CHECK(minor.inverse_product == 120);

  const auto fifth = proportion_pair(chord_of({4, 6, 9}));
  CHECK(fifth.group == Group::G3);
  CHECK(fifth.direct_product == 216);
  CHECK(fifth.inverse_product == 216);
  CHECK(fifth.main().direction() == Direction::Direct);

  CHECK(proportion_pair(chord_of({1, 1, 1})).group == Group::G3);
  CHECK(proportion_pair(chord_of({1, 1, 2})).group == Group::G1);  // doubled voices are legal
}

TEST_CASE("complement", "[proportion]") {
  CHECK(equivalent(complement(chord_of({4, 5, 6})), chord_of({10, 12, 15})));
  CHECK(equivalent(complement(chord_of({4, 6, 9})), chord_of({4, 6, 9})));
  CHECK(equivalent(complement(chord_of({3, 4, 8})), chord_of({3, 6, 8})));
}

TEST_CASE("equivalent", "[proportion]") {
  CHECK(equivalent(normalize_chord({1, Rational(5, 4), Rational(3, 2)}), chord_of({4, 5, 6})));
  CHECK_FALSE(equivalent(chord_of({4, 5, 6}), chord_of({10, 12, 15})));
  CHECK_FALSE(equivalent(chord_of({1, 2}), chord_of({1, 2, 4})));
}

TEST_CASE("Proportion rejects malformed tuples", "[proportion]") {
  CHECK(code_of([] { Proportion(Direction::Direct, ints({2, 4, 6})); }) == ErrorCode::InvalidRecord);
  CHECK(code_of([] { Proportion(Direction::Direct, ints({5, 4, 6})); }) == ErrorCode::InvalidRecord);
  CHECK(code_of([] { Proportion(Direction::Inverse, ints({10, 12, 15})); }) == ErrorCode::InvalidRecord);
  CHECK(code_of([] { Proportion(Direction::Direct, {}); }) == ErrorCode::InvalidRecord);
  CHECK(code_of([] { Proportion(Direction::Direct, ints({0, 1})); }) == ErrorCode::InvalidRecord);
}

TEST_CASE("large proportions do not overflow", "[proportion]") {
  // Pitches with 40-digit components; the products need ~400 bits.
  const BigInt big("1000000000000000000000000000000000000007");
  const Chord c({Rational(big), Rational(big + 1), Rational(big + 2), Rational(big * 3 + 1)});
  const auto pair = proportion_pair(c);
  const BigInt l = lcm_of(pair.direct.numbers());
  CHECK(pair.direct_product * pair.inverse_product == boost::multiprecision::pow(l, 4));
  double expected = 0.0;
  for (const auto& n : pair.direct.numbers()) expected += std::log2(n.convert_to<double>());
  CHECK(log2_of(pair.direct_product) == Catch::Approx(expected).epsilon(1e-12));
}

TEST_CASE("proportion properties over random chords", "[proportion][property]") {
  oracle::ChordGen gen(0x5eed0001);
  for (int trial = 0; trial < 400; ++trial) {
    const auto voices = gen.voices(1, 6);
    const auto raw = gen.rational_pitches(voices, 1000, 48);
    const Chord chord(raw);

    // Against the product-of-denominators oracle.
    const auto pair = proportion_pair(chord);
    REQUIRE(pair.direct.numbers() == oracle::direct_numbers(raw));
    REQUIRE(pair.inverse.numbers() == oracle::inverse_numbers(raw));
    REQUIRE(gcd_of(pair.direct.numbers()) == 1);
    REQUIRE(gcd_of(pair.inverse.numbers()) == 1);

    // Transposition invariance.
    const Chord moved = chord.scaled(gen.scale_factor());
    REQUIRE(direct_proportion(moved) == pair.direct);
    REQUIRE(inverse_proportion(moved) == pair.inverse);
    REQUIRE(equivalent(moved, chord));

    // Product identity.
    const BigInt l = lcm_of(pair.direct.numbers());
    REQUIRE(pair.direct_product * pair.inverse_product ==
            boost::multiprecision::pow(l, static_cast<unsigned>(voices)));

    // Reciprocity.
    const Chord comp = complement(chord);
    auto reversed = pair.inverse.numbers();
    std::reverse(reversed.begin(), reversed.end());
    REQUIRE(direct_proportion(comp).numbers() == reversed);
    REQUIRE(equivalent(complement(comp), chord));

    // G3 self-complement and group duality.
    const bool g3 = pair.group == Group::G3;
    REQUIRE(g3 == equivalent(chord, comp));
    REQUIRE(g3 == (pair.direct_product * pair.direct_product ==
                   boost::multiprecision::pow(l, static_cast<unsigned>(voices))));
    const auto comp_group = proportion_pair(comp).group;
    if (pair.group == Group::G1) REQUIRE(comp_group == Group::G2);
    if (pair.group == Group::G2) REQUIRE(comp_group == Group::G1);
    if (g3) REQUIRE(comp_group == Group::G3);
  }
}

TEST_CASE("every dyad and monad is self-complementary", "[proportion]") {
  oracle::ChordGen gen(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Chord dyad(gen.integer_pitches(2, 500));
    CHECK(proportion_pair(dyad).group == Group::G3);
  }
  CHECK(proportion_pair(chord_of({7})).group == Group::G3);
}
