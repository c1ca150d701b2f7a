#include <cmath>
#include <fstream>
#include <ostream>

#include "chordpower/error.hpp"
#include "chordpower/synth.hpp"

namespace chordpower {

namespace {

void put_u16(std::vector<std::uint8_t>& b, std::uint16_t v) {
  b.push_back(static_cast<std::uint8_t>(v & 0xff));
  b.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& b, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) b.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& b, const char (&tag)[5]) { b.insert(b.end(), tag, tag + 4); }

}  // namespace

std::vector<std::uint8_t> encode_wav(std::span<const double> samples, int sample_rate) {
  if (sample_rate <= 0) throw Error(ErrorCode::InvalidConfig, "sample rate must be positive");
  constexpr std::uint16_t channels = 1;
  constexpr std::uint16_t bits = 16;
  constexpr std::uint16_t block_align = channels * bits / 8;
  const auto data_bytes = static_cast<std::uint32_t>(samples.size() * block_align);

  std::vector<std::uint8_t> b;
  b.reserve(44 + data_bytes);
  put_tag(b, "RIFF");
  put_u32(b, 36 + data_bytes);
  put_tag(b, "WAVE");
  put_tag(b, "fmt ");
  put_u32(b, 16);
  put_u16(b, 1);  // PCM
  put_u16(b, channels);
  put_u32(b, static_cast<std::uint32_t>(sample_rate));
  put_u32(b, static_cast<std::uint32_t>(sample_rate) * block_align);
  put_u16(b, block_align);
  put_u16(b, bits);
  put_tag(b, "data");
  put_u32(b, data_bytes);

  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double s = samples[i];
    if (!(std::abs(s) <= 1.0)) {
      throw Error(ErrorCode::SampleOutOfRange, "sample " + std::to_string(i) + " outside [-1, 1]");
    }
    const auto q = static_cast<std::int16_t>(std::lround(s * 32767.0));
    put_u16(b, static_cast<std::uint16_t>(q));
  }
  return b;
}

void write_wav(std::span<const double> samples, int sample_rate, std::ostream& out) {
  const auto bytes = encode_wav(samples, sample_rate);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

void write_wav(std::span<const double> samples, int sample_rate, const std::filesystem::path& destination) {
  const auto bytes = encode_wav(samples, sample_rate);
  std::ofstream file(destination, std::ios::binary | std::ios::trunc);
  if (!file) throw Error(ErrorCode::IoFailure, "cannot open " + destination.string() + " for writing");
  file.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  file.flush();
  if (!file) throw Error(ErrorCode::IoFailure, "write failed: " + destination.string());
}

}  // namespace chordpower
