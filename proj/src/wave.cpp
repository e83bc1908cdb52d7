#include "svc/wave.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "svc/error.hpp"

namespace svc {

void WaveBuffer::validate() const {
  if (channels.empty()) throw Error("WaveBuffer: no channels");
  if (!(sample_rate > 0.0)) throw Error("WaveBuffer: sample rate must be positive");
  const Eigen::Index n = channels.front().size();
  for (std::size_t c = 0; c < channels.size(); ++c) {
    if (channels[c].size() != n)
      throw Error("WaveBuffer: channel " + std::to_string(c) + " length mismatch");
    if (!channels[c].allFinite())
      throw Error("WaveBuffer: non-finite sample in channel " + std::to_string(c));
  }
}

WaveBuffer mono_wave(Eigen::VectorXd samples, double sample_rate) {
  WaveBuffer w;
  w.channels.push_back(std::move(samples));
  w.sample_rate = sample_rate;
  return w;
}

namespace {

constexpr std::uint16_t kFormatPcm = 1;
constexpr std::uint16_t kFormatFloat = 3;
constexpr std::uint16_t kFormatExtensible = 0xFFFE;

template <typename T>
T read_le(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw Error("WAV: unexpected end of file");
  return v;
}

template <typename T>
void write_le(std::ostream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

}  // namespace

WaveBuffer read_wav(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("WAV: cannot open " + path.string());

  char tag[4];
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "RIFF", 4) != 0) throw Error("WAV: not a RIFF file: " + path.string());
  read_le<std::uint32_t>(in);  // riff size, unused
  in.read(tag, 4);
  if (!in || std::memcmp(tag, "WAVE", 4) != 0) throw Error("WAV: not a WAVE file: " + path.string());

  std::uint16_t format = 0, num_channels = 0, bits = 0;
  std::uint32_t rate = 0;
  bool have_fmt = false;
  std::vector<char> data;

  while (in.read(tag, 4)) {
    const std::uint32_t chunk_size = read_le<std::uint32_t>(in);
    if (std::memcmp(tag, "fmt ", 4) == 0) {
      if (chunk_size < 16) throw Error("WAV: malformed fmt chunk");
      format = read_le<std::uint16_t>(in);
      num_channels = read_le<std::uint16_t>(in);
      rate = read_le<std::uint32_t>(in);
      read_le<std::uint32_t>(in);  // byte rate
      read_le<std::uint16_t>(in);  // block align
      bits = read_le<std::uint16_t>(in);
      std::uint32_t consumed = 16;
      if (format == kFormatExtensible && chunk_size >= 26) {
        read_le<std::uint16_t>(in);  // cbSize
        read_le<std::uint16_t>(in);  // valid bits
        read_le<std::uint32_t>(in);  // channel mask
        format = read_le<std::uint16_t>(in);  // first two bytes of the subformat GUID
        consumed = 26;
      }
      in.seekg(chunk_size - consumed + (chunk_size & 1), std::ios::cur);
      have_fmt = true;
    } else if (std::memcmp(tag, "data", 4) == 0) {
      data.resize(chunk_size);
      in.read(data.data(), chunk_size);
      if (!in) throw Error("WAV: truncated data chunk in " + path.string());
      if (chunk_size & 1) in.seekg(1, std::ios::cur);
    } else {
      in.seekg(chunk_size + (chunk_size & 1), std::ios::cur);
    }
  }
  if (!have_fmt) throw Error("WAV: missing fmt chunk in " + path.string());
  if (num_channels == 0) throw Error("WAV: zero channels in " + path.string());

  const bool is_float = format == kFormatFloat && bits == 32;
  const bool is_pcm16 = format == kFormatPcm && bits == 16;
  if (!is_float && !is_pcm16)
    throw Error("WAV: unsupported format (only PCM16 and float32): " + path.string());

  const std::size_t bytes_per_sample = bits / 8;
  const std::size_t frame_bytes = bytes_per_sample * num_channels;
  const std::size_t frames = data.size() / frame_bytes;

  WaveBuffer wave(num_channels, static_cast<Eigen::Index>(frames), static_cast<double>(rate));
  for (std::size_t f = 0; f < frames; ++f) {
    for (std::size_t c = 0; c < num_channels; ++c) {
      const char* p = data.data() + f * frame_bytes + c * bytes_per_sample;
      double v;
      if (is_float) {
        float x;
        std::memcpy(&x, p, 4);
        v = static_cast<double>(x);
      } else {
        std::int16_t x;
        std::memcpy(&x, p, 2);
        v = static_cast<double>(x) / 32768.0;
      }
      wave.channels[c][static_cast<Eigen::Index>(f)] = v;
    }
  }
  return wave;
}

void write_wav(const std::filesystem::path& path, const WaveBuffer& wave, WavFormat format) {
  wave.validate();
  const auto num_channels = static_cast<std::uint16_t>(wave.num_channels());
  const auto frames = static_cast<std::uint32_t>(wave.num_samples());
  const auto rate = static_cast<std::uint32_t>(std::lround(wave.sample_rate));
  const std::uint16_t bits = format == WavFormat::Float32 ? 32 : 16;
  const std::uint32_t frame_bytes = num_channels * bits / 8u;
  const std::uint32_t data_bytes = frames * frame_bytes;

  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("WAV: cannot write " + path.string());

  out.write("RIFF", 4);
  write_le<std::uint32_t>(out, 36 + data_bytes);
  out.write("WAVE", 4);
  out.write("fmt ", 4);
  write_le<std::uint32_t>(out, 16);
  write_le<std::uint16_t>(out, format == WavFormat::Float32 ? kFormatFloat : kFormatPcm);
  write_le<std::uint16_t>(out, num_channels);
  write_le<std::uint32_t>(out, rate);
  write_le<std::uint32_t>(out, rate * frame_bytes);
  write_le<std::uint16_t>(out, static_cast<std::uint16_t>(frame_bytes));
  write_le<std::uint16_t>(out, bits);
  out.write("data", 4);
  write_le<std::uint32_t>(out, data_bytes);

  for (std::uint32_t f = 0; f < frames; ++f) {
    for (std::uint16_t c = 0; c < num_channels; ++c) {
      const double v = wave.channels[c][static_cast<Eigen::Index>(f)];
      if (format == WavFormat::Float32) {
        const float x = static_cast<float>(v);
        out.write(reinterpret_cast<const char*>(&x), 4);
      } else {
        const double scaled = std::clamp(v * 32768.0, -32768.0, 32767.0);
        const auto x = static_cast<std::int16_t>(std::lround(scaled));
        out.write(reinterpret_cast<const char*>(&x), 2);
      }
    }
  }
  if (!out) throw Error("WAV: write failed for " + path.string());
}

}  // namespace svc
