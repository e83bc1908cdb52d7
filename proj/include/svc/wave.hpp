#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <vector>

namespace svc {

// Multi-channel time-domain audio. All channels have equal length.
struct WaveBuffer {
  std::vector<Eigen::VectorXd> channels;
  double sample_rate = 24000.0;

  WaveBuffer() = default;
  WaveBuffer(std::size_t num_channels, Eigen::Index num_samples, double rate)
      : channels(num_channels, Eigen::VectorXd::Zero(num_samples)), sample_rate(rate) {}

  std::size_t num_channels() const { return channels.size(); }
  Eigen::Index num_samples() const { return channels.empty() ? 0 : channels.front().size(); }
  double duration_s() const { return static_cast<double>(num_samples()) / sample_rate; }

  // Throws Error if channels are empty, lengths differ, the rate is not
  // positive, or any sample is non-finite.
  void validate() const;
};

// Mono convenience wrapper.
WaveBuffer mono_wave(Eigen::VectorXd samples, double sample_rate);

enum class WavFormat { Float32, Pcm16 };

// RIFF WAV reader/writer. Supports PCM 16-bit and IEEE float-32, any channel
// count and sample rate. Unknown chunks are skipped on read.
WaveBuffer read_wav(const std::filesystem::path& path);
void write_wav(const std::filesystem::path& path, const WaveBuffer& wave,
               WavFormat format = WavFormat::Float32);

}  // namespace svc
