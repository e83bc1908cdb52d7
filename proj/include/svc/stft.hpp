#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <vector>

#include "svc/wave.hpp"

namespace svc {

// Hann analysis framing. The hop must divide the window length so the
// periodic Hann overlap-adds to a constant at 50% overlap.
struct StftParams {
  Eigen::Index window_length = 4096;
  Eigen::Index hop = 2048;

  Eigen::Index bins() const { return window_length / 2 + 1; }
  void validate() const;
};

// One-sided complex STFT tensor, one bins-by-frames matrix per channel.
// signal_length is the pre-padding sample count (0 when unknown) and is what
// istft uses to crop the synthesis back to the original extent.
struct Spectrogram {
  std::vector<Eigen::MatrixXcd> channels;
  StftParams params;
  double sample_rate = 24000.0;
  Eigen::Index signal_length = 0;

  std::size_t num_channels() const { return channels.size(); }
  Eigen::Index num_bins() const { return channels.empty() ? 0 : channels.front().rows(); }
  Eigen::Index num_frames() const { return channels.empty() ? 0 : channels.front().cols(); }
  void validate() const;

  // Mono view of one channel (copies the matrix, keeps framing metadata).
  Spectrogram channel(std::size_t index) const;
};

// Periodic Hann window of the given length.
Eigen::VectorXd hann_window(Eigen::Index length);

// Center frequency in Hz of every one-sided bin.
std::vector<double> bin_frequencies(const StftParams& params, double sample_rate);

// Analysis. The input is zero-padded by window_length - hop samples at both
// ends so every true sample gets full window coverage; frame f covers padded
// samples [f*hop, f*hop + window_length).
Spectrogram stft(const WaveBuffer& wave, const StftParams& params);

// Weighted overlap-add synthesis (Hann synthesis window, normalized by the
// accumulated squared window), the least-squares inverse of stft.
WaveBuffer istft(const Spectrogram& spec);

// Full linear convolution; output length = len(signal) + len(kernel) - 1.
// FFT-based, matches the direct summation to better than 1e-9 relative.
Eigen::VectorXd convolve(const Eigen::VectorXd& signal, const Eigen::VectorXd& kernel);

}  // namespace svc
