#include "svc/stft.hpp"

#include <cmath>
#include <numbers>

#include "svc/error.hpp"
#include "svc/fft.hpp"

namespace svc {

void StftParams::validate() const {
  if (window_length <= 0 || hop <= 0) throw Error("StftParams: sizes must be positive");
  if (window_length % 2 != 0) throw Error("StftParams: window_length must be even");
  if (window_length % hop != 0) throw Error("StftParams: hop must divide window_length");
}

void Spectrogram::validate() const {
  params.validate();
  if (channels.empty()) throw Error("Spectrogram: no channels");
  if (!(sample_rate > 0.0)) throw Error("Spectrogram: sample rate must be positive");
  const Eigen::Index rows = channels.front().rows();
  const Eigen::Index cols = channels.front().cols();
  if (rows != params.bins())
    throw Error("Spectrogram: bin count does not match window_length/2 + 1");
  for (std::size_t c = 0; c < channels.size(); ++c) {
    if (channels[c].rows() != rows || channels[c].cols() != cols)
      throw Error("Spectrogram: channel " + std::to_string(c) + " shape mismatch");
  }
}

Spectrogram Spectrogram::channel(std::size_t index) const {
  if (index >= channels.size()) throw Error("Spectrogram: channel index out of range");
  Spectrogram out;
  out.channels.push_back(channels[index]);
  out.params = params;
  out.sample_rate = sample_rate;
  out.signal_length = signal_length;
  return out;
}

Eigen::VectorXd hann_window(Eigen::Index length) {
  Eigen::VectorXd w(length);
  for (Eigen::Index i = 0; i < length; ++i)
    w[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                static_cast<double>(length));
  return w;
}

std::vector<double> bin_frequencies(const StftParams& params, double sample_rate) {
  std::vector<double> freqs(static_cast<std::size_t>(params.bins()));
  for (std::size_t k = 0; k < freqs.size(); ++k)
    freqs[k] = static_cast<double>(k) * sample_rate / static_cast<double>(params.window_length);
  return freqs;
}

Spectrogram stft(const WaveBuffer& wave, const StftParams& params) {
  params.validate();
  wave.validate();
  const Eigen::Index n = wave.num_samples();
  if (n == 0) throw Error("stft: empty input");

  const Eigen::Index length = params.window_length;
  const Eigen::Index hop = params.hop;
  const Eigen::Index pad = length - hop;
  const Eigen::Index padded = n + 2 * pad;
  if (padded < length) throw Error("stft: window longer than padded signal");
  const Eigen::Index frames = (padded - length + hop - 1) / hop + 1;

  const Eigen::VectorXd window = hann_window(length);
  RealFft fft(static_cast<std::size_t>(length));

  Spectrogram spec;
  spec.params = params;
  spec.sample_rate = wave.sample_rate;
  spec.signal_length = n;
  spec.channels.resize(wave.num_channels());

  Eigen::VectorXd frame(length);
  for (std::size_t c = 0; c < wave.num_channels(); ++c) {
    const Eigen::VectorXd& x = wave.channels[c];
    Eigen::MatrixXcd& out = spec.channels[c];
    out.resize(params.bins(), frames);
    for (Eigen::Index m = 0; m < frames; ++m) {
      const Eigen::Index start = m * hop;
      for (Eigen::Index i = 0; i < length; ++i) {
        const Eigen::Index p = start + i - pad;
        frame[i] = (p >= 0 && p < n) ? window[i] * x[p] : 0.0;
      }
      fft.forward(frame.data(), out.col(m).data());
    }
  }
  return spec;
}

WaveBuffer istft(const Spectrogram& spec) {
  spec.validate();
  const Eigen::Index frames = spec.num_frames();
  if (frames < 1) throw Error("istft: spectrogram has no frames");

  const Eigen::Index length = spec.params.window_length;
  const Eigen::Index hop = spec.params.hop;
  const Eigen::Index pad = length - hop;
  const Eigen::Index total = (frames - 1) * hop + length;

  const Eigen::VectorXd window = hann_window(length);
  Eigen::VectorXd norm = Eigen::VectorXd::Zero(total);
  for (Eigen::Index m = 0; m < frames; ++m)
    norm.segment(m * hop, length) += window.cwiseProduct(window);

  RealFft fft(static_cast<std::size_t>(length));
  Eigen::VectorXd frame(length);

  WaveBuffer out;
  out.sample_rate = spec.sample_rate;
  out.channels.resize(spec.num_channels());
  for (std::size_t c = 0; c < spec.num_channels(); ++c) {
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(total);
    for (Eigen::Index m = 0; m < frames; ++m) {
      fft.inverse(spec.channels[c].col(m).data(), frame.data());
      acc.segment(m * hop, length) += window.cwiseProduct(frame);
    }
    for (Eigen::Index p = 0; p < total; ++p) acc[p] /= std::max(norm[p], 1e-12);
    if (spec.signal_length > 0) {
      if (pad + spec.signal_length > total)
        throw Error("istft: signal_length inconsistent with frame count");
      out.channels[c] = acc.segment(pad, spec.signal_length);
    } else {
      out.channels[c] = std::move(acc);
    }
  }
  return out;
}

Eigen::VectorXd convolve(const Eigen::VectorXd& signal, const Eigen::VectorXd& kernel) {
  if (signal.size() == 0 || kernel.size() == 0) throw Error("convolve: empty input");
  const Eigen::Index out_n = signal.size() + kernel.size() - 1;
  std::size_t nfft = 1;
  while (nfft < static_cast<std::size_t>(out_n)) nfft <<= 1;

  RealFft fft(nfft);
  Eigen::VectorXd a = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nfft));
  Eigen::VectorXd b = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(nfft));
  a.head(signal.size()) = signal;
  b.head(kernel.size()) = kernel;

  Eigen::VectorXcd fa(fft.bins()), fb(fft.bins());
  fft.forward(a.data(), fa.data());
  fft.forward(b.data(), fb.data());
  fa.array() *= fb.array();

  Eigen::VectorXd full(static_cast<Eigen::Index>(nfft));
  fft.inverse(fa.data(), full.data());
  return full.head(out_n);
}

}  // namespace svc
