#pragma once

#include <complex>
#include <cstddef>

struct fftw_plan_s;

namespace svc {

// Real-to-complex FFT of a fixed size, backed by FFTW (double precision,
// FFTW_ESTIMATE plans so results are reproducible run to run).
// Instances are not thread-safe; create one per thread.
class RealFft {
 public:
  explicit RealFft(std::size_t size);
  ~RealFft();
  RealFft(const RealFft&) = delete;
  RealFft& operator=(const RealFft&) = delete;

  std::size_t size() const { return size_; }
  std::size_t bins() const { return size_ / 2 + 1; }

  // out must hold bins() entries.
  void forward(const double* in, std::complex<double>* out);
  // Inverse of forward, normalized by 1/size. out must hold size() entries.
  // The imaginary parts of the DC and Nyquist bins are ignored (treated as
  // zero) so the synthesis is always that of a real signal.
  void inverse(const std::complex<double>* in, double* out);

 private:
  std::size_t size_;
  fftw_plan_s* fwd_;
  fftw_plan_s* bwd_;
  double* real_buf_;
  std::complex<double>* cplx_buf_;
};

}  // namespace svc
