#include "svc/fft.hpp"

#include <fftw3.h>

#include <cstring>
#include <mutex>

#include "svc/error.hpp"

namespace svc {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

RealFft::RealFft(std::size_t size) : size_(size) {
  if (size == 0) throw Error("RealFft: size must be positive");
  real_buf_ = fftw_alloc_real(size);
  cplx_buf_ = reinterpret_cast<std::complex<double>*>(fftw_alloc_complex(size / 2 + 1));
  if (!real_buf_ || !cplx_buf_) throw Error("RealFft: allocation failed");
  std::lock_guard<std::mutex> lock(planner_mutex());
  fwd_ = fftw_plan_dft_r2c_1d(static_cast<int>(size), real_buf_,
                              reinterpret_cast<fftw_complex*>(cplx_buf_), FFTW_ESTIMATE);
  bwd_ = fftw_plan_dft_c2r_1d(static_cast<int>(size),
                              reinterpret_cast<fftw_complex*>(cplx_buf_), real_buf_,
                              FFTW_ESTIMATE);
  if (!fwd_ || !bwd_) throw Error("RealFft: plan creation failed");
}

RealFft::~RealFft() {
  std::lock_guard<std::mutex> lock(planner_mutex());
  fftw_destroy_plan(fwd_);
  fftw_destroy_plan(bwd_);
  fftw_free(real_buf_);
  fftw_free(cplx_buf_);
}

void RealFft::forward(const double* in, std::complex<double>* out) {
  std::memcpy(real_buf_, in, size_ * sizeof(double));
  fftw_execute(fwd_);
  std::memcpy(out, cplx_buf_, bins() * sizeof(std::complex<double>));
}

void RealFft::inverse(const std::complex<double>* in, double* out) {
  std::memcpy(cplx_buf_, in, bins() * sizeof(std::complex<double>));
  cplx_buf_[0] = {cplx_buf_[0].real(), 0.0};
  if (size_ % 2 == 0) cplx_buf_[bins() - 1] = {cplx_buf_[bins() - 1].real(), 0.0};
  fftw_execute(bwd_);
  const double scale = 1.0 / static_cast<double>(size_);
  for (std::size_t i = 0; i < size_; ++i) out[i] = real_buf_[i] * scale;
}

}  // namespace svc
