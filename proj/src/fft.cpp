#include "alber/fft.hpp"

#include <fftw3.h>

#include <mutex>

#include "alber/error.hpp"

namespace alber {

namespace {
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n), forward_plan_(nullptr), inverse_plan_(nullptr) {
  if (n == 0) throw InputError("fft: size must be positive");
  std::lock_guard lock(planner_mutex());
  auto* buf = fftw_alloc_complex(n);
  const int in = static_cast<int>(n);
  forward_plan_ = fftw_plan_dft_1d(in, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  inverse_plan_ = fftw_plan_dft_1d(in, buf, buf, FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  if (!forward_plan_ || !inverse_plan_) throw NumericalError("fft: plan creation failed");
}

Fft::~Fft() {
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(static_cast<fftw_plan>(forward_plan_));
  fftw_destroy_plan(static_cast<fftw_plan>(inverse_plan_));
}

void Fft::forward(std::vector<std::complex<double>>& data) const {
  if (data.size() != n_) throw InputError("fft: buffer size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(forward_plan_), p, p);
}

void Fft::inverse(std::vector<std::complex<double>>& data) const {
  if (data.size() != n_) throw InputError("fft: buffer size mismatch");
  auto* p = reinterpret_cast<fftw_complex*>(data.data());
  fftw_execute_dft(static_cast<fftw_plan>(inverse_plan_), p, p);
}

}  // namespace alber
