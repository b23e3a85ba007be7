#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace alber {

// Complex 1-D FFT of fixed size. Forward: X_j = sum_m x_m e^{-2 pi i jm/n},
// inverse: unnormalized with e^{+2 pi i jm/n}. Plans are created under a global
// lock; execution is thread-safe on distinct buffers.
class Fft {
 public:
  explicit Fft(std::size_t n);
  ~Fft();
  Fft(const Fft&) = delete;
  Fft& operator=(const Fft&) = delete;

  std::size_t size() const { return n_; }
  void forward(std::vector<std::complex<double>>& data) const;
  void inverse(std::vector<std::complex<double>>& data) const;

 private:
  std::size_t n_;
  void* forward_plan_;
  void* inverse_plan_;
};

}  // namespace alber
