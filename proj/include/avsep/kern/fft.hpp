#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace avsep::kern {

// Iterative radix-2 FFT with precomputed twiddles. Sizes are powers of two,
// which covers every transform in this codebase (512-point analysis frames
// and pow2-padded fast convolution).
class Fft {
 public:
  explicit Fft(std::size_t n);

  std::size_t size() const { return n_; }

  void forward(std::complex<double>* x) const;
  // Inverse transform including the 1/n factor.
  void inverse(std::complex<double>* x) const;

 private:
  void transform(std::complex<double>* x, bool inv) const;

  std::size_t n_;
  std::vector<std::size_t> rev_;
  std::vector<std::complex<double>> tw_;      // forward twiddles
  std::vector<std::complex<double>> tw_inv_;  // conjugates
};

std::size_t next_pow2(std::size_t n);

// Linear convolution via pow2 FFT; result length is a.size()+b.size()-1.
std::vector<double> fft_convolve(const std::vector<double>& a,
                                 const std::vector<double>& b);

}  // namespace avsep::kern
