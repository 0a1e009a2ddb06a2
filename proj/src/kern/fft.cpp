#include "avsep/kern/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "avsep/kern/kernels.hpp"

namespace avsep::kern {

Fft::Fft(std::size_t n) : n_(n) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("Fft: size must be a power of two");
  rev_.resize(n);
  std::size_t log2n = 0;
  while ((std::size_t{1} << log2n) < n) ++log2n;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < log2n; ++b)
      if (i & (std::size_t{1} << b)) r |= std::size_t{1} << (log2n - 1 - b);
    rev_[i] = r;
  }
  tw_.resize(n / 2);
  tw_inv_.resize(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k) {
    const double ang = -2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
    tw_[k] = {std::cos(ang), std::sin(ang)};
    tw_inv_[k] = std::conj(tw_[k]);
  }
}

void Fft::transform(std::complex<double>* x, bool inv) const {
  for (std::size_t i = 0; i < n_; ++i)
    if (rev_[i] > i) std::swap(x[i], x[rev_[i]]);
  const auto& tw = inv ? tw_inv_ : tw_;
  for (std::size_t len = 2; len <= n_; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n_ / len;
    for (std::size_t base = 0; base < n_; base += len) {
      for (std::size_t k = 0; k < half; ++k) {
        const std::complex<double> w = tw[k * step];
        const std::complex<double> u = x[base + k];
        const std::complex<double> t = x[base + k + half] * w;
        x[base + k] = u + t;
        x[base + k + half] = u - t;
      }
    }
  }
}

void Fft::forward(std::complex<double>* x) const { transform(x, false); }

void Fft::inverse(std::complex<double>* x) const {
  transform(x, true);
  const double s = 1.0 / static_cast<double>(n_);
  kern::scale(s, reinterpret_cast<double*>(x), 2 * n_);
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

std::vector<double> fft_convolve(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t out_len = a.size() + b.size() - 1;
  const std::size_t n = next_pow2(out_len);
  Fft fft(n);
  std::vector<std::complex<double>> fa(n), fb(n);
  for (std::size_t i = 0; i < a.size(); ++i) fa[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) fb[i] = b[i];
  fft.forward(fa.data());
  fft.forward(fb.data());
  kern::cmul(reinterpret_cast<const double*>(fa.data()),
             reinterpret_cast<const double*>(fb.data()),
             reinterpret_cast<double*>(fa.data()), n);
  fft.inverse(fa.data());
  std::vector<double> out(out_len);
  for (std::size_t i = 0; i < out_len; ++i) out[i] = fa[i].real();
  return out;
}

}  // namespace avsep::kern
