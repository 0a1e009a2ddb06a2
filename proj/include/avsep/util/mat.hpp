#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace avsep::util {

// Dense row-major matrix of doubles. The workhorse container for
// spectrograms views, feature blocks and masks.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), v(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return v[r * cols + c]; }
  double* row(std::size_t r) { return v.data() + r * cols; }
  const double* row(std::size_t r) const { return v.data() + r * cols; }
  std::size_t size() const { return v.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }
};

inline void require_same_shape(const Mat& a, const Mat& b, const char* what) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(what) + ": shape mismatch");
}

// Row-major complex matrix (spectrograms).
struct CMat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::complex<double>> v;

  CMat() = default;
  CMat(std::size_t r, std::size_t c) : rows(r), cols(c), v(r * c) {}

  std::complex<double>& operator()(std::size_t r, std::size_t c) { return v[r * cols + c]; }
  const std::complex<double>& operator()(std::size_t r, std::size_t c) const {
    return v[r * cols + c];
  }
  std::complex<double>* row(std::size_t r) { return v.data() + r * cols; }
  const std::complex<double>* row(std::size_t r) const { return v.data() + r * cols; }
};

}  // namespace avsep::util
