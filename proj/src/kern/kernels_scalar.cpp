#include "kern/table.hpp"

// Reference implementations. Deliberately plain loops: these define the
// semantics the SIMD variants are tested against.
namespace avsep::kern {
namespace {

double dot_s(const double* a, const double* b, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_s(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i];
  return acc;
}

double sum_sq_s(const double* a, std::size_t n) {
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += a[i] * a[i];
  return acc;
}

void axpy_s(double a, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_s(double a, double* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void vadd_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] + b[i];
}

void vsub_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] - b[i];
}

void vmul_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = a[i] * b[i];
}

void vmla_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] += a[i] * b[i];
}

void cmul_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    dst[2 * i] = ar * br - ai * bi;
    dst[2 * i + 1] = ar * bi + ai * br;
  }
}

void cmla_s(const double* a, const double* b, double* dst, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    dst[2 * i] += ar * br - ai * bi;
    dst[2 * i + 1] += ar * bi + ai * br;
  }
}

void matvec_s(const double* w, const double* x, double* y, std::size_t rows,
              std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_s(w + r * cols, x, cols);
}

void matvec_t_s(const double* w, const double* g, double* dx, std::size_t rows,
                std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) axpy_s(g[r], w + r * cols, dx, cols);
}

void ger_s(const double* g, const double* x, double* dw, std::size_t rows,
           std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) axpy_s(g[r], x, dw + r * cols, cols);
}

}  // namespace

const KernelTable kScalarTable = {
    dot_s,  sum_s,  sum_sq_s, axpy_s, scale_s,  vadd_s,     vsub_s,
    vmul_s, vmla_s, cmul_s,   cmla_s, matvec_s, matvec_t_s, ger_s,
};

}  // namespace avsep::kern
