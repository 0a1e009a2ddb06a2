#include "kern/table.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma;
// nothing here runs unless the dispatcher saw AVX2 in CPUID.
namespace avsep::kern {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  __m128d sh = _mm_unpackhi_pd(lo, lo);
  return _mm_cvtsd_f64(_mm_add_sd(lo, sh));
}

double dot_v(const double* a, const double* b, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i + 4), _mm256_loadu_pd(b + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4)
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc0);
  double acc = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) acc += a[i] * b[i];
  return acc;
}

double sum_v(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i];
  return s;
}

double sum_sq_v(const double* a, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(a + i);
    acc = _mm256_fmadd_pd(x, x, acc);
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * a[i];
  return s;
}

void axpy_v(double a, const double* x, double* y, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
    _mm256_storeu_pd(y + i, r);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale_v(double a, double* x, std::size_t n) {
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) x[i] *= a;
}

void vadd_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] + b[i];
}

void vsub_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_sub_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] - b[i];
}

void vmul_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4)
    _mm256_storeu_pd(dst + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  for (; i < n; ++i) dst[i] = a[i] * b[i];
}

void vmla_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i),
                                _mm256_loadu_pd(dst + i));
    _mm256_storeu_pd(dst + i, r);
  }
  for (; i < n; ++i) dst[i] += a[i] * b[i];
}

// Complex multiply on interleaved (re,im): two complex lanes per __m256d.
inline __m256d cmul_lanes(__m256d x, __m256d y) {
  __m256d yr = _mm256_movedup_pd(y);                  // (br, br)
  __m256d yi = _mm256_permute_pd(y, 0xF);             // (bi, bi)
  __m256d xs = _mm256_permute_pd(x, 0x5);             // (ai, ar)
  return _mm256_fmaddsub_pd(x, yr, _mm256_mul_pd(xs, yi));
}

void cmul_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2)
    _mm256_storeu_pd(dst + 2 * i,
                     cmul_lanes(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i)));
  for (; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    dst[2 * i] = ar * br - ai * bi;
    dst[2 * i + 1] = ar * bi + ai * br;
  }
}

void cmla_v(const double* a, const double* b, double* dst, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    __m256d r = cmul_lanes(_mm256_loadu_pd(a + 2 * i), _mm256_loadu_pd(b + 2 * i));
    _mm256_storeu_pd(dst + 2 * i, _mm256_add_pd(r, _mm256_loadu_pd(dst + 2 * i)));
  }
  for (; i < n; ++i) {
    const double ar = a[2 * i], ai = a[2 * i + 1];
    const double br = b[2 * i], bi = b[2 * i + 1];
    dst[2 * i] += ar * br - ai * bi;
    dst[2 * i + 1] += ar * bi + ai * br;
  }
}

void matvec_v(const double* w, const double* x, double* y, std::size_t rows,
              std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot_v(w + r * cols, x, cols);
}

void matvec_t_v(const double* w, const double* g, double* dx, std::size_t rows,
                std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) axpy_v(g[r], w + r * cols, dx, cols);
}

void ger_v(const double* g, const double* x, double* dw, std::size_t rows,
           std::size_t cols) {
  for (std::size_t r = 0; r < rows; ++r) axpy_v(g[r], x, dw + r * cols, cols);
}

const KernelTable kAvx2Table = {
    dot_v,  sum_v,  sum_sq_v, axpy_v, scale_v,  vadd_v,     vsub_v,
    vmul_v, vmla_v, cmul_v,   cmla_v, matvec_v, matvec_t_v, ger_v,
};

}  // namespace

const KernelTable* avx2_table() { return &kAvx2Table; }

}  // namespace avsep::kern

#else

namespace avsep::kern {
const KernelTable* avx2_table() { return nullptr; }
}  // namespace avsep::kern

#endif
