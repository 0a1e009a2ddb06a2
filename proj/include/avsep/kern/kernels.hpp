#pragma once

#include <cstddef>

// Data-parallel arithmetic kernels used by the DSP and network code.
// Every kernel has a scalar reference implementation and may have an
// AVX2 variant; the active set is chosen at runtime from CPUID. The two
// backends are equivalence-tested against each other (see
// tests/test_kernels.cpp). Reductions may reassociate, so backends agree
// to rounding, not bit-exactly.
namespace avsep::kern {

enum class Backend { kScalar, kAvx2 };

// Backend selected by the dispatcher (AVX2 when the CPU supports it).
Backend active_backend();

// Test hook: force a specific backend. Throws if unsupported on this CPU.
void force_backend(Backend b);

bool cpu_has_avx2();

// ---- reductions -----------------------------------------------------------
double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double sum_sq(const double* a, std::size_t n);

// ---- elementwise ----------------------------------------------------------
void axpy(double a, const double* x, double* y, std::size_t n);  // y += a*x
void scale(double a, double* x, std::size_t n);                  // x *= a
void vadd(const double* a, const double* b, double* dst, std::size_t n);
void vsub(const double* a, const double* b, double* dst, std::size_t n);
void vmul(const double* a, const double* b, double* dst, std::size_t n);
void vmla(const double* a, const double* b, double* dst, std::size_t n);  // dst += a.*b

// ---- complex (interleaved re,im; n complex elements) ----------------------
void cmul(const double* a, const double* b, double* dst, std::size_t n);  // dst = a.*b
void cmla(const double* a, const double* b, double* dst, std::size_t n);  // dst += a.*b

// ---- small dense linear algebra (row-major W[rows x cols]) ----------------
void matvec(const double* w, const double* x, double* y, std::size_t rows,
            std::size_t cols);  // y = W x
void matvec_t(const double* w, const double* g, double* dx, std::size_t rows,
              std::size_t cols);  // dx += W^T g
void ger(const double* g, const double* x, double* dw, std::size_t rows,
         std::size_t cols);  // dW += g x^T

}  // namespace avsep::kern
