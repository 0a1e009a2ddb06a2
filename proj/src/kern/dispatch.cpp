#include "avsep/kern/kernels.hpp"

#include <atomic>
#include <stdexcept>

#include "kern/table.hpp"

namespace avsep::kern {
namespace {

std::atomic<const KernelTable*> g_table{nullptr};
std::atomic<Backend> g_backend{Backend::kScalar};

const KernelTable* init_table() {
  const KernelTable* t = g_table.load(std::memory_order_acquire);
  if (t) return t;
  const KernelTable* avx2 = cpu_has_avx2() ? avx2_table() : nullptr;
  if (avx2) {
    g_backend.store(Backend::kAvx2, std::memory_order_relaxed);
    g_table.store(avx2, std::memory_order_release);
    return avx2;
  }
  g_backend.store(Backend::kScalar, std::memory_order_relaxed);
  g_table.store(&kScalarTable, std::memory_order_release);
  return &kScalarTable;
}

inline const KernelTable& tab() { return *init_table(); }

}  // namespace

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Backend active_backend() {
  init_table();
  return g_backend.load(std::memory_order_relaxed);
}

void force_backend(Backend b) {
  if (b == Backend::kAvx2) {
    const KernelTable* avx2 = cpu_has_avx2() ? avx2_table() : nullptr;
    if (!avx2) throw std::runtime_error("AVX2 backend unavailable on this CPU");
    g_table.store(avx2, std::memory_order_release);
  } else {
    g_table.store(&kScalarTable, std::memory_order_release);
  }
  g_backend.store(b, std::memory_order_relaxed);
}

double dot(const double* a, const double* b, std::size_t n) { return tab().dot(a, b, n); }
double sum(const double* a, std::size_t n) { return tab().sum(a, n); }
double sum_sq(const double* a, std::size_t n) { return tab().sum_sq(a, n); }
void axpy(double a, const double* x, double* y, std::size_t n) { tab().axpy(a, x, y, n); }
void scale(double a, double* x, std::size_t n) { tab().scale(a, x, n); }
void vadd(const double* a, const double* b, double* dst, std::size_t n) { tab().vadd(a, b, dst, n); }
void vsub(const double* a, const double* b, double* dst, std::size_t n) { tab().vsub(a, b, dst, n); }
void vmul(const double* a, const double* b, double* dst, std::size_t n) { tab().vmul(a, b, dst, n); }
void vmla(const double* a, const double* b, double* dst, std::size_t n) { tab().vmla(a, b, dst, n); }
void cmul(const double* a, const double* b, double* dst, std::size_t n) { tab().cmul(a, b, dst, n); }
void cmla(const double* a, const double* b, double* dst, std::size_t n) { tab().cmla(a, b, dst, n); }
void matvec(const double* w, const double* x, double* y, std::size_t rows, std::size_t cols) {
  tab().matvec(w, x, y, rows, cols);
}
void matvec_t(const double* w, const double* g, double* dx, std::size_t rows, std::size_t cols) {
  tab().matvec_t(w, g, dx, rows, cols);
}
void ger(const double* g, const double* x, double* dw, std::size_t rows, std::size_t cols) {
  tab().ger(g, x, dw, rows, cols);
}

}  // namespace avsep::kern
