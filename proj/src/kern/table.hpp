#pragma once

#include <cstddef>

namespace avsep::kern {

// One function pointer per kernel; the dispatcher swaps whole tables.
struct KernelTable {
  double (*dot)(const double*, const double*, std::size_t);
  double (*sum)(const double*, std::size_t);
  double (*sum_sq)(const double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scale)(double, double*, std::size_t);
  void (*vadd)(const double*, const double*, double*, std::size_t);
  void (*vsub)(const double*, const double*, double*, std::size_t);
  void (*vmul)(const double*, const double*, double*, std::size_t);
  void (*vmla)(const double*, const double*, double*, std::size_t);
  void (*cmul)(const double*, const double*, double*, std::size_t);
  void (*cmla)(const double*, const double*, double*, std::size_t);
  void (*matvec)(const double*, const double*, double*, std::size_t, std::size_t);
  void (*matvec_t)(const double*, const double*, double*, std::size_t, std::size_t);
  void (*ger)(const double*, const double*, double*, std::size_t, std::size_t);
};

extern const KernelTable kScalarTable;

// Null on platforms without an AVX2 build.
const KernelTable* avx2_table();

}  // namespace avsep::kern
