// Runtime-dispatched batch kernels for the data-parallel inner loops:
// cylinder Bessel functions J0,Y0,J1,Y1 and sin/cos, evaluated over arrays.
//
// Two implementations share one lane-templated core (detail/lane_math.hpp):
// a scalar reference and an AVX2+FMA variant compiled in its own TU. The
// active variant is picked once at startup from CPUID and can be forced for
// the equivalence tests.
#pragma once

#include <complex>
#include <cstddef>

namespace elast::simd {

enum class Isa { scalar, avx2 };

// currently selected implementation
Isa active();
const char* isa_name(Isa);

// force a specific implementation (throws invalid_input if unsupported here)
void force(Isa);
// re-detect from CPU features (undoes force)
void autodetect();

// J0, Y0, J1, Y1 of x[i] > 0, written to the four output arrays.
void bessel_j0y0j1y1(const double* x, std::size_t n,
                     double* j0, double* y0, double* j1, double* y1);

// J0 and J1 only (no Y): valid for x >= 0, used by the log-split kernels.
void bessel_j0j1(const double* x, std::size_t n, double* j0, double* j1);

// sin and cos with Cody-Waite reduction, |x| <= 2e5
void sincos(const double* x, std::size_t n, double* s, double* c);

// C[m x n] -= A[m x k] B[k x n], complex double, row-major with leading
// dimensions in elements. The LU trailing update runs through this.
void zgemm_sub(const std::complex<double>* A, std::size_t lda,
               const std::complex<double>* B, std::size_t ldb, std::complex<double>* C,
               std::size_t ldc, std::size_t m, std::size_t n, std::size_t k);

}  // namespace elast::simd
