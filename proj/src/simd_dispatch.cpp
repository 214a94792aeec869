#include "elastoscat/simd.hpp"

#include <atomic>

#include "elastoscat/core.hpp"

namespace elast::simd {

namespace detail {
void j0y0j1y1_scalar(const double*, std::size_t, double*, double*, double*, double*);
void j0j1_scalar(const double*, std::size_t, double*, double*);
void sincos_scalar(const double*, std::size_t, double*, double*);
void zgemm_sub_scalar(const std::complex<double>*, std::size_t, const std::complex<double>*,
                      std::size_t, std::complex<double>*, std::size_t, std::size_t,
                      std::size_t, std::size_t);
#if defined(__x86_64__) || defined(__i386__)
void j0y0j1y1_avx2(const double*, std::size_t, double*, double*, double*, double*);
void j0j1_avx2(const double*, std::size_t, double*, double*);
void sincos_avx2(const double*, std::size_t, double*, double*);
void zgemm_sub_avx2(const std::complex<double>*, std::size_t, const std::complex<double>*,
                    std::size_t, std::complex<double>*, std::size_t, std::size_t,
                    std::size_t, std::size_t);
#endif
}  // namespace detail

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Isa detect() { return avx2_supported() ? Isa::avx2 : Isa::scalar; }

std::atomic<Isa>& state() {
    static std::atomic<Isa> s{detect()};
    return s;
}

}  // namespace

Isa active() { return state().load(std::memory_order_relaxed); }

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void force(Isa isa) {
    if (isa == Isa::avx2 && !avx2_supported())
        throw invalid_input("simd: avx2 not supported on this cpu");
    state().store(isa, std::memory_order_relaxed);
}

void autodetect() { state().store(detect(), std::memory_order_relaxed); }

void bessel_j0y0j1y1(const double* x, std::size_t n, double* j0, double* y0,
                     double* j1, double* y1) {
#if defined(__x86_64__) || defined(__i386__)
    if (active() == Isa::avx2) {
        detail::j0y0j1y1_avx2(x, n, j0, y0, j1, y1);
        return;
    }
#endif
    detail::j0y0j1y1_scalar(x, n, j0, y0, j1, y1);
}

void bessel_j0j1(const double* x, std::size_t n, double* j0, double* j1) {
#if defined(__x86_64__) || defined(__i386__)
    if (active() == Isa::avx2) {
        detail::j0j1_avx2(x, n, j0, j1);
        return;
    }
#endif
    detail::j0j1_scalar(x, n, j0, j1);
}

void sincos(const double* x, std::size_t n, double* s, double* c) {
#if defined(__x86_64__) || defined(__i386__)
    if (active() == Isa::avx2) {
        detail::sincos_avx2(x, n, s, c);
        return;
    }
#endif
    detail::sincos_scalar(x, n, s, c);
}

void zgemm_sub(const std::complex<double>* A, std::size_t lda,
               const std::complex<double>* B, std::size_t ldb, std::complex<double>* C,
               std::size_t ldc, std::size_t m, std::size_t n, std::size_t k) {
#if defined(__x86_64__) || defined(__i386__)
    if (active() == Isa::avx2) {
        detail::zgemm_sub_avx2(A, lda, B, ldb, C, ldc, m, n, k);
        return;
    }
#endif
    detail::zgemm_sub_scalar(A, lda, B, ldb, C, ldc, m, n, k);
}

}  // namespace elast::simd
