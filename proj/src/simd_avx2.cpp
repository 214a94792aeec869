// AVX2+FMA instantiation. This TU is compiled with -mavx2 -mfma and must only
// be entered after the dispatcher has checked CPUID.
#include <immintrin.h>

#include <cmath>
#include <complex>

#include "elastoscat/detail/lane_math.hpp"

namespace elast::simd::detail {

struct Avx2Lane {
    static constexpr std::size_t width = 4;
    using V = __m256d;
    using M = __m256d;  // comparison result as blend mask

    static V broadcast(double v) { return _mm256_set1_pd(v); }
    static V load(const double* p) { return _mm256_loadu_pd(p); }
    static void store(double* p, V v) { _mm256_storeu_pd(p, v); }
    static V fma(V a, V b, V c) { return _mm256_fmadd_pd(a, b, c); }
    static V sqrt(V a) { return _mm256_sqrt_pd(a); }
    static V round(V a) {
        return _mm256_round_pd(a, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
    }
    static V floor(V a) { return _mm256_floor_pd(a); }
    static M lt(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_LT_OQ); }
    static M eq(V a, V b) { return _mm256_cmp_pd(a, b, _CMP_EQ_OQ); }
    static V select(M m, V a, V b) { return _mm256_blendv_pd(b, a, m); }
    static V log_lanes(V a) {
        // log only feeds the small-argument Y series; per-lane libm keeps the
        // result bit-identical to the scalar reference
        alignas(32) double t[4];
        _mm256_store_pd(t, a);
        for (double& v : t) v = std::log(v);
        return _mm256_load_pd(t);
    }
};

void j0y0j1y1_avx2(const double* x, std::size_t n, double* j0, double* y0,
                   double* j1, double* y1) {
    run_j0y0j1y1<Avx2Lane>(x, n, j0, y0, j1, y1);
}

void j0j1_avx2(const double* x, std::size_t n, double* j0, double* j1) {
    run_j0j1<Avx2Lane>(x, n, j0, j1);
}

void sincos_avx2(const double* x, std::size_t n, double* s, double* c) {
    run_sincos<Avx2Lane>(x, n, s, c);
}

// C -= A B on interleaved complex doubles; two complex values per __m256d.
// fmaddsub pairs the (re*re -/+ im*im) lanes of the complex product.
void zgemm_sub_avx2(const std::complex<double>* A, std::size_t lda,
                    const std::complex<double>* B, std::size_t ldb,
                    std::complex<double>* C, std::size_t ldc, std::size_t m,
                    std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        double* ci = reinterpret_cast<double*>(C + i * ldc);
        for (std::size_t l = 0; l < k; ++l) {
            const std::complex<double> a = A[i * lda + l];
            const __m256d ar = _mm256_set1_pd(a.real());
            const __m256d ai = _mm256_set1_pd(a.imag());
            const double* bl = reinterpret_cast<const double*>(B + l * ldb);
            std::size_t j = 0;
            for (; j + 2 <= n; j += 2) {
                const __m256d b = _mm256_loadu_pd(bl + 2 * j);
                const __m256d bswap = _mm256_permute_pd(b, 0x5);
                const __m256d prod =
                    _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
                const __m256d c = _mm256_loadu_pd(ci + 2 * j);
                _mm256_storeu_pd(ci + 2 * j, _mm256_sub_pd(c, prod));
            }
            for (; j < n; ++j) C[i * ldc + j] -= a * B[l * ldb + j];
        }
    }
}

}  // namespace elast::simd::detail
