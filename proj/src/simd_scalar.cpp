// Scalar reference instantiation of the lane-templated kernels.
#include <cmath>
#include <complex>

#include "elastoscat/detail/lane_math.hpp"

namespace elast::simd::detail {

struct ScalarLane {
    static constexpr std::size_t width = 1;
    using V = double;
    using M = bool;

    static V broadcast(double v) { return v; }
    static V load(const double* p) { return *p; }
    static void store(double* p, V v) { *p = v; }
    static V fma(V a, V b, V c) { return std::fma(a, b, c); }
    static V sqrt(V a) { return std::sqrt(a); }
    static V round(V a) { return std::nearbyint(a); }
    static V floor(V a) { return std::floor(a); }
    static M lt(V a, V b) { return a < b; }
    static M eq(V a, V b) { return a == b; }
    static V select(M m, V a, V b) { return m ? a : b; }
    static V log_lanes(V a) { return std::log(a); }
};

void j0y0j1y1_scalar(const double* x, std::size_t n, double* j0, double* y0,
                     double* j1, double* y1) {
    run_j0y0j1y1<ScalarLane>(x, n, j0, y0, j1, y1);
}

void j0j1_scalar(const double* x, std::size_t n, double* j0, double* j1) {
    run_j0j1<ScalarLane>(x, n, j0, j1);
}

void sincos_scalar(const double* x, std::size_t n, double* s, double* c) {
    run_sincos<ScalarLane>(x, n, s, c);
}

void zgemm_sub_scalar(const std::complex<double>* A, std::size_t lda,
                      const std::complex<double>* B, std::size_t ldb,
                      std::complex<double>* C, std::size_t ldc, std::size_t m,
                      std::size_t n, std::size_t k) {
    for (std::size_t i = 0; i < m; ++i) {
        std::complex<double>* ci = C + i * ldc;
        for (std::size_t l = 0; l < k; ++l) {
            const std::complex<double> a = A[i * lda + l];
            const std::complex<double>* bl = B + l * ldb;
            for (std::size_t j = 0; j < n; ++j) ci[j] -= a * bl[j];
        }
    }
}

}  // namespace elast::simd::detail
