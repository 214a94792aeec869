#include "doctest.h"
#include "elastoscat/simd.hpp"

#include <cmath>
#include <vector>

#include "elastoscat/rng.hpp"

using namespace elast;

namespace {

struct IsaGuard {
    ~IsaGuard() { simd::autodetect(); }
};

std::vector<double> random_args(std::size_t n, double lo, double hi, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> x(n);
    for (double& v : x) v = rng.uniform(lo, hi);
    return x;
}

}  // namespace

TEST_CASE("scalar and avx2 variants agree bit for bit") {
    if (simd::active() != simd::Isa::avx2) return;  // nothing to compare on this host
    IsaGuard guard;
    auto x = random_args(4099, 1e-6, 1000.0, 42);
    std::vector<double> a[4]{std::vector<double>(x.size()), std::vector<double>(x.size()),
                             std::vector<double>(x.size()), std::vector<double>(x.size())};
    std::vector<double> b[4] = {a[0], a[1], a[2], a[3]};

    simd::force(simd::Isa::scalar);
    simd::bessel_j0y0j1y1(x.data(), x.size(), a[0].data(), a[1].data(), a[2].data(),
                          a[3].data());
    simd::force(simd::Isa::avx2);
    simd::bessel_j0y0j1y1(x.data(), x.size(), b[0].data(), b[1].data(), b[2].data(),
                          b[3].data());
    for (int f = 0; f < 4; ++f)
        for (std::size_t i = 0; i < x.size(); ++i) CHECK(a[f][i] == b[f][i]);

    std::vector<double> s1(x.size()), c1(x.size()), s2(x.size()), c2(x.size());
    simd::force(simd::Isa::scalar);
    simd::sincos(x.data(), x.size(), s1.data(), c1.data());
    simd::force(simd::Isa::avx2);
    simd::sincos(x.data(), x.size(), s2.data(), c2.data());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(s1[i] == s2[i]);
        CHECK(c1[i] == c2[i]);
    }
}

TEST_CASE("batch sincos against libm") {
    auto x = random_args(2000, 0.0, 1000.0, 7);
    std::vector<double> s(x.size()), c(x.size());
    simd::sincos(x.data(), x.size(), s.data(), c.data());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(std::abs(s[i] - std::sin(x[i])) < 4e-16);
        CHECK(std::abs(c[i] - std::cos(x[i])) < 4e-16);
    }
}

TEST_CASE("zgemm_sub variants agree") {
    if (simd::active() != simd::Isa::avx2) return;
    IsaGuard guard;
    const std::size_t m = 13, k = 7, n = 21;
    Rng rng(3);
    std::vector<std::complex<double>> A(m * k), B(k * n), C0(m * n);
    for (auto& v : A) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (auto& v : B) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    for (auto& v : C0) v = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
    auto C1 = C0, C2 = C0;
    simd::force(simd::Isa::scalar);
    simd::zgemm_sub(A.data(), k, B.data(), n, C1.data(), n, m, n, k);
    simd::force(simd::Isa::avx2);
    simd::zgemm_sub(A.data(), k, B.data(), n, C2.data(), n, m, n, k);
    for (std::size_t i = 0; i < C1.size(); ++i)
        CHECK(std::abs(C1[i] - C2[i]) < 1e-14);
}

TEST_CASE("batch bessel handles length not divisible by the lane width") {
    for (std::size_t n : {1u, 2u, 3u, 5u, 9u}) {
        auto x = random_args(n, 0.5, 40.0, 11 + n);
        std::vector<double> j0(n), y0(n), j1(n), y1(n);
        simd::bessel_j0y0j1y1(x.data(), n, j0.data(), y0.data(), j1.data(), y1.data());
        for (std::size_t i = 0; i < n; ++i) {
            double a, b, c, d;
            simd::bessel_j0y0j1y1(&x[i], 1, &a, &b, &c, &d);
            CHECK(j0[i] == a);
            CHECK(y0[i] == b);
            CHECK(j1[i] == c);
            CHECK(y1[i] == d);
        }
    }
}
