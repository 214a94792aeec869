#include "doctest.h"
#include "elastoscat/kernels.hpp"

#include <cmath>

#include "elastoscat/rng.hpp"
#include "elastoscat/special.hpp"

using namespace elast;

namespace {
const ElasticMedium kMed(2.0, 1.0, 1.0, 2.0);
}

TEST_CASE("helmholtz fundamental solution closed forms") {
    // N=3, k=1, r=1: (cos 1 + i sin 1) / (4 pi)
    cd v3 = helmholtz_phi(1.0, 1.0, 3);
    CHECK(v3.real() == doctest::Approx(0.0429938).epsilon(1e-5));
    CHECK(v3.imag() == doctest::Approx(0.0669611).epsilon(1e-5));
    // N=2, k=1, r=1: (i/4) H0(1)
    cd v2 = helmholtz_phi(1.0, 1.0, 2);
    CHECK(v2.real() == doctest::Approx(-0.0220642410539).epsilon(1e-10));
    CHECK(v2.imag() == doctest::Approx(0.1912994216394).epsilon(1e-10));

    CHECK_THROWS_AS(helmholtz_phi(1.0, 0.0, 2), invalid_input);
    CHECK_THROWS_AS(helmholtz_phi(1.0, 1.0, 4), invalid_input);
}

TEST_CASE("navier Phi: symmetry and axis-aligned structure") {
    NavierKernels K(kMed);
    Rng rng(9);
    double worst = 0.0;
    for (int k = 0; k < 1000; ++k) {
        Vec2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec2 y = x + Vec2{rng.uniform(-1.5, 1.5), rng.uniform(-1.5, 1.5)};
        if ((x - y).norm() < 1e-3) continue;
        Mat2c P = K.phi(x, y);
        worst = std::max(worst, (P - P.transpose()).max_abs());
        // symmetry under swapping arguments
        Mat2c P2 = K.phi(y, x);
        CHECK((P - P2).max_abs() < 1e-13);
    }
    CHECK(worst < 1e-13);

    // x - y along the first axis: off-diagonals vanish
    Mat2c P = K.phi({1.5, 0.3}, {0.2, 0.3});
    CHECK(std::abs(P.b) < 1e-15);
    CHECK(std::abs(P.c) < 1e-15);
}

TEST_CASE("navier Phi matches nested central differences of phi_s - phi_p") {
    NavierKernels K(kMed);
    auto psi = [&](Vec2 x, Vec2 y) {
        double r = (x - y).norm();
        return helmholtz_phi(kMed.omega_s(), r, 2) - helmholtz_phi(kMed.omega_p(), r, 2);
    };
    Vec2 x{1.0, 0.0}, y{0.0, 0.0};
    double h = 1e-4;
    double rw2 = kMed.rho() * kMed.omega() * kMed.omega();
    Mat2c fd;
    Vec2 e[2] = {{1.0, 0.0}, {0.0, 1.0}};
    cd* entries[2][2] = {{&fd.a, &fd.b}, {&fd.c, &fd.d}};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            cd v;
            if (i == j) {
                v = (psi(x, y + e[i] * (2 * h)) - 2.0 * psi(x, y) + psi(x, y - e[i] * (2 * h))) /
                    (4 * h * h);
            } else {
                v = (psi(x, y + e[i] * h + e[j] * h) - psi(x, y + e[i] * h - e[j] * h) -
                     psi(x, y - e[i] * h + e[j] * h) + psi(x, y - e[i] * h - e[j] * h)) /
                    (4 * h * h);
            }
            *entries[i][j] = v / rw2;
        }
    double r = (x - y).norm();
    cd diag = helmholtz_phi(kMed.omega_s(), r, 2) / kMed.mu();
    fd.a += diag;
    fd.d += diag;
    Mat2c P = K.phi(x, y);
    CHECK((P - fd).max_abs() < 1e-6);
}

TEST_CASE("traction kernel: FD oracle, linearity in nu, far-field decay") {
    NavierKernels K(kMed);
    Rng rng(12);
    // FD of the traction definition applied to each row of Phi
    for (int rep = 0; rep < 10; ++rep) {
        Vec2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        Vec2 y = x + Vec2{rng.uniform(0.3, 1.2), rng.uniform(0.3, 1.2)};
        Vec2 nu = Vec2{rng.uniform(-1, 1), rng.uniform(-1, 1)}.normalized();
        double h = 1e-5;
        Mat2c T = K.traction(x, y, nu);
        // rows of Phi as functions of y
        auto phi_row = [&](int m, Vec2 yy) {
            Mat2c P = K.phi(x, yy);
            return m == 0 ? CVec2{P.a, P.b} : CVec2{P.c, P.d};
        };
        for (int m = 0; m < 2; ++m) {
            CVec2 xp = phi_row(m, y + Vec2{h, 0}), xm = phi_row(m, y - Vec2{h, 0});
            CVec2 yp = phi_row(m, y + Vec2{0, h}), ym = phi_row(m, y - Vec2{0, h});
            cd d1x = (xp.x - xm.x) / (2 * h), d1y = (yp.x - ym.x) / (2 * h);
            cd d2x = (xp.y - xm.y) / (2 * h), d2y = (yp.y - ym.y) / (2 * h);
            cd div = d1x + d2y;
            // sigma(v) nu with v = row m
            cd s11 = 2.0 * kMed.mu() * d1x + kMed.lambda() * div;
            cd s22 = 2.0 * kMed.mu() * d2y + kMed.lambda() * div;
            cd s12 = kMed.mu() * (d1y + d2x);
            cd t1 = s11 * nu.x + s12 * nu.y;
            cd t2 = s12 * nu.x + s22 * nu.y;
            cd g1 = (m == 0) ? T.a : T.c;
            cd g2 = (m == 0) ? T.b : T.d;
            CHECK(std::abs(t1 - g1) < 2e-8);
            CHECK(std::abs(t2 - g2) < 2e-8);
        }
        // linear in nu
        Mat2c Tm = K.traction(x, y, {-nu.x, -nu.y});
        CHECK((T + Tm).max_abs() < 1e-14);
    }
    // entries decay like r^{-1/2}
    Vec2 y{0.0, 0.0}, nu{0.0, 1.0};
    for (double r : {10.0, 100.0, 400.0}) {
        Mat2c T = K.traction({r, 0.0}, y, nu);
        CHECK(T.max_abs() * std::sqrt(r) < 1.0);
        CHECK(T.max_abs() * std::sqrt(r) > 1e-3);
    }
}

TEST_CASE("N=3 kernels: FD oracle for Phi and traction") {
    ElasticMedium med(2.0, 1.0, 1.0, 2.0);
    double x[3] = {1.1, -0.3, 0.4}, y[3] = {0.2, 0.5, -0.1};
    double h = 1e-4;
    double rw2 = med.rho() * med.omega() * med.omega();
    auto psi = [&](const double yy[3]) {
        double r = std::sqrt((x[0] - yy[0]) * (x[0] - yy[0]) +
                             (x[1] - yy[1]) * (x[1] - yy[1]) +
                             (x[2] - yy[2]) * (x[2] - yy[2]));
        return helmholtz_phi(med.omega_s(), r, 3) - helmholtz_phi(med.omega_p(), r, 3);
    };
    Mat3c P = navier_phi3(med, x, y);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            double yp[3] = {y[0], y[1], y[2]}, ym[3] = {y[0], y[1], y[2]};
            cd fd;
            if (i == j) {
                yp[i] += 2 * h;
                ym[i] -= 2 * h;
                fd = (psi(yp) - 2.0 * psi(y) + psi(ym)) / (4 * h * h);
            } else {
                double pp[3] = {y[0], y[1], y[2]}, pm[3] = {y[0], y[1], y[2]},
                       mp[3] = {y[0], y[1], y[2]}, mm[3] = {y[0], y[1], y[2]};
                pp[i] += h; pp[j] += h;
                pm[i] += h; pm[j] -= h;
                mp[i] -= h; mp[j] += h;
                mm[i] -= h; mm[j] -= h;
                fd = (psi(pp) - psi(pm) - psi(mp) + psi(mm)) / (4 * h * h);
            }
            cd expect = fd / rw2;
            if (i == j) {
                double r = std::sqrt((x[0] - y[0]) * (x[0] - y[0]) +
                                     (x[1] - y[1]) * (x[1] - y[1]) +
                                     (x[2] - y[2]) * (x[2] - y[2]));
                expect += helmholtz_phi(med.omega_s(), r, 3) / med.mu();
            }
            CHECK(std::abs(P.m[i][j] - expect) < 1e-6);
        }

    // traction vs FD of sigma(row) nu
    double nu[3] = {0.6, 0.0, 0.8};
    Mat3c T = traction_kernel3(med, y, nu, x);
    for (int m = 0; m < 3; ++m) {
        cd grad[3][3];  // grad[j][l] = d row_m[j] / d y_l
        for (int l = 0; l < 3; ++l) {
            double yp[3] = {y[0], y[1], y[2]}, ym[3] = {y[0], y[1], y[2]};
            yp[l] += h;
            ym[l] -= h;
            Mat3c Pp = navier_phi3(med, x, yp), Pm = navier_phi3(med, x, ym);
            for (int j = 0; j < 3; ++j) grad[j][l] = (Pp.m[m][j] - Pm.m[m][j]) / (2 * h);
        }
        cd div = grad[0][0] + grad[1][1] + grad[2][2];
        for (int j = 0; j < 3; ++j) {
            cd t = 0.0;
            for (int l = 0; l < 3; ++l)
                t += med.mu() * (grad[j][l] + grad[l][j]) * nu[l];
            t += med.lambda() * div * nu[j];
            CHECK(std::abs(t - T.m[m][j]) < 1e-6);
        }
    }
}

TEST_CASE("radial split: A = A_L ln r + analytic, Cauchy constants") {
    NavierKernels K(kMed);
    // A_R(r) := A - A_L ln r tends to A_R0
    for (double r : {1e-3, 1e-4, 1e-5}) {
        RadialKernel rk = K.radial(r);
        RadialKernelLog rl = K.radial_log(r);
        cd ar = rk.A - rl.AL * std::log(r);
        CHECK(std::abs(ar - K.A_R0()) < 50.0 * r * std::abs(std::log(r)));
    }
    // A' r -> C_A, B -> C_B as r -> 0 (r stays at assembly scale: below it the
    // 1/r^3 Laurent parts of the Hankel path cancel in floating point)
    RadialKernel rk = K.radial(1e-3);
    CHECK(std::abs(rk.Ap * 1e-3 - K.C_A()) < 1e-4);
    CHECK(std::abs(rk.B - K.C_B()) < 1e-4);
    RadialKernel rk2 = K.radial(1e-4);
    CHECK(std::abs(rk2.Ap * 1e-4 - K.C_A()) < 1e-5);
}
