#include "doctest.h"
#include "elastoscat/media.hpp"

#include <cmath>

#include "elastoscat/rng.hpp"

using namespace elast;

TEST_CASE("wave numbers by direct substitution") {
    ElasticMedium m1(2.0, 1.0, 1.0, 2.0);
    CHECK(m1.omega_p() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m1.omega_s() == doctest::Approx(2.0).epsilon(1e-15));

    ElasticMedium m2(0.0, 1.0, 1.0, 1.0);
    CHECK(m2.omega_p() == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    CHECK(m2.omega_s() == doctest::Approx(1.0).epsilon(1e-15));

    ElasticMedium m3(-1.0, 1.0, 1.0, 1.0);  // lambda + mu = 0
    CHECK(m3.omega_p() == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(m3.omega_s() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("medium invariants rejected at construction") {
    CHECK_THROWS_AS(ElasticMedium(0.0, 0.0, 1.0, 1.0), invalid_input);
    CHECK_THROWS_AS(ElasticMedium(-3.0, 1.0, 1.0, 1.0), invalid_input);  // lambda+2mu < 0
    CHECK_THROWS_AS(ElasticMedium(1.0, 1.0, 0.0, 1.0), invalid_input);
    CHECK_THROWS_AS(ElasticMedium(1.0, 1.0, 1.0, 0.0), invalid_input);
}

TEST_CASE("omega_p <= omega_s iff lambda + mu >= 0") {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        double mu = rng.uniform(0.1, 3.0);
        double lambda = rng.uniform(-2.0 * mu + 0.05, 4.0);
        if (lambda + 2.0 * mu <= 0.0) continue;
        ElasticMedium m(lambda, mu, rng.uniform(0.1, 3.0), rng.uniform(0.1, 5.0));
        if (lambda + mu >= 0.0)
            CHECK(m.omega_p() <= m.omega_s() * (1.0 + 1e-14));
        else
            CHECK(m.omega_p() > m.omega_s());
    }
}

TEST_CASE("isoperimetric constant") {
    CHECK(isoperimetric_constant(2) == doctest::Approx(0.2820947918).epsilon(1e-9));
    CHECK(isoperimetric_constant(3) == doctest::Approx(0.2067834).epsilon(1e-6));
    double c2 = isoperimetric_constant(2);
    CHECK(c2 * c2 == doctest::Approx(1.0 / (4.0 * pi)).epsilon(1e-14));
    CHECK_THROWS_AS(isoperimetric_constant(1), invalid_input);
}

TEST_CASE("closeness constant: N=2 closed form and the two equivalent expressions") {
    ElasticMedium m(1.0, 1.0, 1.0, 1.0);
    CHECK(closeness_constant(m, 2) == doctest::Approx(pi / 8.0).epsilon(1e-14));

    // lambda > 0: value independent of lambda
    ElasticMedium ma(0.5, 1.3, 0.7, 2.1), mb(3.5, 1.3, 0.7, 2.1);
    CHECK(closeness_constant(ma, 2) == doctest::Approx(closeness_constant(mb, 2)).epsilon(1e-14));

    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        double mu = rng.uniform(0.1, 3.0);
        double lambda = rng.uniform(-2.0 * mu + 0.05, 4.0);
        if (lambda + 2.0 * mu <= 0.0) continue;
        ElasticMedium mm(lambda, mu, rng.uniform(0.1, 3.0), rng.uniform(0.1, 5.0));
        for (int N : {2, 3}) {
            double a = closeness_constant(mm, N), b = closeness_constant_alt(mm, N);
            CHECK(std::abs(a - b) <= 1e-12 * std::abs(a));
        }
    }
}

TEST_CASE("closeness constant monotone in omega and mu") {
    double last = 1e300;
    for (double w : {0.5, 1.0, 2.0, 4.0, 8.0}) {
        double v = closeness_constant(ElasticMedium(1.0, 1.0, 1.0, w), 2);
        CHECK(v < last);
        last = v;
    }
    last = 0.0;
    for (double mu : {0.5, 1.0, 2.0, 4.0}) {
        double v = closeness_constant(ElasticMedium(1.0, mu, 1.0, 1.0), 2);
        CHECK(v > last);
        last = v;
    }
}

TEST_CASE("incident plane waves") {
    ElasticMedium m(2.0, 1.0, 1.0, 2.0);
    auto pw = IncidentPlaneWave::longitudinal({1.0, 0.0});
    CVec2 v0 = pw.evaluate(m, {0.0, 0.0});
    CHECK(std::abs(v0.x - 1.0) < 1e-15);
    CHECK(std::abs(v0.y) < 1e-15);

    auto sw = IncidentPlaneWave::transversal({0.0, 1.0});
    // p = -Q d orthogonal to d
    CVec2 p = sw.polarization();
    CHECK(std::abs(p.x * 0.0 + p.y * 1.0) < 1e-15);
    CHECK(std::abs(std::sqrt(std::norm(p.x) + std::norm(p.y)) - 1.0) < 1e-15);

    // longitudinal: curl-free; transversal: divergence-free (finite differences)
    auto div_curl = [&](const IncidentPlaneWave& w, Vec2 x) {
        double h = 1e-5;
        CVec2 xp = w.evaluate(m, {x.x + h, x.y}), xm = w.evaluate(m, {x.x - h, x.y});
        CVec2 yp = w.evaluate(m, {x.x, x.y + h}), ym = w.evaluate(m, {x.x, x.y - h});
        cd div = (xp.x - xm.x + yp.y - ym.y) / (2.0 * h);
        cd curl = (xp.y - xm.y - (yp.x - ym.x)) / (2.0 * h);
        return std::pair{div, curl};
    };
    Rng rng(17);
    for (int k = 0; k < 20; ++k) {
        Vec2 x{rng.uniform(-2, 2), rng.uniform(-2, 2)};
        auto [dl, cl] = div_curl(pw, x);
        CHECK(std::abs(cl) < 1e-9);  // gradient field
        auto [ds, cs] = div_curl(sw, x);
        CHECK(std::abs(ds) < 1e-9);  // p . d = 0
    }
}

TEST_CASE("incident waves satisfy the Navier equation (FD residual)") {
    ElasticMedium m(1.3, 0.8, 1.1, 1.7);
    Rng rng(23);
    for (auto kind : {WaveKind::longitudinal, WaveKind::transversal}) {
        auto w = kind == WaveKind::longitudinal
                     ? IncidentPlaneWave::longitudinal({0.6, 0.8})
                     : IncidentPlaneWave::transversal({0.6, 0.8}, 0.3);
        for (int k = 0; k < 100; ++k) {
            Vec2 x{rng.uniform(-3, 3), rng.uniform(-3, 3)};
            double h = 1e-4;
            auto f = [&](double a, double b) { return w.evaluate(m, {a, b}); };
            CVec2 c = f(x.x, x.y);
            CVec2 xp = f(x.x + h, x.y), xm = f(x.x - h, x.y);
            CVec2 yp = f(x.x, x.y + h), ym = f(x.x, x.y - h);
            CVec2 pp = f(x.x + h, x.y + h), pm = f(x.x + h, x.y - h);
            CVec2 mp = f(x.x - h, x.y + h), mm = f(x.x - h, x.y - h);
            cd lap_x = (xp.x + xm.x + yp.x + ym.x - 4.0 * c.x) / (h * h);
            cd lap_y = (xp.y + xm.y + yp.y + ym.y - 4.0 * c.y) / (h * h);
            // grad div: d/dx (du1/dx + du2/dy), d/dy (...)
            cd dxx_1 = (xp.x - 2.0 * c.x + xm.x) / (h * h);
            cd dyy_2 = (yp.y - 2.0 * c.y + ym.y) / (h * h);
            cd dxy_1 = (pp.x - pm.x - mp.x + mm.x) / (4.0 * h * h);
            cd dxy_2 = (pp.y - pm.y - mp.y + mm.y) / (4.0 * h * h);
            cd gd_x = dxx_1 + dxy_2;
            cd gd_y = dxy_1 + dyy_2;
            double lm = m.lambda() + m.mu();
            cd r1 = m.mu() * lap_x + lm * gd_x + m.rho() * m.omega() * m.omega() * c.x;
            cd r2 = m.mu() * lap_y + lm * gd_y + m.rho() * m.omega() * m.omega() * c.y;
            CHECK(std::abs(r1) < 1e-6);
            CHECK(std::abs(r2) < 1e-6);
        }
    }
}
