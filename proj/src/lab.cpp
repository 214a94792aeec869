#include "elastoscat/lab.hpp"

#include <cmath>
#include <limits>

#include "elastoscat/quadrature.hpp"
#include "elastoscat/rng.hpp"
#include "elastoscat/special.hpp"

namespace elast {

namespace {
// radius profile of the domain boundary for the polar shapes
double boundary_radius(DomainShape s, double p0, double p1, int m, double th) {
    switch (s) {
        case DomainShape::disc: return p0;
        case DomainShape::annulus: return p1;  // outer
        case DomainShape::perturbed_disc: return p0 * (1.0 + p1 * std::cos(m * th));
        default: return 0.0;
    }
}
}  // namespace

TestDomain TestDomain::disc(double radius, int nr, int nt) {
    if (!(radius > 0.0)) throw invalid_input("test domain: radius must be positive");
    TestDomain d;
    d.shape_ = DomainShape::disc;
    d.p0_ = radius;
    d.nr_ = nr;
    d.nt_ = nt;
    return d;
}

TestDomain TestDomain::square(double side, int nx) {
    if (!(side > 0.0)) throw invalid_input("test domain: side must be positive");
    TestDomain d;
    d.shape_ = DomainShape::square;
    d.p0_ = side;
    d.nr_ = nx;
    d.nt_ = nx;
    return d;
}

TestDomain TestDomain::annulus(double r0, double r1, int nr, int nt) {
    if (!(0.0 < r0 && r0 < r1)) throw invalid_input("test domain: need 0 < r0 < r1");
    TestDomain d;
    d.shape_ = DomainShape::annulus;
    d.p0_ = r0;
    d.p1_ = r1;
    d.nr_ = nr;
    d.nt_ = nt;
    return d;
}

TestDomain TestDomain::perturbed_disc(double r0, double delta, int m, int nr, int nt) {
    if (!(r0 > 0.0) || !(std::abs(delta) * (1.0 + m * m) < 1.0))
        throw invalid_input("test domain: invalid perturbed disc parameters");
    TestDomain d;
    d.shape_ = DomainShape::perturbed_disc;
    d.p0_ = r0;
    d.p1_ = delta;
    d.m_ = m;
    d.nr_ = nr;
    d.nt_ = nt;
    return d;
}

TestDomain TestDomain::refined() const {
    TestDomain d = *this;
    d.nr_ *= 2;
    d.nt_ *= 2;
    return d;
}

std::string TestDomain::label() const {
    switch (shape_) {
        case DomainShape::disc: return "disc";
        case DomainShape::square: return "square";
        case DomainShape::annulus: return "annulus";
        case DomainShape::perturbed_disc: return "perturbed_disc";
    }
    return "?";
}

cd TestDomain::integrate(const std::function<cd(Vec2)>& f) const {
    cd acc{};
    if (shape_ == DomainShape::square) {
        GaussRule g = gauss_legendre(nr_);
        const double a = 0.5 * p0_;
        for (int i = 0; i < nr_; ++i)
            for (int j = 0; j < nr_; ++j)
                acc += f({a * g.x[i], a * g.x[j]}) * (g.w[i] * g.w[j] * a * a);
        return acc;
    }
    // polar shapes: GL in the radial map, trapezoid in the angle
    GaussRule g = gauss_legendre(nr_);
    const double r_in = (shape_ == DomainShape::annulus) ? p0_ : 0.0;
    for (int k = 0; k < nt_; ++k) {
        const double th = 2.0 * pi * k / nt_;
        const double r_out = (shape_ == DomainShape::annulus)
                                 ? p1_
                                 : boundary_radius(shape_, p0_, p1_, m_, th);
        cd acc_r{};
        for (int i = 0; i < nr_; ++i) {
            const double r = 0.5 * (r_out - r_in) * (g.x[i] + 1.0) + r_in;
            acc_r += f({r * std::cos(th), r * std::sin(th)}) * (g.w[i] * r);
        }
        acc += acc_r * (0.5 * (r_out - r_in));
    }
    return acc * (2.0 * pi / nt_);
}

cd TestDomain::integrate_boundary(const std::function<cd(Vec2)>& f) const {
    cd acc{};
    switch (shape_) {
        case DomainShape::square: {
            GaussRule g = gauss_legendre(nr_);
            const double a = 0.5 * p0_;
            for (int i = 0; i < nr_; ++i) {
                const double s = a * g.x[i], w = a * g.w[i];
                acc += (f({s, -a}) + f({s, a}) + f({-a, s}) + f({a, s})) * w;
            }
            return acc;
        }
        case DomainShape::disc: {
            for (int k = 0; k < nt_; ++k) {
                const double th = 2.0 * pi * k / nt_;
                acc += f({p0_ * std::cos(th), p0_ * std::sin(th)});
            }
            return acc * (2.0 * pi * p0_ / nt_);
        }
        case DomainShape::annulus: {
            for (int k = 0; k < nt_; ++k) {
                const double th = 2.0 * pi * k / nt_;
                const Vec2 e{std::cos(th), std::sin(th)};
                acc += f(e * p0_) * p0_ + f(e * p1_) * p1_;
            }
            return acc * (2.0 * pi / nt_);
        }
        case DomainShape::perturbed_disc: {
            // arc length element sqrt(r^2 + r'^2) dtheta
            for (int k = 0; k < nt_; ++k) {
                const double th = 2.0 * pi * k / nt_;
                const double r = p0_ * (1.0 + p1_ * std::cos(m_ * th));
                const double rp = -p0_ * p1_ * m_ * std::sin(m_ * th);
                acc += f({r * std::cos(th), r * std::sin(th)}) * std::sqrt(r * r + rp * rp);
            }
            return acc * (2.0 * pi / nt_);
        }
    }
    return acc;
}

double TestDomain::area() const {
    return integrate([](Vec2) { return cd(1.0, 0.0); }).real();
}

double TestDomain::boundary_measure() const {
    return integrate_boundary([](Vec2) { return cd(1.0, 0.0); }).real();
}

double TestDomain::boundary_clearance(Vec2 c) const {
    switch (shape_) {
        case DomainShape::square:
            return 0.5 * p0_ - std::max(std::abs(c.x), std::abs(c.y));
        case DomainShape::disc:
            return p0_ - c.norm();
        case DomainShape::annulus:
            return std::min(p1_ - c.norm(), c.norm() - p0_);
        case DomainShape::perturbed_disc: {
            double dmin = 1e300;
            for (int k = 0; k < 1024; ++k) {
                const double th = 2.0 * pi * k / 1024;
                const double r = p0_ * (1.0 + p1_ * std::cos(m_ * th));
                dmin = std::min(dmin, (Vec2{r * std::cos(th), r * std::sin(th)} - c).norm());
            }
            return dmin;
        }
    }
    return 0.0;
}

InequalityResult friedrichs_check(const TestDomain& dom, const ScalarField& u, int N) {
    const double C = isoperimetric_constant(N);
    const double A = dom.area();
    const double l2 = std::sqrt(
        dom.integrate([&](Vec2 x) { return cd(std::norm(u.value(x)), 0.0); }).real());
    const double g2 = std::sqrt(dom.integrate([&](Vec2 x) {
                                       CVec2 g = u.gradient(x);
                                       return cd(std::norm(g.x) + std::norm(g.y), 0.0);
                                   }).real());
    const double b2 = std::sqrt(
        dom.integrate_boundary([&](Vec2 x) { return cd(std::norm(u.value(x)), 0.0); })
            .real());
    const double pw = std::pow(A, 1.0 / (2.0 * N));
    const double rhs = 4.0 * C * pw * (pw * g2 + b2);
    return {l2, rhs, l2 <= rhs * (1.0 + 1e-8)};
}

InequalityResult mazya_check(const TestDomain& dom, const ScalarField& u, int N) {
    const double C = isoperimetric_constant(N);
    const double p = double(N) / (N - 1);
    const double lp = std::pow(
        dom.integrate([&](Vec2 x) { return cd(std::pow(std::abs(u.value(x)), p), 0.0); })
            .real(),
        1.0 / p);
    const double g1 = dom.integrate([&](Vec2 x) {
                             CVec2 g = u.gradient(x);
                             return cd(std::sqrt(std::norm(g.x) + std::norm(g.y)), 0.0);
                         }).real();
    const double b1 =
        dom.integrate_boundary([&](Vec2 x) { return cd(std::abs(u.value(x)), 0.0); })
            .real();
    const double rhs = C * (g1 + b1);
    return {lp, rhs, lp <= rhs * (1.0 + 1e-8)};
}

KornResult korn_check(const TestDomain& dom, const VectorField& u) {
    if (!(u.support_radius > 0.0))
        throw invalid_input("korn_check: field must declare a compact support radius");
    if (dom.boundary_clearance(u.support_center) <= u.support_radius)
        throw invalid_input("korn_check: support touches the boundary");
    const double grad_sq = dom.integrate([&](Vec2 x) {
                                  Mat2c g = u.gradient(x);
                                  return cd(std::norm(g.a) + std::norm(g.b) +
                                                std::norm(g.c) + std::norm(g.d),
                                            0.0);
                              }).real();
    const double sym_sq = dom.integrate([&](Vec2 x) {
                                 Mat2c g = u.gradient(x);
                                 cd e12 = 0.5 * (g.b + g.c);
                                 return cd(std::norm(g.a) + std::norm(g.d) +
                                               2.0 * std::norm(e12),
                                           0.0);
                             }).real();
    return {grad_sq, sym_sq, grad_sq <= 2.0 * sym_sq * (1.0 + 1e-8)};
}

std::vector<ScalarField> scalar_test_family(std::uint64_t seed, int count) {
    std::vector<ScalarField> out;
    // fixed members: constants, coordinates, a Fourier-Bessel mode
    out.push_back({[](Vec2) { return cd(1.0, 0.0); },
                   [](Vec2) { return CVec2{}; },
                   "const_1"});
    out.push_back({[](Vec2 x) { return cd(x.x, 0.0); },
                   [](Vec2) { return CVec2{cd(1.0, 0.0), cd(0.0, 0.0)}; },
                   "coord_x"});
    out.push_back({[](Vec2 x) { return cd(x.x * x.y, 0.0); },
                   [](Vec2 x) { return CVec2{cd(x.y, 0.0), cd(x.x, 0.0)}; },
                   "poly_xy"});
    const double k0 = 2.0;
    out.push_back({[k0](Vec2 x) {
                       double r = x.norm();
                       return cd(bessel_jy(0, std::max(r * k0, 1e-12)).j, 0.0);
                   },
                   [k0](Vec2 x) {
                       double r = x.norm();
                       if (r < 1e-9) return CVec2{};
                       double dj = -k0 * bessel_jy(1, r * k0).j;
                       return CVec2{cd(dj * x.x / r, 0.0), cd(dj * x.y / r, 0.0)};
                   },
                   "fourier_bessel_J0"});
    // seeded trig polynomials a cos(k1.x) + b sin(k2.x)
    Rng rng(seed);
    for (int i = int(out.size()); i < count; ++i) {
        const double a = rng.uniform(-1.0, 1.0), b = rng.uniform(-1.0, 1.0);
        const Vec2 k1{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        const Vec2 k2{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
        out.push_back(
            {[=](Vec2 x) { return cd(a * std::cos(k1.dot(x)) + b * std::sin(k2.dot(x)), 0.0); },
             [=](Vec2 x) {
                 const double s1 = -a * std::sin(k1.dot(x)), c2 = b * std::cos(k2.dot(x));
                 return CVec2{cd(s1 * k1.x + c2 * k2.x, 0.0), cd(s1 * k1.y + c2 * k2.y, 0.0)};
             },
             "trig_" + std::to_string(i)});
    }
    return out;
}

namespace {

// C^infty bump psi(q) = exp(1 - 1/(1-q)) for q = (|x-c|/R)^2 < 1, else 0
struct Bump {
    Vec2 c;
    double R;
    double value(Vec2 x) const {
        const double q = (x - c).norm2() / (R * R);
        if (q >= 1.0) return 0.0;
        return std::exp(1.0 - 1.0 / (1.0 - q));
    }
    Vec2 grad(Vec2 x) const {
        const double q = (x - c).norm2() / (R * R);
        if (q >= 1.0) return {};
        const double d = 1.0 - q;
        const double f = std::exp(1.0 - 1.0 / d) * (-1.0 / (d * d)) * (2.0 / (R * R));
        return (x - c) * f;
    }
};

}  // namespace

std::vector<VectorField> korn_test_family(std::uint64_t seed, int count,
                                          double support_radius, Vec2 center) {
    std::vector<VectorField> out;
    Rng rng(seed);
    Bump psi{center, support_radius};
    // gradient-of-bump field: symmetric gradient, equality case
    out.push_back({[psi](Vec2 x) {
                       Vec2 g = psi.grad(x);
                       return CVec2{cd(g.x, 0.0), cd(g.y, 0.0)};
                   },
                   [psi](Vec2 x) {
                       // Hessian of the bump by central differences
                       const double h = 1e-5;
                       Vec2 gx1 = psi.grad({x.x + h, x.y}), gx0 = psi.grad({x.x - h, x.y});
                       Vec2 gy1 = psi.grad({x.x, x.y + h}), gy0 = psi.grad({x.x, x.y - h});
                       return Mat2c{cd((gx1.x - gx0.x) / (2 * h), 0.0),
                                    cd((gy1.x - gy0.x) / (2 * h), 0.0),
                                    cd((gx1.y - gx0.y) / (2 * h), 0.0),
                                    cd((gy1.y - gy0.y) / (2 * h), 0.0)};
                   },
                   "grad_bump", support_radius, center});
    // bump-modulated rotation: strict inequality case
    out.push_back({[psi, center](Vec2 x) {
                       const double b = psi.value(x);
                       Vec2 d = x - center;
                       return CVec2{cd(-b * d.y, 0.0), cd(b * d.x, 0.0)};
                   },
                   [psi, center](Vec2 x) {
                       const double b = psi.value(x);
                       Vec2 g = psi.grad(x);
                       Vec2 d = x - center;
                       return Mat2c{cd(-g.x * d.y, 0.0), cd(-g.y * d.y - b, 0.0),
                                    cd(g.x * d.x + b, 0.0), cd(g.y * d.x, 0.0)};
                   },
                   "bump_rotation", support_radius, center});
    for (int i = int(out.size()); i < count; ++i) {
        // bump times a random polynomial direction field
        const double a1 = rng.uniform(-1, 1), a2 = rng.uniform(-1, 1);
        const double b1 = rng.uniform(-1, 1), b2 = rng.uniform(-1, 1);
        const double c1 = rng.uniform(-1, 1), c2 = rng.uniform(-1, 1);
        auto val = [=](Vec2 x) {
            const double b = psi.value(x);
            Vec2 d = x - center;
            return CVec2{cd(b * (a1 + b1 * d.x + c1 * d.y), 0.0),
                         cd(b * (a2 + b2 * d.x + c2 * d.y), 0.0)};
        };
        auto grad = [=](Vec2 x) {
            const double b = psi.value(x);
            Vec2 g = psi.grad(x);
            Vec2 d = x - center;
            const double p1 = a1 + b1 * d.x + c1 * d.y;
            const double p2 = a2 + b2 * d.x + c2 * d.y;
            return Mat2c{cd(g.x * p1 + b * b1, 0.0), cd(g.y * p1 + b * c1, 0.0),
                         cd(g.x * p2 + b * b2, 0.0), cd(g.y * p2 + b * c2, 0.0)};
        };
        out.push_back({val, grad, "bump_poly_" + std::to_string(i), support_radius, center});
    }
    return out;
}

namespace {

double sup_on_ball(const ScalarSampler& u, Vec2 c, double radius, int nr, int nt) {
    double sup = 0.0;
    for (int i = 0; i < nr; ++i) {
        const double r = radius * (i + 1.0) / nr;
        for (int k = 0; k < nt; ++k) {
            const double th = 2.0 * pi * k / nt;
            sup = std::max(sup, std::abs(u(c + Vec2{r * std::cos(th), r * std::sin(th)})));
        }
    }
    sup = std::max(sup, std::abs(u(c)));
    return sup;
}

}  // namespace

ThreeSpheresProbe three_spheres_exponent(const ScalarSampler& u, ThreeSpheresProbe p) {
    if (!(0.0 < p.s1 && p.s1 < p.s && p.s < p.s2))
        throw invalid_input("three_spheres: need 0 < s1 < s < s2");
    p.sup1 = sup_on_ball(u, p.center, p.s1, p.samples_radial, p.samples_angular);
    p.sup = sup_on_ball(u, p.center, p.s, p.samples_radial, p.samples_angular);
    p.sup2 = sup_on_ball(u, p.center, p.s2, p.samples_radial, p.samples_angular);
    // nested sets force monotonicity up to sampling noise
    const double tol = 1e-9 * p.sup2;
    if (p.sup1 >= p.sup2 - tol || p.sup1 <= 0.0 || p.sup <= 0.0) {
        p.beta.reset();  // degenerate probe
        return p;
    }
    p.beta = std::log(p.sup / p.sup2) / std::log(p.sup1 / p.sup2);
    return p;
}

ChainResult propagate_smallness(const std::function<CVec2(Vec2)>& field, Vec2 x0,
                                Vec2 direction, double ell, double s,
                                const std::vector<BoundaryCurve>& scatterers,
                                int samples_radial, int samples_angular) {
    if (!(ell > 0.0) || !(s > 0.0)) throw invalid_input("chain: ell and s must be positive");
    const Vec2 dir = direction.normalized();
    const int m = static_cast<int>(std::ceil(2.0 * ell / s)) + 1;
    ChainResult out;
    out.radius = s;
    out.centers.reserve(m);
    for (int i = 0; i < m; ++i) out.centers.push_back(x0 + dir * (0.5 * s * i));

    for (const Vec2& c : out.centers)
        for (const BoundaryCurve& K : scatterers) {
            double dmin = 1e300;
            for (int k = 0; k < 1024; ++k)
                dmin = std::min(dmin, (c - K.point(2.0 * pi * k / 1024)).norm());
            if (dmin < s || K.contains(c))
                throw invalid_input("chain: ball intersects a scatterer");
        }

    out.sup_norms.reserve(m);
    for (const Vec2& c : out.centers) {
        double sup = 0.0;
        for (int i = 0; i < samples_radial; ++i) {
            const double r = s * (i + 1.0) / samples_radial;
            for (int k = 0; k < samples_angular; ++k) {
                const double th = 2.0 * pi * k / samples_angular;
                sup = std::max(sup,
                               field(c + Vec2{r * std::cos(th), r * std::sin(th)}).norm());
            }
        }
        out.sup_norms.push_back(sup);
    }
    for (int i = 0; i + 1 < m; ++i) {
        const double a = out.sup_norms[i], b = out.sup_norms[i + 1];
        out.step_exponents.push_back(
            (a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0) ? std::log(b) / std::log(a)
                                                       : std::numeric_limits<double>::quiet_NaN());
    }
    return out;
}

}  // namespace elast
