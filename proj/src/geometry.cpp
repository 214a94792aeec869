#include "elastoscat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "elastoscat/rng.hpp"

namespace elast {

BoundaryCurve BoundaryCurve::disc(double r0, Vec2 c) {
    if (!(r0 > 0.0)) throw invalid_input("disc: radius must be positive");
    return {CurveFamily::disc, c, r0, 0.0, 0};
}

BoundaryCurve BoundaryCurve::ellipse(double a, double b, Vec2 c) {
    if (!(a > 0.0) || !(b > 0.0)) throw invalid_input("ellipse: semi-axes must be positive");
    return {CurveFamily::ellipse, c, a, b, 0};
}

BoundaryCurve BoundaryCurve::kite(Vec2 c) { return {CurveFamily::kite, c, 0.0, 0.0, 0}; }

BoundaryCurve BoundaryCurve::radial_perturbation(double r0, double delta, int m, Vec2 c) {
    if (!(r0 > 0.0)) throw invalid_input("radial_perturbation: r0 must be positive");
    if (m < 0) throw invalid_input("radial_perturbation: m must be nonnegative");
    if (!(std::abs(delta) * (1.0 + m * m) < 1.0))
        throw invalid_input("radial_perturbation: |delta| (1 + m^2) must be < 1");
    return {CurveFamily::radial_perturbation, c, r0, delta, m};
}

double BoundaryCurve::param(int which) const {
    switch (which) {
        case 0: return p0_;
        case 1: return p1_;
        default: return m_;
    }
}

CurvePoint BoundaryCurve::at(double t) const {
    CurvePoint p;
    double ct = std::cos(t), st = std::sin(t);
    switch (family_) {
        case CurveFamily::disc: {
            p.z = {p0_ * ct, p0_ * st};
            p.dz = {-p0_ * st, p0_ * ct};
            p.ddz = {-p.z.x, -p.z.y};
            break;
        }
        case CurveFamily::ellipse: {
            p.z = {p0_ * ct, p1_ * st};
            p.dz = {-p0_ * st, p1_ * ct};
            p.ddz = {-p.z.x, -p.z.y};
            break;
        }
        case CurveFamily::kite: {
            double c2 = std::cos(2 * t), s2 = std::sin(2 * t);
            p.z = {ct + 0.65 * c2 - 0.65, 1.5 * st};
            p.dz = {-st - 1.3 * s2, 1.5 * ct};
            p.ddz = {-ct - 2.6 * c2, -1.5 * st};
            break;
        }
        case CurveFamily::radial_perturbation: {
            double cm = std::cos(m_ * t), sm = std::sin(m_ * t);
            double r = p0_ * (1.0 + p1_ * cm);
            double rp = -p0_ * p1_ * m_ * sm;
            double rpp = -p0_ * p1_ * m_ * m_ * cm;
            p.z = {r * ct, r * st};
            p.dz = {rp * ct - r * st, rp * st + r * ct};
            p.ddz = {(rpp - r) * ct - 2.0 * rp * st, (rpp - r) * st + 2.0 * rp * ct};
            break;
        }
    }
    p.z = p.z + center_;
    p.speed = p.dz.norm();
    p.tangent = p.dz / p.speed;
    p.normal = {p.tangent.y, -p.tangent.x};  // outward for ccw orientation
    p.curvature = (p.dz.x * p.ddz.y - p.dz.y * p.ddz.x) / (p.speed * p.speed * p.speed);
    return p;
}

double BoundaryCurve::bounding_radius() const {
    double rmax = 0.0;
    for (int i = 0; i < 1024; ++i) {
        Vec2 z = point(2.0 * pi * i / 1024);
        rmax = std::max(rmax, z.norm());
    }
    return rmax;
}

bool BoundaryCurve::contains(Vec2 x) const {
    Vec2 q = x - center_;
    switch (family_) {
        case CurveFamily::disc:
            return q.norm2() < p0_ * p0_;
        case CurveFamily::ellipse: {
            double u = q.x / p0_, v = q.y / p1_;
            return u * u + v * v < 1.0;
        }
        case CurveFamily::radial_perturbation: {
            double th = std::atan2(q.y, q.x);
            double r = p0_ * (1.0 + p1_ * std::cos(m_ * th));
            return q.norm2() < r * r;
        }
        case CurveFamily::kite: {
            // even-odd crossing test on a fine polygon
            constexpr int n = 2048;
            bool inside = false;
            Vec2 a = point(0.0) - center_;
            for (int i = 1; i <= n; ++i) {
                Vec2 b = point(2.0 * pi * i / n) - center_;
                if ((a.y > q.y) != (b.y > q.y)) {
                    double xc = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
                    if (q.x < xc) inside = !inside;
                }
                a = b;
            }
            return inside;
        }
    }
    return false;
}

const char* family_name(CurveFamily f) {
    switch (f) {
        case CurveFamily::disc: return "disc";
        case CurveFamily::ellipse: return "ellipse";
        case CurveFamily::kite: return "kite";
        case CurveFamily::radial_perturbation: return "radial_perturbation";
    }
    return "?";
}

void RegularityParams::validate(const ElasticMedium& medium, int N) const {
    if (!(r > 0.0 && L > 0.0 && R > 0.0 && H0 > 0.0))
        throw invalid_input("regularity params: r, L, R, H0 must be positive");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw invalid_input("regularity params: alpha must lie in (0,1)");
    double H1 = closeness_constant(medium, N);
    if (!(H0 < H1))
        throw invalid_input("regularity params: H0 must be below H1 = " + std::to_string(H1));
}

namespace {

struct Samples {
    std::vector<Vec2> z;
};

Samples sample(const BoundaryCurve& K, int m) {
    Samples s;
    s.z.reserve(m);
    for (int i = 0; i < m; ++i) s.z.push_back(K.point(2.0 * pi * i / m));
    return s;
}

double dist_to_samples(Vec2 x, const Samples& s) {
    double best = 1e300;
    for (const Vec2& p : s.z) best = std::min(best, (x - p).norm2());
    return std::sqrt(best);
}

}  // namespace

DistanceTriple distances(const BoundaryCurve& K, const BoundaryCurve& K2, int m) {
    if (m < 256) throw invalid_input("distances: need at least 256 samples per curve");
    Samples a = sample(K, m), b = sample(K2, m);

    double d = 0.0, d_hat = 0.0, d_tilde = 0.0;
    for (const Vec2& x : a.z) {
        double db = dist_to_samples(x, b);
        d_hat = std::max(d_hat, db);
        if (!K2.contains(x)) {
            d = std::max(d, db);
            d_tilde = std::max(d_tilde, db);
        }
    }
    for (const Vec2& x : b.z) {
        double da = dist_to_samples(x, a);
        d_hat = std::max(d_hat, da);
        if (!K.contains(x)) {
            d = std::max(d, da);
            d_tilde = std::max(d_tilde, da);
        }
    }
    return {d, d_hat, d_tilde};
}

namespace {

bool star_shaped_pair(const BoundaryCurve& K, const BoundaryCurve& K2) {
    auto star = [](const BoundaryCurve& c) {
        return c.family() == CurveFamily::disc || c.family() == CurveFamily::ellipse ||
               c.family() == CurveFamily::radial_perturbation;
    };
    return star(K) && star(K2) && (K.center() - K2.center()).norm() == 0.0;
}

double radius_at(const BoundaryCurve& K, double th) {
    switch (K.family()) {
        case CurveFamily::disc: return K.param(0);
        case CurveFamily::ellipse: {
            double a = K.param(0), b = K.param(1);
            double c = std::cos(th), s = std::sin(th);
            return a * b / std::sqrt(b * b * c * c + a * a * s * s);
        }
        case CurveFamily::radial_perturbation:
            return K.param(0) * (1.0 + K.param(1) * std::cos(K.param(2) * th));
        default:
            throw numerical_error("radius_at: not star shaped");
    }
}

}  // namespace

AreaResult area_symmetric_difference(const BoundaryCurve& K, const BoundaryCurve& K2,
                                     AreaMethod method, std::uint64_t seed,
                                     std::size_t mc_samples) {
    bool quad_ok = star_shaped_pair(K, K2);
    if (method == AreaMethod::quadrature && !quad_ok)
        throw invalid_input("area: quadrature needs a same-centre star-shaped pair");
    if (method != AreaMethod::monte_carlo && quad_ok) {
        // |K delta K2| = 1/2 int |r1^2 - r2^2| dtheta
        constexpr int nq = 1 << 16;
        double s = 0.0;
        for (int i = 0; i < nq; ++i) {
            double th = 2.0 * pi * i / nq;
            double r1 = radius_at(K, th), r2 = radius_at(K2, th);
            s += std::abs(r1 * r1 - r2 * r2);
        }
        return {0.5 * s * (2.0 * pi / nq), std::nullopt};
    }

    // seeded Monte Carlo over the union bounding box
    double R1 = K.bounding_radius(), R2 = K2.bounding_radius();
    double R = std::max(R1, R2) * 1.02;
    Rng rng(seed);
    std::size_t hits = 0;
    for (std::size_t i = 0; i < mc_samples; ++i) {
        Vec2 x{rng.uniform(-R, R), rng.uniform(-R, R)};
        if (K.contains(x) != K2.contains(x)) ++hits;
    }
    double box = 4.0 * R * R;
    double p = static_cast<double>(hits) / mc_samples;
    double value = box * p;
    double se = box * std::sqrt(std::max(p * (1.0 - p), 0.0) / mc_samples);
    return {value, se};
}

bool closeness_check(double area_excess, const RegularityParams& params,
                     const ElasticMedium& medium, int N) {
    if (area_excess < 0.0) throw invalid_input("closeness_check: negative area");
    params.validate(medium, N);  // enforces H0 < H1
    return area_excess <= params.H0;
}

}  // namespace elast
