// Scatterer boundary curves, a-priori regularity data, Hausdorff-type
// distances between scatterers, and symmetric-difference areas.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "elastoscat/core.hpp"
#include "elastoscat/media.hpp"

namespace elast {

enum class CurveFamily { disc, ellipse, kite, radial_perturbation };

struct CurvePoint {
    Vec2 z, dz, ddz;   // point, first and second parameter derivative
    double speed;      // |dz|
    Vec2 tangent, normal;  // unit; normal points out of the scatterer
    double curvature;
};

// Smooth simple closed curve z(t), t in [0, 2pi), counterclockwise.
class BoundaryCurve {
public:
    static BoundaryCurve disc(double r0, Vec2 center = {});
    static BoundaryCurve ellipse(double a, double b, Vec2 center = {});
    // the standard kite benchmark: (cos t + 0.65 cos 2t - 0.65, 1.5 sin t)
    static BoundaryCurve kite(Vec2 center = {});
    // r(theta) = r0 (1 + delta cos(m theta)); requires |delta| (1 + m^2) < 1
    static BoundaryCurve radial_perturbation(double r0, double delta, int m,
                                             Vec2 center = {});

    CurveFamily family() const { return family_; }
    Vec2 center() const { return center_; }
    double param(int which) const;  // family parameters (r0/a, delta/b, m)

    CurvePoint at(double t) const;
    Vec2 point(double t) const { return at(t).z; }

    // radius of the smallest origin-centred disc containing the curve
    double bounding_radius() const;
    bool contains(Vec2 x) const;  // strict interior test (analytic per family)

private:
    BoundaryCurve(CurveFamily f, Vec2 c, double p0, double p1, int m)
        : family_(f), center_(c), p0_(p0), p1_(p1), m_(m) {}
    CurveFamily family_;
    Vec2 center_;
    double p0_ = 0.0, p1_ = 0.0;
    int m_ = 0;
};

// The a-priori data of the scatterer class.
struct RegularityParams {
    double r = 0.1, L = 1.0, R = 2.0, alpha = 0.5, H0 = 0.01;

    // all positive, alpha in (0,1), H0 < H1(medium, N); throws invalid_input
    void validate(const ElasticMedium& medium, int N) const;
};

struct DistanceTriple {
    double d;        // sup over boundary points outside the other scatterer
    double d_hat;    // Hausdorff distance of the boundaries
    double d_tilde;  // Hausdorff distance of the filled regions
};

// Dense-sampling distance computation; m >= 256 samples per curve required.
DistanceTriple distances(const BoundaryCurve& K, const BoundaryCurve& K2, int m = 2048);

struct AreaResult {
    double value;
    std::optional<double> std_error;  // set for the Monte Carlo path
};

enum class AreaMethod { automatic, quadrature, monte_carlo };

// |K delta K2|. Same-centre star-shaped pairs use radial quadrature
// (relative accuracy ~1e-3 or better); anything else uses seeded Monte Carlo
// with the standard error reported.
AreaResult area_symmetric_difference(const BoundaryCurve& K, const BoundaryCurve& K2,
                                     AreaMethod method = AreaMethod::automatic,
                                     std::uint64_t seed = 0x9e3779b97f4a7c15ull,
                                     std::size_t mc_samples = 4'000'000);

// true iff area_excess <= H0 (inclusive) with valid a-priori data H0 < H1
bool closeness_check(double area_excess, const RegularityParams& params,
                     const ElasticMedium& medium, int N);

const char* family_name(CurveFamily f);

}  // namespace elast
