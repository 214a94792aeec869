// Numerical verification of the functional inequalities (Friedrichs, Maz'ya,
// first Korn) and of the quantitative unique-continuation mechanisms
// (three-spheres interpolation exponent, smallness propagation along a chain
// of balls).
#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "elastoscat/core.hpp"
#include "elastoscat/geometry.hpp"
#include "elastoscat/media.hpp"

namespace elast {

// scalar test function with gradient
struct ScalarField {
    std::function<cd(Vec2)> value;
    std::function<CVec2(Vec2)> gradient;
    std::string name;
};

// vector test field with gradient matrix (d u_i / d x_j)
struct VectorField {
    std::function<CVec2(Vec2)> value;
    std::function<Mat2c(Vec2)> gradient;
    std::string name;
    double support_radius = 0.0;  // compactly supported fields: |x - c| >= radius => 0
    Vec2 support_center{};
};

enum class DomainShape { disc, square, annulus, perturbed_disc };

// Bounded test domain with interior and boundary quadrature. The interior
// rule is tensor Gauss-Legendre (radial/cartesian) by trapezoid in the angle;
// resolution doubles cleanly for the convergence guard.
class TestDomain {
public:
    static TestDomain disc(double radius, int nr = 96, int nt = 256);
    static TestDomain square(double side, int nx = 128);  // centred at origin
    static TestDomain annulus(double r0, double r1, int nr = 96, int nt = 256);
    static TestDomain perturbed_disc(double r0, double delta, int m, int nr = 96,
                                     int nt = 256);

    DomainShape shape() const { return shape_; }
    double area() const;
    double boundary_measure() const;
    // distance from an interior point to the domain boundary
    double boundary_clearance(Vec2 c) const;

    cd integrate(const std::function<cd(Vec2)>& f) const;            // over the domain
    cd integrate_boundary(const std::function<cd(Vec2)>& f) const;   // over its boundary

    // same rules at doubled resolution (quadrature convergence guard)
    TestDomain refined() const;

    std::string label() const;

private:
    TestDomain() = default;
    DomainShape shape_{};
    double p0_ = 0.0, p1_ = 0.0;
    int m_ = 0;
    int nr_ = 0, nt_ = 0;
};

struct InequalityResult {
    double lhs, rhs;
    bool holds;
};

// ||u||_L2 <= 4 C(N) |O|^{1/2N} [ |O|^{1/2N} ||grad u||_L2 + ||u||_{L2(dO)} ]
InequalityResult friedrichs_check(const TestDomain& domain, const ScalarField& u, int N = 2);

// ||u||_{L^{N/(N-1)}} <= C(N) [ ||grad u||_L1 + ||u||_{L1(dO)} ]
InequalityResult mazya_check(const TestDomain& domain, const ScalarField& u, int N = 2);

struct KornResult {
    double grad_sq, sym_sq;
    bool holds;
};

// ||grad u||^2 <= 2 ||E u||^2 for compactly supported u; the support must
// stay strictly inside the domain or the check is refused
KornResult korn_check(const TestDomain& domain, const VectorField& u);

// built-in seeded families
std::vector<ScalarField> scalar_test_family(std::uint64_t seed, int count);
std::vector<VectorField> korn_test_family(std::uint64_t seed, int count,
                                          double support_radius, Vec2 center = {});

using ScalarSampler = std::function<cd(Vec2)>;

struct ThreeSpheresProbe {
    Vec2 center{};
    double s1, s, s2;
    double sup1 = 0.0, sup = 0.0, sup2 = 0.0;
    std::optional<double> beta;  // empty: degenerate probe (equal norms)
    int samples_radial = 128, samples_angular = 128;
};

// sup-norm interpolation exponent beta* with |u|_s = |u|_{s2}^{1-b} |u|_{s1}^b
ThreeSpheresProbe three_spheres_exponent(const ScalarSampler& u, ThreeSpheresProbe probe);

struct ChainResult {
    std::vector<Vec2> centers;
    double radius;
    std::vector<double> sup_norms;
    std::vector<double> step_exponents;  // a_i with sup_{i+1} ~ sup_i^{a_i}
};

// straight regular chain from x0 towards direction, length ell, ball radius s,
// centres s/2 apart, m = ceil(2 ell / s) + 1 balls; refused if any ball comes
// closer than s to one of the scatterer boundaries
ChainResult propagate_smallness(const std::function<CVec2(Vec2)>& field, Vec2 x0,
                                Vec2 direction, double ell, double s,
                                const std::vector<BoundaryCurve>& scatterers,
                                int samples_radial = 64, int samples_angular = 64);

}  // namespace elast
