// Fundamental solutions of the Helmholtz and Navier equations, the traction
// kernel, layer-potential evaluation away from the boundary, and the smooth /
// log / Cauchy split used by the Nystrom quadrature.
//
// In 2-D the Navier fundamental solution has the radial form
//   Phi(x,y) = A(r) I + B(r) rhat rhat^T,     r = |x-y|,
// and its traction in y with unit normal nu is
//   T_y Phi = -lambda (A' + B' + (N-1) B/r) rhat nu^T
//             - mu A' ((rhat.nu) I + nu rhat^T)
//             - 2 mu B' (rhat.nu) rhat rhat^T
//             - mu (B/r) (nu rhat^T + 2 rhat nu^T + (rhat.nu) I
//                         - 4 (rhat.nu) rhat rhat^T).
// A carries a log r singularity (coefficient A_L), A' and B/r carry Cauchy
// parts C_A/r and C_B/r; the cot-type singularity of the double layer reduces
// to the constant matrix (C_Q/2) Q.
#pragma once

#include <span>

#include "elastoscat/core.hpp"
#include "elastoscat/geometry.hpp"
#include "elastoscat/media.hpp"

namespace elast {

// evaluation requested closer to the boundary than the quadrature resolves
struct near_boundary_error : numerical_error {
    using numerical_error::numerical_error;
};

// fundamental solution of Delta u + k^2 u = 0; N = 2 or 3
cd helmholtz_phi(double k, double r, int N);

struct Mat3c {
    cd m[3][3]{};
};

// 3-D Navier fundamental solution and traction (elementary closed forms)
Mat3c navier_phi3(const ElasticMedium& medium, const double x[3], const double y[3]);
Mat3c traction_kernel3(const ElasticMedium& medium, const double y[3], const double nu[3],
                       const double x[3]);

// Radial kernel profile at distance r (2-D, Hankel-based)
struct RadialKernel {
    cd A, B, Ap, Bp;  // A(r), B(r), A'(r), B'(r)
};

// log-coefficient shadow (J-based, real); *_L of A, B, A', B'
struct RadialKernelLog {
    double AL, BL, ApL, BpL;
};

class NavierKernels {
public:
    explicit NavierKernels(const ElasticMedium& medium);

    const ElasticMedium& medium() const { return medium_; }

    RadialKernel radial(double r) const;
    RadialKernelLog radial_log(double r) const;

    // assemble from precomputed Bessel values at z_s = omega_s r, z_p = omega_p r
    RadialKernel radial_from_bessel(double r, double j0s, double y0s, double j1s,
                                    double y1s, double j0p, double y0p, double j1p,
                                    double y1p) const;
    RadialKernelLog radial_log_from_bessel(double r, double j0s, double j1s, double j0p,
                                           double j1p) const;

    Mat2c phi(Vec2 x, Vec2 y) const;                   // Phi(x,y)
    Mat2c traction(Vec2 x, Vec2 y, Vec2 nu) const;     // [T_y Phi(x,y)], |nu| = 1

    static Mat2c traction_assemble(cd Ap, cd Bp, cd B_over_r, Vec2 rhat, Vec2 nu,
                                   double lambda, double mu);

    // Laurent coefficients and Nystrom diagonal constants
    double C_A() const { return c_a_; }
    double C_B() const { return c_b_; }
    double C_Q() const { return c_q_; }   // cot coefficient: M_c = (C_Q/2) Q
    cd A_R0() const { return ar0_; }      // smooth remainder of A at r = 0

private:
    ElasticMedium medium_;
    double c_a_, c_b_, c_q_;
    cd ar0_;
};

enum class LayerKind { single, double_ };

// Trapezoidal evaluation of S(phi)(x) or D(phi)(x) for x off the boundary;
// density sampled at n equispaced parameter nodes. Throws near_boundary_error
// if x is within one node spacing of the curve.
CVec2 layer_potential_eval(LayerKind kind, const ElasticMedium& medium,
                           const BoundaryCurve& curve, std::span<const CVec2> density,
                           Vec2 x);

}  // namespace elast
