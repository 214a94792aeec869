// Far-field patterns, Helmholtz decomposition of sampled fields, radiation
// and decay diagnostics, and the far-/near-field error norms.
#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "elastoscat/bie.hpp"
#include "elastoscat/core.hpp"

namespace elast {

// Sampled far-field pattern on M equispaced directions. up[k] is the
// amplitude along x_hat(theta_k) of the longitudinal part, us[k] the
// amplitude along the tangent Q x_hat of the transversal part, so that
//   u^scat ~ e^{i omega_p r}/sqrt(r) up x_hat + e^{i omega_s r}/sqrt(r) us Q x_hat.
struct FarFieldPattern {
    std::vector<double> theta;
    std::vector<cd> up, us;

    int directions() const { return static_cast<int>(theta.size()); }
    double l2_norm() const;  // trapezoidal L2(S^1) norm of the stacked pattern
};

// analytic asymptotic kernels integrated against the density; M >= 64
FarFieldPattern far_field(const ScatteringSolution& sol, int M);

// trapezoidal L2(S^1) norm of the stacked difference; grids must match
double farfield_error(const FarFieldPattern& U, const FarFieldPattern& U2);

using FieldSampler = std::function<CVec2(Vec2)>;

struct DecomposedField {
    CVec2 up, us;
    double h;
};

// central-difference evaluation of u_p = -grad div(u)/omega_p^2 and
// u_s = (grad div(u) - lap u)/omega_s^2 at x, step h
DecomposedField helmholtz_decompose(const FieldSampler& field, const ElasticMedium& medium,
                                    Vec2 x, double h);
// convenience wrapper for the scattered field of a solution; refuses when x
// is within 4h + node spacing of the boundary
DecomposedField decompose_scattered(const ScatteringSolution& sol, Vec2 x, double h);

// max over M directions of sqrt(r) |(d/dr - i omega_a) u_a(r x_hat)| for
// a = p, s, radial derivative by central differences
struct RadiationResidual {
    double res_p, res_s;
};
RadiationResidual radiation_residual(const ScatteringSolution& sol, double r, int M);
// same probe applied to an arbitrary field (negative controls)
RadiationResidual radiation_residual_of(const FieldSampler& field,
                                        const ElasticMedium& medium, double r, int M,
                                        double fd_step);

// sup of |u^scat(r x_hat)| sqrt(r) over r in [r_lo, r_hi] (geometric sweep) x M directions
double decay_bound(const ScatteringSolution& sol, double r_lo, double r_hi, int M,
                   int radial_steps = 24);

struct NearFieldRegion {
    enum class Kind { ball, annulus } kind;
    Vec2 x0;          // ball centre (ball) / any point at radius |x0| (annulus)
    double s_tilde;   // ball radius / annulus half-width

    static NearFieldRegion ball(Vec2 x0, double s_tilde) {
        return {Kind::ball, x0, s_tilde};
    }
    static NearFieldRegion annulus(Vec2 x0, double s_tilde) {
        return {Kind::annulus, x0, s_tilde};
    }
};

// sup over seeded probe points of |u - u'| for the two total fields
double near_field_error(const ScatteringSolution& a, const ScatteringSolution& b,
                        const NearFieldRegion& region, int probe_count,
                        std::uint64_t seed);

// CSV: theta, re_up, im_up, re_us, im_us at 17 significant digits; header
// lines (if any) are written as '#'-prefixed comments
void write_farfield_csv(std::ostream& os, const FarFieldPattern& p,
                        const std::string& header_comment = {});
FarFieldPattern read_farfield_csv(std::istream& is);

}  // namespace elast
