// Nystrom discretization and solution of the exterior rigid-scatterer
// (Dirichlet) problem via the combined-field representation
//   u^scat = D(phi) - i eta S(phi),    (1/2 I + D - i eta S) phi = -u^inc,
// with eta = omega_s. Global trigonometric quadrature: Kress log weights for
// the weakly singular parts and the Hilbert rule for the constant-coefficient
// Cauchy part of the elastic double layer.
#pragma once

#include <vector>

#include "elastoscat/core.hpp"
#include "elastoscat/geometry.hpp"
#include "elastoscat/kernels.hpp"
#include "elastoscat/linalg.hpp"
#include "elastoscat/media.hpp"

namespace elast {

struct NystromGrid {
    int n = 0;
    std::vector<double> t;        // t_j = 2 pi j / n
    std::vector<CurvePoint> pts;  // curve data at the nodes
    double node_spacing = 0.0;    // perimeter / n

    static NystromGrid build(const BoundaryCurve& curve, int n);  // n even, >= 32
};

using DensityVector = std::vector<CVec2>;  // one complex 2-vector per node

struct ScatteringSolution {
    ElasticMedium medium;
    BoundaryCurve curve;
    NystromGrid grid;
    IncidentPlaneWave incident;
    double eta;
    DensityVector density;
    double boundary_residual;  // sup |u| over 4n off-node boundary probes
    double cond_estimate;
};

// dense matrix of (1/2 I + D - i eta S), 2n x 2n, interleaved components
CMatrix assemble(const ElasticMedium& medium, const BoundaryCurve& curve, int n,
                 double eta);

ScatteringSolution solve_dirichlet(const ElasticMedium& medium, const BoundaryCurve& curve,
                                   const IncidentPlaneWave& incident, int n);

// scattered/total field at an exterior point (>= one node spacing from the
// boundary; closer evaluations throw near_boundary_error)
CVec2 evaluate_scattered(const ScatteringSolution& sol, Vec2 x);
CVec2 evaluate_field(const ScatteringSolution& sol, Vec2 x);  // incident + scattered

// one-sided exterior limit of u^scat at boundary parameter t (off-node)
CVec2 boundary_scattered_limit(const ScatteringSolution& sol, double t);

// sup of |u^inc + u^scat| over probes_per_interval * n off-node boundary points
double boundary_residual_sup(const ScatteringSolution& sol, int probes_per_interval = 4);

}  // namespace elast
