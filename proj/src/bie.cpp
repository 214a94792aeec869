#include "elastoscat/bie.hpp"

#include <cmath>

#include "elastoscat/quadrature.hpp"
#include "elastoscat/simd.hpp"
#include "elastoscat/threads.hpp"

namespace elast {

NystromGrid NystromGrid::build(const BoundaryCurve& curve, int n) {
    if (n < 32 || n % 2) throw invalid_input("nystrom grid: n must be even and >= 32");
    NystromGrid g;
    g.n = n;
    g.t.resize(n);
    g.pts.resize(n);
    double perim = 0.0;
    for (int j = 0; j < n; ++j) {
        g.t[j] = 2.0 * pi * j / n;
        g.pts[j] = curve.at(g.t[j]);
        if (!(g.pts[j].speed > 0.0))
            throw invalid_input("nystrom grid: degenerate parametrization");
        perim += g.pts[j].speed * (2.0 * pi / n);
    }
    g.node_spacing = perim / n;
    return g;
}

namespace {

// Bessel data for one target row against all source nodes
struct RowScratch {
    std::vector<double> zs, zp;                      // omega_{s,p} * r
    std::vector<double> j0s, y0s, j1s, y1s;
    std::vector<double> j0p, y0p, j1p, y1p;
    std::vector<double> r;                           // |x - z_j|
    std::vector<Vec2> rv;

    void resize(int n) {
        zs.resize(n); zp.resize(n);
        j0s.resize(n); y0s.resize(n); j1s.resize(n); y1s.resize(n);
        j0p.resize(n); y0p.resize(n); j1p.resize(n); y1p.resize(n);
        r.resize(n); rv.resize(n);
    }
};

// fill distances and batched Bessel values for target x; the skip index (a
// grid diagonal) gets a dummy argument
void fill_row(const ElasticMedium& med, const NystromGrid& g, Vec2 x, int skip,
              RowScratch& s) {
    const int n = g.n;
    s.resize(n);
    for (int j = 0; j < n; ++j) {
        s.rv[j] = x - g.pts[j].z;
        double r = s.rv[j].norm();
        if (j == skip) r = 1.0;
        s.r[j] = r;
        s.zs[j] = med.omega_s() * r;
        s.zp[j] = med.omega_p() * r;
    }
    simd::bessel_j0y0j1y1(s.zs.data(), n, s.j0s.data(), s.y0s.data(), s.j1s.data(),
                          s.y1s.data());
    simd::bessel_j0y0j1y1(s.zp.data(), n, s.j0p.data(), s.y0p.data(), s.j1p.data(),
                          s.y1p.data());
}

inline void add_block(CMatrix& m, int i, int j, const Mat2c& blk) {
    m(2 * i, 2 * j) += blk.a;
    m(2 * i, 2 * j + 1) += blk.b;
    m(2 * i + 1, 2 * j) += blk.c;
    m(2 * i + 1, 2 * j + 1) += blk.d;
}

}  // namespace

CMatrix assemble(const ElasticMedium& medium, const BoundaryCurve& curve, int n,
                 double eta) {
    if (!(eta > 0.0)) throw invalid_input("assemble: eta must be positive");
    NystromGrid g = NystromGrid::build(curve, n);
    NavierKernels K(medium);
    const auto R = kress_log_weights(n);
    const auto cw = hilbert_weights(n);
    const Mat2c Q = Mat2c::rot90();
    const Mat2c Mc = (0.5 * K.C_Q()) * Q;
    const double lam = medium.lambda(), mu = medium.mu();
    const cd ieta(0.0, eta);
    const double h = 2.0 * pi / n;

    CMatrix A(2 * n, 2 * n);
    parallel_for(n, [&](std::size_t iu) {
        const int i = static_cast<int>(iu);
        thread_local RowScratch s;
        fill_row(medium, g, g.pts[i].z, i, s);
        for (int j = 0; j < n; ++j) {
            Mat2c blk;
            if (j == i) {
                const Vec2 tau = g.pts[i].tangent;
                const Mat2c W = Mat2c::outer(tau, tau);
                const double w = g.pts[i].speed;
                const double wp = g.pts[i].dz.dot(g.pts[i].ddz) / w;
                const Mat2c M1S = (0.5 * K.C_A() * w) * Mat2c::identity();
                const Mat2c M2S =
                    w * ((K.A_R0() + K.C_A() * std::log(w)) * Mat2c::identity() +
                         cd(K.C_B()) * W);
                const Mat2c M2D = (K.C_Q() * wp / (2.0 * w)) * Q -
                                  (0.5 * g.pts[i].curvature * w) *
                                      (K.C_Q() * Mat2c::identity() +
                                       (4.0 * mu * K.C_B()) * W);
                blk = h * M2D - ieta * (R[0] * M1S + h * M2S);
                blk.a += 0.5;
                blk.d += 0.5;
            } else {
                const double r = s.r[j];
                const Vec2 rh = s.rv[j] / r;
                const double wj = g.pts[j].speed;
                const Vec2 nu = g.pts[j].normal;
                const Mat2c W = Mat2c::outer(rh, rh);
                const RadialKernel rk = K.radial_from_bessel(
                    r, s.j0s[j], s.y0s[j], s.j1s[j], s.y1s[j], s.j0p[j], s.y0p[j],
                    s.j1p[j], s.y1p[j]);
                const RadialKernelLog rl =
                    K.radial_log_from_bessel(r, s.j0s[j], s.j1s[j], s.j0p[j], s.j1p[j]);
                const double dt = g.t[i] - g.t[j];
                const double s4 = 4.0 * std::sin(0.5 * dt) * std::sin(0.5 * dt);
                const double lns4 = std::log(s4);
                // single layer split
                const Mat2c M1S = (0.5 * wj) * (cd(rl.AL) * Mat2c::identity() + cd(rl.BL) * W);
                const Mat2c MS = wj * (rk.A * Mat2c::identity() + rk.B * W);
                const Mat2c M2S = MS - lns4 * M1S;
                // double layer split
                const Mat2c MD =
                    wj * NavierKernels::traction_assemble(rk.Ap, rk.Bp, rk.B / r, rh, nu,
                                                          lam, mu);
                const Mat2c M1D = (0.5 * wj) * NavierKernels::traction_assemble(
                                                   rl.ApL, rl.BpL, rl.BL / r, rh, nu, lam, mu);
                const double cotv = 1.0 / std::tan(0.5 * (g.t[j] - g.t[i]));
                const Mat2c M2D = MD - cotv * Mc - lns4 * M1D;
                const double Rij = R[(i - j + n) % n];
                const double cij = cw[(j - i + n) % n];
                blk = cij * Mc + Rij * M1D + h * M2D - ieta * (Rij * M1S + h * M2S);
            }
            add_block(A, i, j, blk);
        }
    });
    return A;
}

ScatteringSolution solve_dirichlet(const ElasticMedium& medium, const BoundaryCurve& curve,
                                   const IncidentPlaneWave& incident, int n) {
    const double eta = medium.omega_s();
    CMatrix A = assemble(medium, curve, n, eta);
    const double anorm = A.norm1();
    NystromGrid g = NystromGrid::build(curve, n);

    std::vector<cd> rhs(2 * n);
    for (int j = 0; j < n; ++j) {
        CVec2 ui = incident.evaluate(medium, g.pts[j].z);
        rhs[2 * j] = -ui.x;
        rhs[2 * j + 1] = -ui.y;
    }

    LuFactor lu(std::move(A));
    lu.solve_in_place(rhs);
    const double cond = lu.cond1_estimate(anorm);
    if (!(cond < 1e12))
        throw numerical_error("solve_dirichlet: system numerically singular, cond ~ " +
                              std::to_string(cond));

    DensityVector density(n);
    for (int j = 0; j < n; ++j) density[j] = {rhs[2 * j], rhs[2 * j + 1]};

    ScatteringSolution sol{medium, curve, std::move(g), incident, eta,
                           std::move(density), 0.0, cond};
    sol.boundary_residual = boundary_residual_sup(sol, 4);
    return sol;
}

namespace {

CVec2 scattered_at(const ScatteringSolution& sol, Vec2 x, RowScratch& s) {
    const NystromGrid& g = sol.grid;
    const ElasticMedium& med = sol.medium;
    NavierKernels K(med);
    fill_row(med, g, x, -1, s);
    const double lam = med.lambda(), mu = med.mu();
    const cd ieta(0.0, sol.eta);
    const double h = 2.0 * pi / g.n;
    CVec2 acc{};
    for (int j = 0; j < g.n; ++j) {
        const double r = s.r[j];
        const Vec2 rh = s.rv[j] / r;
        const RadialKernel rk =
            K.radial_from_bessel(r, s.j0s[j], s.y0s[j], s.j1s[j], s.y1s[j], s.j0p[j],
                                 s.y0p[j], s.j1p[j], s.y1p[j]);
        const Mat2c W = Mat2c::outer(rh, rh);
        const Mat2c Phi = rk.A * Mat2c::identity() + rk.B * W;
        const Mat2c TK = NavierKernels::traction_assemble(rk.Ap, rk.Bp, rk.B / r, rh,
                                                          g.pts[j].normal, lam, mu);
        const Mat2c Kx = TK - ieta * Phi;
        acc = acc + (Kx * sol.density[j]) * cd(g.pts[j].speed * h, 0.0);
    }
    return acc;
}

}  // namespace

CVec2 evaluate_scattered(const ScatteringSolution& sol, Vec2 x) {
    for (const CurvePoint& p : sol.grid.pts)
        if ((x - p.z).norm() < sol.grid.node_spacing)
            throw near_boundary_error("evaluate_scattered: point too close to the boundary");
    if (sol.curve.contains(x))
        throw invalid_input("evaluate_scattered: point inside the scatterer");
    RowScratch s;
    return scattered_at(sol, x, s);
}

CVec2 evaluate_field(const ScatteringSolution& sol, Vec2 x) {
    CVec2 us = evaluate_scattered(sol, x);
    CVec2 ui = sol.incident.evaluate(sol.medium, x);
    return us + ui;
}

namespace {

// exterior boundary limit of u^scat at parameter t; the three singular-rule
// weights against node j arrive through tables indexed by j
CVec2 boundary_limit_tabulated(const ScatteringSolution& sol, const NavierKernels& K,
                               double t, const double* Rw, const double* cww,
                               const double* Kw, RowScratch& s) {
    const NystromGrid& g = sol.grid;
    const int n = g.n;
    const Mat2c Mc = (0.5 * K.C_Q()) * Mat2c::rot90();
    const double lam = sol.medium.lambda(), mu = sol.medium.mu();
    const cd ieta(0.0, sol.eta);
    const double h = 2.0 * pi / n;
    const CurvePoint cp = sol.curve.at(t);

    fill_row(sol.medium, g, cp.z, -1, s);
    CVec2 acc{};
    CVec2 interp{};
    for (int j = 0; j < n; ++j) {
        const double dt = t - g.t[j];
        const double r = s.r[j];
        const Vec2 rh = s.rv[j] / r;
        const double wj = g.pts[j].speed;
        const Vec2 nu = g.pts[j].normal;
        const Mat2c W = Mat2c::outer(rh, rh);
        const RadialKernel rk = K.radial_from_bessel(r, s.j0s[j], s.y0s[j], s.j1s[j],
                                                     s.y1s[j], s.j0p[j], s.y0p[j],
                                                     s.j1p[j], s.y1p[j]);
        const RadialKernelLog rl =
            K.radial_log_from_bessel(r, s.j0s[j], s.j1s[j], s.j0p[j], s.j1p[j]);
        const double s4 = 4.0 * std::sin(0.5 * dt) * std::sin(0.5 * dt);
        const double lns4 = std::log(s4);
        const Mat2c M1S = (0.5 * wj) * (cd(rl.AL) * Mat2c::identity() + cd(rl.BL) * W);
        const Mat2c MS = wj * (rk.A * Mat2c::identity() + rk.B * W);
        const Mat2c M2S = MS - lns4 * M1S;
        const Mat2c MD = wj * NavierKernels::traction_assemble(rk.Ap, rk.Bp, rk.B / r,
                                                               rh, nu, lam, mu);
        const Mat2c M1D = (0.5 * wj) * NavierKernels::traction_assemble(
                                           rl.ApL, rl.BpL, rl.BL / r, rh, nu, lam, mu);
        const double cotv = 1.0 / std::tan(-0.5 * dt);
        const Mat2c M2D = MD - cotv * Mc - lns4 * M1D;
        const Mat2c blk = cww[j] * Mc + Rw[j] * M1D + h * M2D - ieta * (Rw[j] * M1S + h * M2S);
        acc = acc + blk * sol.density[j];
        interp = interp + sol.density[j] * cd(Kw[j], 0.0);
    }
    return acc + interp * cd(0.5, 0.0);
}

}  // namespace

CVec2 boundary_scattered_limit(const ScatteringSolution& sol, double t) {
    const int n = sol.grid.n;
    NavierKernels K(sol.medium);
    std::vector<double> Rw(n), cww(n), Kw(n);
    for (int j = 0; j < n; ++j) {
        const double dt = t - sol.grid.t[j];
        Rw[j] = kress_log_weight_at(n, dt);
        cww[j] = hilbert_weight_at(n, dt);
        Kw[j] = trig_interp_weight_at(n, dt);
    }
    RowScratch s;
    return boundary_limit_tabulated(sol, K, t, Rw.data(), cww.data(), Kw.data(), s);
}

double boundary_residual_sup(const ScatteringSolution& sol, int probes_per_interval) {
    const int n = sol.grid.n;
    const int L = probes_per_interval;
    const double h = 2.0 * pi / n;
    NavierKernels K(sol.medium);
    double sup = 0.0;
    for (int l = 0; l < L; ++l) {
        const double delta = h * (l + 0.5) / L;
        // probes sit at t_i + delta, so the weights are circulant in i - j
        std::vector<double> Rt(n), ct(n), Kt(n);
        for (int k = 0; k < n; ++k) {
            const double dt = delta + h * k;
            Rt[k] = kress_log_weight_at(n, dt);
            ct[k] = hilbert_weight_at(n, dt);
            Kt[k] = trig_interp_weight_at(n, dt);
        }
        std::vector<double> sups(static_cast<std::size_t>(n));
        parallel_for(n, [&](std::size_t iu) {
            const int i = static_cast<int>(iu);
            thread_local RowScratch s;
            thread_local std::vector<double> Rw, cww, Kw;
            Rw.resize(n); cww.resize(n); Kw.resize(n);
            for (int j = 0; j < n; ++j) {
                const int k = (i - j + n) % n;
                Rw[j] = Rt[k];
                cww[j] = ct[k];
                Kw[j] = Kt[k];
            }
            const double t = sol.grid.t[i] + delta;
            CVec2 us = boundary_limit_tabulated(sol, K, t, Rw.data(), cww.data(),
                                                Kw.data(), s);
            CVec2 ui = sol.incident.evaluate(sol.medium, sol.curve.point(t));
            sups[iu] = (us + ui).norm();
        });
        for (double v : sups) sup = std::max(sup, v);
    }
    return sup;
}

}  // namespace elast
