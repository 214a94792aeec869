#include "elastoscat/fields.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "elastoscat/rng.hpp"
#include "elastoscat/simd.hpp"
#include "elastoscat/threads.hpp"

namespace elast {

double FarFieldPattern::l2_norm() const {
    double s = 0.0;
    for (std::size_t k = 0; k < theta.size(); ++k) s += std::norm(up[k]) + std::norm(us[k]);
    return std::sqrt(s * 2.0 * pi / theta.size());
}

FarFieldPattern far_field(const ScatteringSolution& sol, int M) {
    if (M < 64) throw invalid_input("far_field: need at least 64 directions");
    const NystromGrid& g = sol.grid;
    const ElasticMedium& med = sol.medium;
    const int n = g.n;
    const double l2m = med.lambda2mu(), mu = med.mu(), lam = med.lambda();
    const double op = med.omega_p(), os = med.omega_s();
    const cd gp = std::polar(1.0, pi / 4.0) / std::sqrt(8.0 * pi * op);
    const cd gs = std::polar(1.0, pi / 4.0) / std::sqrt(8.0 * pi * os);
    const cd ieta(0.0, sol.eta);
    const double h = 2.0 * pi / n;

    FarFieldPattern out;
    out.theta.resize(M);
    out.up.resize(M);
    out.us.resize(M);
    for (int k = 0; k < M; ++k) out.theta[k] = 2.0 * pi * k / M;

    parallel_for(M, [&](std::size_t k) {
        const double th = out.theta[k];
        const Vec2 xh{std::cos(th), std::sin(th)};
        const Vec2 tv = xh.perp();  // Q x_hat
        // phases exp(-i omega_a xh . z_j) through the batch sincos
        thread_local std::vector<double> argp, args, sp, cp, ss, cs;
        argp.resize(n); args.resize(n);
        sp.resize(n); cp.resize(n); ss.resize(n); cs.resize(n);
        for (int j = 0; j < n; ++j) {
            const double d = xh.dot(g.pts[j].z);
            argp[j] = -op * d;
            args[j] = -os * d;
        }
        simd::sincos(argp.data(), n, sp.data(), cp.data());
        simd::sincos(args.data(), n, ss.data(), cs.data());

        cd Sp{}, Ss{}, Dp{}, Ds{};
        for (int j = 0; j < n; ++j) {
            const CVec2& f = sol.density[j];
            const Vec2 nu = g.pts[j].normal;
            const double w = g.pts[j].speed;
            const cd ep{cp[j], sp[j]};
            const cd es{cs[j], ss[j]};
            const cd xf = f.dot_real(xh);
            const cd tf = f.dot_real(tv);
            const cd nf = f.dot_real(nu);
            const double xn = nu.dot(xh), tn = nu.dot(tv);
            Sp += xf * ep * w;
            Ss += tf * es * w;
            Dp += (2.0 * mu * xn * xf + lam * nf) * ep * w;
            Ds += (xn * tf + tn * xf) * es * w;
        }
        Sp *= gp / l2m * h;
        Ss *= gs / mu * h;
        Dp *= gp / l2m * cd(0.0, -op) * h;
        Ds *= gs * cd(0.0, -os) * h;
        out.up[k] = Dp - ieta * Sp;
        out.us[k] = Ds - ieta * Ss;
    });
    return out;
}

double farfield_error(const FarFieldPattern& U, const FarFieldPattern& U2) {
    if (U.theta.size() != U2.theta.size())
        throw invalid_input("farfield_error: direction grids differ");
    double s = 0.0;
    for (std::size_t k = 0; k < U.theta.size(); ++k)
        s += std::norm(U.up[k] - U2.up[k]) + std::norm(U.us[k] - U2.us[k]);
    return std::sqrt(s * 2.0 * pi / U.theta.size());
}

DecomposedField helmholtz_decompose(const FieldSampler& f, const ElasticMedium& med,
                                    Vec2 x, double h) {
    if (!(h > 0.0)) throw invalid_input("helmholtz_decompose: step must be positive");
    const Vec2 ex{h, 0.0}, ey{0.0, h};
    const CVec2 c = f(x);
    const CVec2 xp = f(x + ex), xm = f(x - ex);
    const CVec2 yp = f(x + ey), ym = f(x - ey);
    const CVec2 pp = f(x + ex + ey), pm = f(x + ex - ey);
    const CVec2 mp = f(x - ex + ey), mm = f(x - ex - ey);
    const double h2 = h * h;

    const cd lap_x = (xp.x + xm.x + yp.x + ym.x - 4.0 * c.x) / h2;
    const cd lap_y = (xp.y + xm.y + yp.y + ym.y - 4.0 * c.y) / h2;
    const cd dxx_1 = (xp.x - 2.0 * c.x + xm.x) / h2;
    const cd dyy_2 = (yp.y - 2.0 * c.y + ym.y) / h2;
    const cd dxy_1 = (pp.x - pm.x - mp.x + mm.x) / (4.0 * h2);
    const cd dxy_2 = (pp.y - pm.y - mp.y + mm.y) / (4.0 * h2);
    const cd gd_x = dxx_1 + dxy_2;  // (grad div u)_x
    const cd gd_y = dxy_1 + dyy_2;

    const double op2 = med.omega_p() * med.omega_p();
    const double os2 = med.omega_s() * med.omega_s();
    DecomposedField out;
    out.up = {-gd_x / op2, -gd_y / op2};
    out.us = {(gd_x - lap_x) / os2, (gd_y - lap_y) / os2};
    out.h = h;
    return out;
}

DecomposedField decompose_scattered(const ScatteringSolution& sol, Vec2 x, double h) {
    const double margin = 4.0 * h + sol.grid.node_spacing;
    for (const CurvePoint& p : sol.grid.pts)
        if ((x - p.z).norm() < margin)
            throw near_boundary_error("decompose_scattered: step too large this close to the boundary");
    return helmholtz_decompose([&](Vec2 q) { return evaluate_scattered(sol, q); },
                               sol.medium, x, h);
}

RadiationResidual radiation_residual_of(const FieldSampler& f, const ElasticMedium& med,
                                        double r, int M, double fd_step) {
    RadiationResidual out{0.0, 0.0};
    const double dr = 1e-3;
    for (int k = 0; k < M; ++k) {
        const double th = 2.0 * pi * k / M;
        const Vec2 xh{std::cos(th), std::sin(th)};
        auto dec = [&](double rr) { return helmholtz_decompose(f, med, xh * rr, fd_step); };
        DecomposedField dp = dec(r + dr), dm = dec(r - dr), d0 = dec(r);
        const cd i_op(0.0, med.omega_p()), i_os(0.0, med.omega_s());
        CVec2 ddr_p = (dp.up - dm.up) * cd(1.0 / (2.0 * dr), 0.0);
        CVec2 ddr_s = (dp.us - dm.us) * cd(1.0 / (2.0 * dr), 0.0);
        CVec2 rp = ddr_p - d0.up * i_op;
        CVec2 rs = ddr_s - d0.us * i_os;
        out.res_p = std::max(out.res_p, std::sqrt(r) * rp.norm());
        out.res_s = std::max(out.res_s, std::sqrt(r) * rs.norm());
    }
    return out;
}

RadiationResidual radiation_residual(const ScatteringSolution& sol, double r, int M) {
    const double wavelength = 2.0 * pi / sol.medium.omega_s();
    const double h = 1e-3 * wavelength;  // the far field is smooth: mild step suffices
    return radiation_residual_of([&](Vec2 q) { return evaluate_scattered(sol, q); },
                                 sol.medium, r, M, h);
}

double decay_bound(const ScatteringSolution& sol, double r_lo, double r_hi, int M,
                   int radial_steps) {
    if (!(r_lo > 0.0) || !(r_hi > r_lo)) throw invalid_input("decay_bound: bad radius range");
    std::vector<double> sups(static_cast<std::size_t>(radial_steps));
    parallel_for(radial_steps, [&](std::size_t i) {
        const double r = r_lo * std::pow(r_hi / r_lo, double(i) / (radial_steps - 1));
        double s = 0.0;
        for (int k = 0; k < M; ++k) {
            const double th = 2.0 * pi * k / M;
            CVec2 u = evaluate_scattered(sol, Vec2{std::cos(th), std::sin(th)} * r);
            s = std::max(s, u.norm() * std::sqrt(r));
        }
        sups[i] = s;
    });
    double out = 0.0;
    for (double v : sups) out = std::max(out, v);
    return out;
}

double near_field_error(const ScatteringSolution& a, const ScatteringSolution& b,
                        const NearFieldRegion& region, int probe_count,
                        std::uint64_t seed) {
    if (probe_count < 1) throw invalid_input("near_field_error: need probes");
    const double r0 = region.x0.norm();
    const double spacing = std::max(a.grid.node_spacing, b.grid.node_spacing);
    // conservative region/scatterer separation check
    auto clearance = [&](const ScatteringSolution& s) {
        double dmin = 1e300;
        for (const CurvePoint& p : s.grid.pts) {
            double d = (region.kind == NearFieldRegion::Kind::ball)
                           ? (region.x0 - p.z).norm()
                           : std::abs(p.z.norm() - r0);
            dmin = std::min(dmin, d);
        }
        return dmin;
    };
    if (clearance(a) < region.s_tilde + spacing || clearance(b) < region.s_tilde + spacing)
        throw invalid_input("near_field_error: region intersects a scatterer");

    Rng rng(seed);
    double sup = 0.0;
    for (int i = 0; i < probe_count; ++i) {
        Vec2 x;
        if (region.kind == NearFieldRegion::Kind::ball) {
            const double rr = region.s_tilde * std::sqrt(rng.uniform01());
            const double th = rng.uniform(0.0, 2.0 * pi);
            x = region.x0 + Vec2{rr * std::cos(th), rr * std::sin(th)};
        } else {
            const double lo = r0 - region.s_tilde, hi = r0 + region.s_tilde;
            const double rr = std::sqrt(rng.uniform(lo * lo, hi * hi));
            const double th = rng.uniform(0.0, 2.0 * pi);
            x = {rr * std::cos(th), rr * std::sin(th)};
        }
        CVec2 du = evaluate_field(a, x) - evaluate_field(b, x);
        sup = std::max(sup, du.norm());
    }
    return sup;
}

void write_farfield_csv(std::ostream& os, const FarFieldPattern& p,
                        const std::string& header_comment) {
    if (!header_comment.empty()) {
        std::istringstream lines(header_comment);
        std::string line;
        while (std::getline(lines, line)) os << "# " << line << "\n";
    }
    os << "theta,re_up,im_up,re_us,im_us\n";
    char buf[160];
    for (std::size_t k = 0; k < p.theta.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.theta[k],
                      p.up[k].real(), p.up[k].imag(), p.us[k].real(), p.us[k].imag());
        os << buf;
    }
}

FarFieldPattern read_farfield_csv(std::istream& is) {
    FarFieldPattern p;
    std::string line;
    bool header_seen = false;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        if (!header_seen) {
            if (line.rfind("theta,", 0) != 0)
                throw invalid_input("farfield csv: missing header row");
            header_seen = true;
            continue;
        }
        double th, a, bb, c, d;
        if (std::sscanf(line.c_str(), "%lg,%lg,%lg,%lg,%lg", &th, &a, &bb, &c, &d) != 5)
            throw invalid_input("farfield csv: malformed row: " + line);
        p.theta.push_back(th);
        p.up.emplace_back(a, bb);
        p.us.emplace_back(c, d);
    }
    if (p.theta.empty()) throw invalid_input("farfield csv: no data rows");
    return p;
}

}  // namespace elast
