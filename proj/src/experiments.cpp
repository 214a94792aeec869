#include "elastoscat/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

namespace elast {

SweepResult stability_sweep(const SweepConfig& cfg) {
    if (cfg.amplitudes.empty()) throw invalid_input("sweep: amplitude list is empty");
    if (cfg.amplitudes.front() != 0.0)
        throw invalid_input("sweep: amplitude list must start at 0");
    for (std::size_t i = 1; i < cfg.amplitudes.size(); ++i)
        if (!(cfg.amplitudes[i] > cfg.amplitudes[i - 1]))
            throw invalid_input("sweep: amplitudes must be strictly ascending");
    cfg.reg.validate(cfg.medium, 2);

    const BoundaryCurve base = BoundaryCurve::disc(cfg.base_radius);
    // measurement ball per the a-priori placement |x0| >= R + 1 + s_tilde
    const double x0_r = cfg.reg.R + 1.0 + cfg.s_tilde;
    const Vec2 x0 = Vec2{std::cos(cfg.x0_angle), std::sin(cfg.x0_angle)} * x0_r;

    ScatteringSolution base_sol =
        solve_dirichlet(cfg.medium, base, cfg.incident, cfg.n);
    FarFieldPattern base_ff = far_field(base_sol, cfg.directions);

    SweepResult out;
    for (double amp : cfg.amplitudes) {
        BoundaryCurve pert =
            (amp == 0.0) ? base
                         : BoundaryCurve::radial_perturbation(cfg.base_radius, amp,
                                                              cfg.perturbation_mode);
        if (pert.bounding_radius() > cfg.reg.R)
            throw invalid_input("sweep: perturbed scatterer leaves the a-priori disc");
        ScatteringSolution sol = solve_dirichlet(cfg.medium, pert, cfg.incident, cfg.n);
        FarFieldPattern ff = far_field(sol, cfg.directions);

        ExperimentRecord rec{};
        rec.amplitude = amp;
        rec.n = cfg.n;
        rec.seed = cfg.seed;
        rec.residual = std::max(base_sol.boundary_residual, sol.boundary_residual);
        rec.eps0 = farfield_error(base_ff, ff);
        rec.eps_near = near_field_error(base_sol, sol,
                                        NearFieldRegion::ball(x0, cfg.s_tilde),
                                        cfg.probe_count, cfg.seed);
        rec.eps_annulus = near_field_error(base_sol, sol,
                                           NearFieldRegion::annulus(x0, cfg.s_tilde),
                                           cfg.probe_count, cfg.seed + 1);
        DistanceTriple dt = distances(base, pert, cfg.distance_samples);
        rec.d = dt.d;
        rec.d_hat = dt.d_hat;
        rec.d_tilde = dt.d_tilde;
        AreaResult ar = area_symmetric_difference(base, pert);
        rec.sym_diff_area = ar.value;
        rec.closeness_ok = closeness_check(ar.value, cfg.reg, cfg.medium, 2);
        out.records.push_back(rec);
    }

    // the fit is a consistency probe; skip silently when too few records qualify
    try {
        out.fit = loglog_fit(out.records);
    } catch (const invalid_input&) {
        out.fit.reset();
    }
    return out;
}

LogLogFit loglog_fit(const std::vector<ExperimentRecord>& records) {
    const double eps_cap = std::exp(-std::exp(1.0)) / 2.0;
    std::vector<double> X, Y;
    for (const ExperimentRecord& r : records) {
        if (!(r.eps0 > 0.0) || r.eps0 > eps_cap) continue;
        if (!(r.d_tilde > 0.0) || !r.closeness_ok) continue;
        const double l1 = std::log(1.0 / r.eps0);
        const double l2 = std::log(l1);
        X.push_back(std::log(l2));
        Y.push_back(std::log(r.d_tilde));
    }
    if (X.size() < 4)
        throw invalid_input("loglog_fit: need at least 4 records inside the double-log domain");
    // least squares  Y = a - beta X
    const std::size_t m = X.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < m; ++i) {
        sx += X[i];
        sy += Y[i];
        sxx += X[i] * X[i];
        sxy += X[i] * Y[i];
    }
    const double det = m * sxx - sx * sx;
    if (std::abs(det) < 1e-14 * m * sxx)
        throw invalid_input("loglog_fit: degenerate abscissae");
    const double slope = (m * sxy - sx * sy) / det;
    const double inter = (sy * sxx - sx * sxy) / det;
    LogLogFit fit;
    fit.beta_fit = -slope;
    fit.C_fit = std::exp(inter);
    double rss = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double e = Y[i] - (inter + slope * X[i]);
        rss += e * e;
    }
    fit.residual = std::sqrt(rss / m);
    fit.degenerate = std::abs(fit.beta_fit) < 1e-8;
    return fit;
}

std::vector<FarToNearRow> far_to_near_comparison(const std::vector<ExperimentRecord>& recs) {
    std::vector<FarToNearRow> out;
    out.reserve(recs.size());
    for (const ExperimentRecord& r : recs) {
        if (r.eps_near > r.eps_annulus * (1.0 + 1e-12))
            throw numerical_error("far_to_near: eps exceeds eps1 (ball not inside annulus?)");
        out.push_back({r.eps0, r.eps_near, r.eps_annulus});
    }
    return out;
}

void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records,
                       const std::string& header_comment) {
    if (!header_comment.empty()) {
        std::istringstream lines(header_comment);
        std::string line;
        while (std::getline(lines, line)) os << "# " << line << "\n";
    }
    os << "amplitude,d,d_hat,d_tilde,eps0,eps_near,eps_annulus,sym_diff_area,"
          "closeness_ok,n,residual,seed\n";
    char buf[360];
    for (const ExperimentRecord& r : records) {
        std::snprintf(buf, sizeof buf,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%d,%d,%.17g,%llu\n",
                      r.amplitude, r.d, r.d_hat, r.d_tilde, r.eps0, r.eps_near,
                      r.eps_annulus, r.sym_diff_area, r.closeness_ok ? 1 : 0, r.n,
                      r.residual, static_cast<unsigned long long>(r.seed));
        os << buf;
    }
}

}  // namespace elast
