// The stability harness: sweeps of radially perturbed scatterer pairs,
// far-field / near-field errors against Hausdorff distances, and the
// log-log consistency fit.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "elastoscat/fields.hpp"
#include "elastoscat/geometry.hpp"

namespace elast {

struct ExperimentRecord {
    double amplitude;
    double d, d_hat, d_tilde;
    double eps0;          // far-field L2 error
    double eps_near;      // sup on the measurement ball
    double eps_annulus;   // sup on the annulus
    double sym_diff_area;
    bool closeness_ok;
    int n;
    double residual;      // max boundary residual of the two solves
    std::uint64_t seed;
};

struct LogLogFit {
    double C_fit, beta_fit, residual;  // d_tilde ~ C (log log(1/eps0))^{-beta}
    bool degenerate;                   // beta ~ 0 (distances do not vary)
};

struct SweepConfig {
    ElasticMedium medium{2.0, 1.0, 1.0, 2.0};
    IncidentPlaneWave incident = IncidentPlaneWave::longitudinal({1.0, 0.0});
    double base_radius = 1.0;
    int perturbation_mode = 2;          // r(t) = r0 (1 + delta cos(m t))
    std::vector<double> amplitudes;     // strictly ascending from 0
    int n = 128;                        // solver nodes
    int directions = 360;               // far-field sample count
    RegularityParams reg{};
    double s_tilde = 0.5;               // measurement ball radius
    double x0_angle = 0.0;              // measurement ball centre direction
    int probe_count = 400;
    int distance_samples = 2048;
    std::uint64_t seed = 1;
};

struct SweepResult {
    std::vector<ExperimentRecord> records;  // ordered by amplitude
    std::optional<LogLogFit> fit;           // set when enough records qualify
};

SweepResult stability_sweep(const SweepConfig& cfg);

// least-squares fit of log d_tilde against log log log(1/eps0); records need
// eps0 <= e^{-e}/2, d_tilde > 0 and the closeness flag; at least 4 required
LogLogFit loglog_fit(const std::vector<ExperimentRecord>& records);

// (eps0, eps, eps1) triples; throws numerical_error if any eps > eps1
struct FarToNearRow {
    double eps0, eps_near, eps_annulus;
};
std::vector<FarToNearRow> far_to_near_comparison(const std::vector<ExperimentRecord>& records);

// CSV, one row per record:
// amplitude,d,d_hat,d_tilde,eps0,eps_near,eps_annulus,sym_diff_area,closeness_ok,n,residual,seed
void write_records_csv(std::ostream& os, const std::vector<ExperimentRecord>& records,
                       const std::string& header_comment = {});

}  // namespace elast
