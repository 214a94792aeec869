// Run configuration: one JSON document validated against all module
// preconditions before any computation. Unknown keys are rejected with
// field-level diagnostics.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elastoscat/geometry.hpp"
#include "elastoscat/media.hpp"

namespace elast {

struct RunConfig {
    ElasticMedium medium{2.0, 1.0, 1.0, 2.0};
    WaveKind incident_kind = WaveKind::longitudinal;
    double incident_angle = 0.0;
    double incident_phase = 0.0;

    BoundaryCurve geometry = BoundaryCurve::disc(1.0);
    std::optional<BoundaryCurve> geometry2;  // used by the distances subcommand
    RegularityParams reg{0.1, 1.0, 2.0, 0.5, 0.05};

    int n = 256;
    int directions = 360;
    int probe_count = 400;
    int distance_samples = 2048;
    double fd_step_factor = 1e-4;  // FD step = factor * shear wavelength

    std::vector<double> amplitudes{0.0, 0.01, 0.02, 0.04, 0.06, 0.08, 0.1};
    int perturbation_mode = 2;
    double s_tilde = 0.5;
    double x0_angle = 0.0;

    std::uint64_t seed = 1;
    std::string output = "out.csv";
    std::optional<int> threads;

    IncidentPlaneWave incident_wave() const;

    // normalized JSON document (single line) echoed into output headers
    std::string echo() const;
};

// Parses and validates; throws invalid_input with a field-level diagnostic.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config_file(const std::string& path);

// extracts the echoed config line from an output file header ("# config: ...")
std::string extract_config_echo(const std::string& file_text);

}  // namespace elast
