#include "elastoscat/media.hpp"

#include <cmath>

namespace elast {

ElasticMedium::ElasticMedium(double lambda, double mu, double rho, double omega)
    : lambda_(lambda), mu_(mu), rho_(rho), omega_(omega) {
    if (!(mu > 0.0)) throw invalid_input("medium: mu must be positive");
    if (!(lambda + 2.0 * mu > 0.0)) throw invalid_input("medium: lambda + 2 mu must be positive");
    if (!(rho > 0.0)) throw invalid_input("medium: rho must be positive");
    if (!(omega > 0.0)) throw invalid_input("medium: omega must be positive");
    omega_p_ = omega * std::sqrt(rho / (lambda + 2.0 * mu));
    omega_s_ = omega * std::sqrt(rho / mu);
}

double isoperimetric_constant(int N) {
    if (N < 2) throw invalid_input("isoperimetric_constant: N must be >= 2");
    // |B_1| = pi^{N/2} / Gamma(N/2 + 1), H^{N-1}(dB_1) = N |B_1|
    double vol = std::pow(pi, 0.5 * N) / std::tgamma(0.5 * N + 1.0);
    double surf = N * vol;
    return std::pow(vol, (N - 1.0) / N) / surf;
}

double closeness_constant(const ElasticMedium& m, int N) {
    double C = isoperimetric_constant(N);
    double num = std::min(2.0 * m.mu(), 2.0 * m.mu() + m.lambda());
    double base = num / (64.0 * C * C * m.rho() * m.omega() * m.omega());
    return std::pow(base, 0.5 * N);
}

double closeness_constant_alt(const ElasticMedium& m, int N) {
    double C = isoperimetric_constant(N);
    double base = std::min(1.0 / m.omega_p(), std::sqrt(2.0) / m.omega_s()) / (8.0 * C);
    return std::pow(base, N);
}

IncidentPlaneWave IncidentPlaneWave::longitudinal(Vec2 d, double phase) {
    if (d.norm() == 0.0) throw invalid_input("incident wave: zero direction");
    return {WaveKind::longitudinal, d.normalized(), std::polar(1.0, phase)};
}

IncidentPlaneWave IncidentPlaneWave::transversal(Vec2 d, double phase) {
    if (d.norm() == 0.0) throw invalid_input("incident wave: zero direction");
    return {WaveKind::transversal, d.normalized(), std::polar(1.0, phase)};
}

CVec2 IncidentPlaneWave::polarization() const {
    // -Q d, scaled by the unit phase
    Vec2 qd = d_.perp();
    return {-c_ * qd.x, -c_ * qd.y};
}

CVec2 IncidentPlaneWave::evaluate(const ElasticMedium& medium, Vec2 x) const {
    if (kind_ == WaveKind::longitudinal) {
        cd e = c_ * std::exp(cd(0.0, medium.omega_p() * d_.dot(x)));
        return {e * d_.x, e * d_.y};
    }
    cd e = std::exp(cd(0.0, medium.omega_s() * d_.dot(x)));
    CVec2 p = polarization();
    return {p.x * e, p.y * e};
}

}  // namespace elast
