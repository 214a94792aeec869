// Physical parameters of the elastic medium, derived wave numbers, the
// explicit closeness constants, and incident plane waves.
#pragma once

#include "elastoscat/core.hpp"

namespace elast {

struct Wavenumbers {
    double omega_p, omega_s;
};

class ElasticMedium {
public:
    // requires mu > 0, lambda + 2 mu > 0, rho > 0, omega > 0
    ElasticMedium(double lambda, double mu, double rho, double omega);

    double lambda() const { return lambda_; }
    double mu() const { return mu_; }
    double rho() const { return rho_; }
    double omega() const { return omega_; }
    double lambda2mu() const { return lambda_ + 2.0 * mu_; }

    Wavenumbers wavenumbers() const { return {omega_p_, omega_s_}; }
    double omega_p() const { return omega_p_; }
    double omega_s() const { return omega_s_; }

private:
    double lambda_, mu_, rho_, omega_;
    double omega_p_, omega_s_;
};

// C(N) = |B_1|^{(N-1)/N} / H^{N-1}(dB_1), the isoperimetric constant
double isoperimetric_constant(int N);

// H_1 = (min{2 mu, 2 mu + lambda} / (64 C(N)^2 rho omega^2))^{N/2}
double closeness_constant(const ElasticMedium& medium, int N);
// equivalent form (min{1/omega_p, sqrt(2)/omega_s} / (8 C(N)))^N
double closeness_constant_alt(const ElasticMedium& medium, int N);

enum class WaveKind { longitudinal, transversal };

class IncidentPlaneWave {
public:
    // longitudinal: c d exp(i omega_p d.x); amplitude c on the unit circle.
    // transversal (2-D): p exp(i omega_s d.x) with p = -exp(i phase) Q d.
    // direction is normalized at construction; zero direction is rejected.
    static IncidentPlaneWave longitudinal(Vec2 direction, double phase = 0.0);
    static IncidentPlaneWave transversal(Vec2 direction, double phase = 0.0);

    WaveKind kind() const { return kind_; }
    Vec2 direction() const { return d_; }
    cd amplitude() const { return c_; }  // |c| = 1
    // polarization vector for the transversal kind (c * (-Q d))
    CVec2 polarization() const;

    // field value at x
    CVec2 evaluate(const ElasticMedium& medium, Vec2 x) const;

private:
    IncidentPlaneWave(WaveKind k, Vec2 d, cd c) : kind_(k), d_(d), c_(c) {}
    WaveKind kind_;
    Vec2 d_;
    cd c_;
};

}  // namespace elast
