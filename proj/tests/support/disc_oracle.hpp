// Test-only separation-of-variables oracle for the rigid disc under
// longitudinal plane-wave incidence along +x. Independent of the BIE path:
// potentials u = grad(phi) + Q grad(psi) expanded in Fourier-Bessel modes,
// per-mode 2x2 rigid-boundary systems, far field from the Hankel asymptotics.
#pragma once

#include <vector>

#include "elastoscat/core.hpp"
#include "elastoscat/fields.hpp"
#include "elastoscat/media.hpp"
#include "elastoscat/special.hpp"

namespace elast::testing {

inline FarFieldPattern disc_farfield_oracle(const ElasticMedium& med, double a,
                                            const std::vector<double>& thetas,
                                            int modes = 60) {
    const double op = med.omega_p(), os = med.omega_s();
    const cd I(0.0, 1.0);

    auto Hm = [](int m, double x) {
        const cd v = hankel1(std::abs(m), x);
        return (m >= 0 || std::abs(m) % 2 == 0) ? v : -v;  // H_{-m} = (-1)^m H_m
    };
    auto Jm = [](int m, double x) {
        const double v = bessel_jy(std::abs(m), x).j;
        return (m >= 0 || std::abs(m) % 2 == 0) ? v : -v;
    };
    auto Hmp = [&](int m, double x) { return 0.5 * (Hm(m - 1, x) - Hm(m + 1, x)); };
    auto Jmp = [&](int m, double x) { return 0.5 * (Jm(m - 1, x) - Jm(m + 1, x)); };

    std::vector<cd> alpha(2 * modes + 1), beta(2 * modes + 1);
    for (int m = -modes; m <= modes; ++m) {
        // incident potential phi_inc = e^{i omega_p x1}/(i omega_p):
        // mode coefficient c_m J_m(omega_p r) e^{i m theta}, c_m = i^m/(i omega_p)
        const cd cm = std::pow(I, m) / (I * op);
        const cd A11 = op * Hmp(m, op * a);
        const cd A12 = -(I * double(m) / a) * Hm(m, os * a);
        const cd A21 = (I * double(m) / a) * Hm(m, op * a);
        const cd A22 = os * Hmp(m, os * a);
        const cd b1 = -op * cm * Jmp(m, op * a);
        const cd b2 = -(I * double(m) / a) * cm * Jm(m, op * a);
        const cd det = A11 * A22 - A12 * A21;
        alpha[m + modes] = (b1 * A22 - A12 * b2) / det;
        beta[m + modes] = (A11 * b2 - b1 * A21) / det;
    }

    FarFieldPattern out;
    out.theta = thetas;
    out.up.resize(thetas.size());
    out.us.resize(thetas.size());
    const cd cp = I * op * std::sqrt(2.0 / (pi * op)) * std::polar(1.0, -pi / 4.0);
    const cd cs = I * os * std::sqrt(2.0 / (pi * os)) * std::polar(1.0, -pi / 4.0);
    for (std::size_t k = 0; k < thetas.size(); ++k) {
        cd sp{}, ss{};
        for (int m = -modes; m <= modes; ++m) {
            const cd ph = std::polar(1.0, m * thetas[k]) * std::pow(-I, m);
            sp += alpha[m + modes] * ph;
            ss += beta[m + modes] * ph;
        }
        out.up[k] = cp * sp;
        out.us[k] = cs * ss;
    }
    return out;
}

}  // namespace elast::testing
