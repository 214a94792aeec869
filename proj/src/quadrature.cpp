#include "elastoscat/quadrature.hpp"

#include <cmath>

namespace elast {

std::vector<double> kress_log_weights(int n) {
    if (n < 2 || n % 2) throw invalid_input("kress_log_weights: n must be even >= 2");
    std::vector<double> R(n);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int m = 1; m < n / 2; ++m) s += (2.0 / m) * std::cos(2.0 * pi * m * j / n);
        s += (2.0 / n) * ((j % 2) ? -1.0 : 1.0);
        R[j] = -(2.0 * pi / n) * s;
    }
    return R;
}

std::vector<double> hilbert_weights(int n) {
    if (n < 2 || n % 2) throw invalid_input("hilbert_weights: n must be even >= 2");
    std::vector<double> c(n, 0.0);
    for (int j = 1; j < n; j += 2) c[j] = (4.0 * pi / n) / std::tan(pi * j / n);
    return c;
}

double kress_log_weight_at(int n, double dt) {
    double s = 0.0;
    for (int m = 1; m < n / 2; ++m) s += (2.0 / m) * std::cos(m * dt);
    s += (2.0 / n) * std::cos(0.5 * n * dt);
    return -(2.0 * pi / n) * s;
}

double hilbert_weight_at(int n, double dt) {
    double s = 0.0;
    for (int m = 1; m < n / 2; ++m) s += 2.0 * std::sin(m * dt);
    s += std::sin(0.5 * n * dt);
    return -(2.0 * pi / n) * s;
}

double trig_interp_weight_at(int n, double dt) {
    double s = 1.0;
    for (int m = 1; m < n / 2; ++m) s += 2.0 * std::cos(m * dt);
    s += std::cos(0.5 * n * dt);
    return s / n;
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw invalid_input("gauss_legendre: n must be positive");
    GaussRule g;
    g.x.resize(n);
    g.w.resize(n);
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton from the Chebyshev-based initial guess
        double x = std::cos(pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = pk;
            }
            pp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        g.x[i] = -x;
        g.x[n - 1 - i] = x;
        g.w[i] = g.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return g;
}

}  // namespace elast
