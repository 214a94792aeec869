// Quadrature rules: the trigonometric log-singularity weights, the Hilbert
// transform (cot) weights, nodes/weights of Gauss-Legendre, and periodic
// trapezoid helpers.
#pragma once

#include <vector>

#include "elastoscat/core.hpp"

namespace elast {

// R_j for int_0^{2pi} ln(4 sin^2((t_i - s)/2)) f(s) ds ~ sum_j R_{(i-j) mod n} f(t_j)
std::vector<double> kress_log_weights(int n);

// c_j for PV int_0^{2pi} cot((s - t_i)/2) f(s) ds ~ sum_j c_{(j-i) mod n} f(t_j)
std::vector<double> hilbert_weights(int n);

// same rules anchored at an arbitrary target t (not necessarily a node):
// weights against nodes t_j = 2 pi j / n, as a function of dt = t - t_j
double kress_log_weight_at(int n, double dt);
double hilbert_weight_at(int n, double dt);
// trigonometric interpolation kernel K_n(dt) with sum_j f_j K_n(t - t_j)
double trig_interp_weight_at(int n, double dt);

struct GaussRule {
    std::vector<double> x, w;  // nodes/weights on [-1, 1]
};
GaussRule gauss_legendre(int n);

}  // namespace elast
