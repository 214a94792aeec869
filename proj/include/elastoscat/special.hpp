// Integer-order cylinder Bessel functions J_n, Y_n and the Hankel function
// H^(1)_n = J_n + i Y_n, for x in (0, 1000] and orders up to 200.
//
// Orders 0 and 1 evaluate through the batch kernels (ascending series below
// x = 8, Chebyshev-fitted amplitude/phase form above). Higher orders use
// upward recurrence for Y and Miller's normalized downward recurrence for J.
#pragma once

#include <utility>

#include "elastoscat/core.hpp"

namespace elast {

inline constexpr int kMaxBesselOrder = 200;
inline constexpr double kMaxBesselArg = 1000.0;

struct JY {
    double j, y;
};

// J_n(x) and Y_n(x). Throws invalid_input for x <= 0, x > 1000 or n out of
// [0, 200]; throws numerical_error if Y_n(x) overflows a double.
JY bessel_jy(int order, double x);

// H^(1)_n(x) = J_n(x) + i Y_n(x)
cd hankel1(int order, double x);

// derivative J_n'(x), Y_n'(x) via J_{n-1} - (n/x) J_n
JY bessel_jy_prime(int order, double x);

// all of J0,Y0,J1,Y1 in one call (single kernel evaluation)
void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1);

}  // namespace elast
