#include "elastoscat/special.hpp"

#include <cmath>
#include <string>

#include "elastoscat/simd.hpp"

namespace elast {

namespace {

void check_arg(int order, double x) {
    if (!(x > 0.0)) throw invalid_input("bessel_jy: argument must be positive");
    if (x > kMaxBesselArg) throw invalid_input("bessel_jy: argument above 1000");
    if (order < 0 || order > kMaxBesselOrder)
        throw invalid_input("bessel_jy: order outside [0, 200]");
}

// Miller's algorithm: downward recurrence from a start index well above both
// order and argument, normalized by J_0(x) + 2 sum_k J_{2k}(x) = 1.
double bessel_j_miller(int n, double x) {
    double top = std::max(static_cast<double>(n), x);
    int start = static_cast<int>(top) + 16 + static_cast<int>(std::sqrt(42.0 * top));
    if (start % 2) ++start;

    double jp1 = 0.0, jc = 1e-300, jn = 0.0, sum = 0.0;
    for (int m = start; m >= 1; --m) {
        double jm1 = (2.0 * m / x) * jc - jp1;
        jp1 = jc;
        jc = jm1;
        if (m - 1 == n) jn = jc;
        if ((m - 1) % 2 == 0) sum += (m - 1 == 0) ? jc : 2.0 * jc;
        if (std::abs(jc) > 1e250) {
            jp1 *= 1e-250;
            jc *= 1e-250;
            jn *= 1e-250;
            sum *= 1e-250;
        }
    }
    return jn / sum;
}

}  // namespace

void bessel_j0y0j1y1(double x, double& j0, double& y0, double& j1, double& y1) {
    simd::bessel_j0y0j1y1(&x, 1, &j0, &y0, &j1, &y1);
}

JY bessel_jy(int order, double x) {
    check_arg(order, x);
    double j0, y0, j1, y1;
    bessel_j0y0j1y1(x, j0, y0, j1, y1);
    if (order == 0) return {j0, y0};
    if (order == 1) return {j1, y1};

    // Y grows with the order, so upward recurrence is stable
    double ym1 = y0, yc = y1;
    for (int m = 1; m < order; ++m) {
        double yn = (2.0 * m / x) * yc - ym1;
        ym1 = yc;
        yc = yn;
        if (!std::isfinite(yc))
            throw numerical_error("bessel_jy: Y overflow at order " + std::to_string(m + 1));
    }
    return {bessel_j_miller(order, x), yc};
}

cd hankel1(int order, double x) {
    JY v = bessel_jy(order, x);
    return {v.j, v.y};
}

JY bessel_jy_prime(int order, double x) {
    check_arg(order, x);
    if (order == 0) {
        JY v1 = bessel_jy(1, x);
        return {-v1.j, -v1.y};
    }
    JY vm = bessel_jy(order - 1, x);
    JY vn = bessel_jy(order, x);
    return {vm.j - (order / x) * vn.j, vm.y - (order / x) * vn.y};
}

}  // namespace elast
