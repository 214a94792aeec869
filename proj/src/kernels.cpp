#include "elastoscat/kernels.hpp"

#include <cmath>
#include <vector>

#include "elastoscat/special.hpp"

namespace elast {

namespace {

// J0(z)/z - 2 J1(z)/z^2, the removable-singularity combination in A', B'
double jfrac(double z, double j0, double j1) {
    if (z < 0.1) {
        double z2 = z * z;
        return z * (-1.0 / 8.0 + z2 * (1.0 / 96.0 - z2 / 3072.0));
    }
    return j0 / z - 2.0 * j1 / (z * z);
}

// Y-series tails for small arguments:
//   Sy0 = sum_{m>=1} (-1)^{m+1} h_m q^m/(m!)^2
//   Sy1 = sum_{m>=0} (-1)^m (h_m + h_{m+1}) q^m/(m!(m+1)!),  q = z^2/4
void y_series_tails(double z, double& sy0, double& sy1) {
    const double q = 0.25 * z * z;
    double t0 = 1.0, t1 = 1.0, hm = 0.0;
    sy0 = 0.0;
    sy1 = 1.0;
    for (int m = 1; m <= 16; ++m) {
        const double im = 1.0 / m;
        hm += im;
        t0 *= -q * im * im;
        t1 *= -q * im / (m + 1);
        sy0 -= t0 * hm;
        sy1 += t1 * (2.0 * hm + 1.0 / (m + 1));
    }
}

// Im[H0(z)/z - 2 H1(z)/z^2] with the 4/(pi z^3) Laurent part removed, and
// Im[H1(z)/z] with the -2/(pi z^2) part removed. Those parts cancel exactly
// between the omega_s and omega_p terms of A, B, A', B'; keeping them in
// floating point wrecks the kernels at small separations (error ~ eps/r^3).
double hfrac_im_reg(double z, double j0, double j1, double y0, double y1) {
    if (z >= 0.5) return y0 / z - 2.0 * y1 / (z * z) - 4.0 / (pi * z * z * z);
    double sy0, sy1;
    y_series_tails(z, sy0, sy1);
    const double L = std::log(0.5 * z) + euler_gamma;
    return (2.0 * L / pi) * jfrac(z, j0, j1) + (2.0 / pi) * (sy0 / z) + sy1 / (pi * z);
}

double g_im_reg(double z, double j1, double y1) {
    if (z >= 0.5) return (y1 + 2.0 / (pi * z)) / z;
    double sy0, sy1;
    y_series_tails(z, sy0, sy1);
    const double L = std::log(0.5 * z) + euler_gamma;
    return (2.0 / pi) * L * (j1 / z) - sy1 / (2.0 * pi);
}

}  // namespace

cd helmholtz_phi(double k, double r, int N) {
    if (!(k > 0.0)) throw invalid_input("helmholtz_phi: k must be positive");
    if (!(r > 0.0)) throw invalid_input("helmholtz_phi: evaluation at the singularity");
    if (N == 2) return cd(0.0, 0.25) * hankel1(0, k * r);
    if (N == 3) return std::exp(cd(0.0, k * r)) / (4.0 * pi * r);
    throw invalid_input("helmholtz_phi: N must be 2 or 3");
}

NavierKernels::NavierKernels(const ElasticMedium& m) : medium_(m) {
    double mu = m.mu(), l2m = m.lambda2mu();
    c_a_ = -(1.0 / (4.0 * pi)) * (1.0 / mu + 1.0 / l2m);
    c_b_ = (1.0 / (4.0 * pi)) * (1.0 / mu - 1.0 / l2m);
    c_q_ = mu / (2.0 * pi * l2m);
    auto rho0 = [](double k) {
        return cd(1.0, 0.0) + cd(0.0, 2.0 / pi) * (std::log(k / 2.0) + euler_gamma);
    };
    auto rhoG = [](double k) {
        return cd(0.5, -0.5 / pi) + cd(0.0, 1.0 / pi) * (std::log(k / 2.0) + euler_gamma);
    };
    ar0_ = cd(0.0, 0.25) * ((rho0(m.omega_s()) - rhoG(m.omega_s())) / mu +
                            rhoG(m.omega_p()) / l2m);
}

RadialKernel NavierKernels::radial_from_bessel(double r, double j0s, double y0s,
                                               double j1s, double y1s, double j0p,
                                               double y0p, double j1p, double y1p) const {
    double mu = medium_.mu(), l2m = medium_.lambda2mu();
    double os = medium_.omega_s(), op = medium_.omega_p();
    double zs = os * r, zp = op * r;
    cd H0s{j0s, y0s}, H1s{j1s, y1s}, H0p{j0p, y0p}, H1p{j1p, y1p};
    // regularized G = H1/z and hfrac: their Laurent parts cancel exactly
    // between the s and p contributions of A, B, A', B'
    cd Gs{j1s / zs, g_im_reg(zs, j1s, y1s)};
    cd Gp{j1p / zp, g_im_reg(zp, j1p, y1p)};
    cd hfs{jfrac(zs, j0s, j1s), hfrac_im_reg(zs, j0s, j1s, y0s, y1s)};
    cd hfp{jfrac(zp, j0p, j1p), hfrac_im_reg(zp, j0p, j1p, y0p, y1p)};
    const cd i4{0.0, 0.25};
    RadialKernel k;
    k.A = i4 * ((H0s - Gs) / mu + Gp / l2m);
    k.B = -i4 * (H0s / mu - H0p / l2m - 2.0 * Gs / mu + 2.0 * Gp / l2m);
    k.Ap = i4 * (-(os / mu) * (H1s + hfs) + (op / l2m) * hfp);
    k.Bp = -i4 * (-(os / mu) * H1s + (op / l2m) * H1p - (2.0 * os / mu) * hfs +
                  (2.0 * op / l2m) * hfp);
    return k;
}

RadialKernelLog NavierKernels::radial_log_from_bessel(double r, double j0s, double j1s,
                                                      double j0p, double j1p) const {
    double mu = medium_.mu(), l2m = medium_.lambda2mu();
    double os = medium_.omega_s(), op = medium_.omega_p();
    double zs = os * r, zp = op * r;
    double gs = j1s / zs, gp = j1p / zp;
    double jfs = jfrac(zs, j0s, j1s), jfp = jfrac(zp, j0p, j1p);
    const double c = 1.0 / (2.0 * pi);
    RadialKernelLog k;
    k.AL = -c * ((j0s - gs) / mu + gp / l2m);
    k.BL = c * (j0s / mu - j0p / l2m - 2.0 * gs / mu + 2.0 * gp / l2m);
    k.ApL = -c * (-(os / mu) * (j1s + jfs) + (op / l2m) * jfp);
    k.BpL = c * (-(os / mu) * j1s + (op / l2m) * j1p - (2.0 * os / mu) * jfs +
                 (2.0 * op / l2m) * jfp);
    return k;
}

RadialKernel NavierKernels::radial(double r) const {
    if (!(r > 0.0)) throw invalid_input("navier kernel: evaluation at the singularity");
    double j0s, y0s, j1s, y1s, j0p, y0p, j1p, y1p;
    bessel_j0y0j1y1(medium_.omega_s() * r, j0s, y0s, j1s, y1s);
    bessel_j0y0j1y1(medium_.omega_p() * r, j0p, y0p, j1p, y1p);
    return radial_from_bessel(r, j0s, y0s, j1s, y1s, j0p, y0p, j1p, y1p);
}

RadialKernelLog NavierKernels::radial_log(double r) const {
    double j0s, y0s, j1s, y1s, j0p, y0p, j1p, y1p;
    bessel_j0y0j1y1(medium_.omega_s() * r, j0s, y0s, j1s, y1s);
    bessel_j0y0j1y1(medium_.omega_p() * r, j0p, y0p, j1p, y1p);
    return radial_log_from_bessel(r, j0s, j1s, j0p, j1p);
}

Mat2c NavierKernels::phi(Vec2 x, Vec2 y) const {
    Vec2 rv = x - y;
    double r = rv.norm();
    if (!(r > 0.0)) throw invalid_input("navier_phi: x == y");
    RadialKernel k = radial(r);
    Vec2 rh = rv / r;
    return k.A * Mat2c::identity() + k.B * Mat2c::outer(rh, rh);
}

Mat2c NavierKernels::traction_assemble(cd Ap, cd Bp, cd Bor, Vec2 rh, Vec2 nu,
                                       double lambda, double mu) {
    double rn = rh.dot(nu);
    Mat2c RN = Mat2c::outer(rh, nu), NR = Mat2c::outer(nu, rh);
    Mat2c W = Mat2c::outer(rh, rh), I = Mat2c::identity();
    return (-lambda) * (Ap + Bp + Bor) * RN - mu * Ap * (rn * I + NR) -
           2.0 * mu * Bp * rn * W -
           mu * Bor * (NR + 2.0 * RN + rn * I - 4.0 * rn * W);
}

Mat2c NavierKernels::traction(Vec2 x, Vec2 y, Vec2 nu) const {
    Vec2 rv = x - y;
    double r = rv.norm();
    if (!(r > 0.0)) throw invalid_input("traction_kernel: x == y");
    if (std::abs(nu.norm() - 1.0) > 1e-12)
        throw invalid_input("traction_kernel: nu must be a unit vector");
    RadialKernel k = radial(r);
    return traction_assemble(k.Ap, k.Bp, k.B / r, rv / r, nu, medium_.lambda(),
                             medium_.mu());
}

// ---- N = 3 closed forms ----
namespace {

struct Radial3 {
    cd A, B, Ap, Bp;
};

Radial3 radial3(const ElasticMedium& m, double r) {
    double mu = m.mu(), rw2 = m.rho() * m.omega() * m.omega();
    double ks = m.omega_s(), kp = m.omega_p();
    auto phi = [&](double k) { return std::exp(cd(0.0, k * r)) / (4.0 * pi * r); };
    auto phi1 = [&](double k) {
        return std::exp(cd(0.0, k * r)) * cd(-1.0, k * r) / (4.0 * pi * r * r);
    };
    auto phi2 = [&](double k) {
        return std::exp(cd(0.0, k * r)) * (cd(2.0, -2.0 * k * r) - k * k * r * r) /
               (4.0 * pi * r * r * r);
    };
    cd Psi1 = phi1(ks) - phi1(kp), Psi2 = phi2(ks) - phi2(kp);
    Radial3 out;
    out.A = phi(ks) / mu + Psi1 / (r * rw2);
    out.B = (Psi2 - Psi1 / r) / rw2;
    // derivatives of A and B in r
    auto phi3 = [&](double k) {
        return std::exp(cd(0.0, k * r)) *
               (cd(-6.0, 6.0 * k * r) + 3.0 * k * k * r * r - cd(0.0, 1.0) * k * k * k * r * r * r) /
               (4.0 * pi * r * r * r * r);
    };
    cd Psi3 = phi3(ks) - phi3(kp);
    out.Ap = phi1(ks) / mu + (Psi2 * r - Psi1) / (r * r * rw2);
    out.Bp = (Psi3 - (Psi2 * r - Psi1) / (r * r)) / rw2;
    return out;
}

}  // namespace

Mat3c navier_phi3(const ElasticMedium& m, const double x[3], const double y[3]) {
    double rv[3] = {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    double r = std::sqrt(rv[0] * rv[0] + rv[1] * rv[1] + rv[2] * rv[2]);
    if (!(r > 0.0)) throw invalid_input("navier_phi3: x == y");
    Radial3 k = radial3(m, r);
    Mat3c out;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            out.m[i][j] = (i == j ? k.A : cd{}) + k.B * (rv[i] / r) * (rv[j] / r);
    return out;
}

Mat3c traction_kernel3(const ElasticMedium& m, const double y[3], const double nu[3],
                       const double x[3]) {
    double rv[3] = {x[0] - y[0], x[1] - y[1], x[2] - y[2]};
    double r = std::sqrt(rv[0] * rv[0] + rv[1] * rv[1] + rv[2] * rv[2]);
    if (!(r > 0.0)) throw invalid_input("traction_kernel3: x == y");
    Radial3 k = radial3(m, r);
    double rh[3] = {rv[0] / r, rv[1] / r, rv[2] / r};
    double rn = rh[0] * nu[0] + rh[1] * nu[1] + rh[2] * nu[2];
    cd Bor = k.B / r;
    double lam = m.lambda(), mu = m.mu();
    Mat3c out;
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            cd v = -lam * (k.Ap + k.Bp + 2.0 * Bor) * rh[i] * nu[j];
            v -= mu * k.Ap * ((i == j ? rn : 0.0) + nu[i] * rh[j]);
            v -= 2.0 * mu * k.Bp * rn * rh[i] * rh[j];
            v -= mu * Bor * (nu[i] * rh[j] + 2.0 * rh[i] * nu[j] + (i == j ? rn : 0.0) -
                             4.0 * rn * rh[i] * rh[j]);
            out.m[i][j] = v;
        }
    }
    return out;
}

CVec2 layer_potential_eval(LayerKind kind, const ElasticMedium& medium,
                           const BoundaryCurve& curve, std::span<const CVec2> density,
                           Vec2 x) {
    const std::size_t n = density.size();
    if (n < 8) throw invalid_input("layer_potential_eval: density too short");
    NavierKernels K(medium);

    std::vector<CurvePoint> cp(n);
    double perim = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        cp[j] = curve.at(2.0 * pi * j / n);
        perim += cp[j].speed * (2.0 * pi / n);
    }
    double spacing = perim / static_cast<double>(n);
    for (std::size_t j = 0; j < n; ++j)
        if ((x - cp[j].z).norm() < spacing)
            throw near_boundary_error("layer_potential_eval: target too close to the boundary");

    CVec2 acc{};
    for (std::size_t j = 0; j < n; ++j) {
        Mat2c Km = (kind == LayerKind::single) ? K.phi(x, cp[j].z)
                                               : K.traction(x, cp[j].z, cp[j].normal);
        CVec2 v = Km * density[j];
        acc = acc + v * cd(cp[j].speed * (2.0 * pi / n), 0.0);
    }
    return acc;
}

}  // namespace elast
