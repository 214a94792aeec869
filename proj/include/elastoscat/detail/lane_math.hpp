// Lane-templated numerical cores shared by the scalar reference and the AVX2
// variant. A Lane type L provides:
//
//   static constexpr std::size_t width
//   type V (vector of doubles), broadcast(double), load(ptr), store(ptr, V)
//   arithmetic +,-,*,/ on V, fma(a,b,c), sqrt(V), abs(V)
//   round(V)   - to nearest integer
//   lt(a,b)    - mask, per-lane a < b
//   select(mask, a, b) - a where mask, else b
//   log_lanes(V) - natural log applied per lane (libm quality)
//
// Every operation sequence below is identical for both instantiations, and
// every fused multiply is explicit, so the two variants agree bit for bit.
// (The CMake lists compile these TUs with -ffp-contract=off.)
#pragma once

#include <cstddef>

namespace elast::simd::detail {

// ---- sin/cos: Cody-Waite reduction by pi/2, Taylor on [-pi/4, pi/4] ----
// pi/2 split into three doubles, the first two with 32 trailing zero bits,
// so k*PIO2_1 and k*PIO2_2 are exact for |k| < 2^20.
inline constexpr double kPio2_1 = 1.570796012878418;
inline constexpr double kPio2_2 = 3.139164164167596e-07;
inline constexpr double kPio2_3 = 6.223372171896613e-14;
inline constexpr double kTwoOverPi = 0.636619772367581343;

template <class L>
inline void sincos_core(typename L::V x, typename L::V& s_out, typename L::V& c_out) {
    using V = typename L::V;
    const V k = L::round(x * L::broadcast(kTwoOverPi));
    V y = L::fma(k, L::broadcast(-kPio2_1), x);
    y = L::fma(k, L::broadcast(-kPio2_2), y);
    y = L::fma(k, L::broadcast(-kPio2_3), y);

    const V y2 = y * y;
    // Taylor tails on [-pi/4, pi/4]: sin through y^15, cos through y^18
    V ps = L::broadcast(-7.6471637318198165e-13);                // -1/15!
    ps = L::fma(ps, y2, L::broadcast(1.6059043836821613e-10));   // +1/13!
    ps = L::fma(ps, y2, L::broadcast(-2.5052108385441719e-08));  // -1/11!
    ps = L::fma(ps, y2, L::broadcast(2.7557319223985893e-06));   // +1/9!
    ps = L::fma(ps, y2, L::broadcast(-1.9841269841269841e-04));  // -1/7!
    ps = L::fma(ps, y2, L::broadcast(8.3333333333333332e-03));   // +1/5!
    ps = L::fma(ps, y2, L::broadcast(-1.6666666666666666e-01));  // -1/3!
    const V siny = L::fma(ps * y2, y, y);

    V pc = L::broadcast(-1.5619206968586226e-16);
    pc = L::fma(pc, y2, L::broadcast(4.7794773323873853e-14));
    pc = L::fma(pc, y2, L::broadcast(-1.1470745597729725e-11));
    pc = L::fma(pc, y2, L::broadcast(2.0876756987868099e-09));
    pc = L::fma(pc, y2, L::broadcast(-2.7557319223985888e-07));
    pc = L::fma(pc, y2, L::broadcast(2.4801587301587302e-05));
    pc = L::fma(pc, y2, L::broadcast(-1.3888888888888889e-03));
    pc = L::fma(pc, y2, L::broadcast(4.1666666666666666e-02));
    pc = L::fma(pc, y2, L::broadcast(-0.5));
    const V cosy = L::fma(pc, y2, L::broadcast(1.0));

    // quadrant q = k mod 4 in {0,1,2,3} decides the (sin, cos) permutation and signs
    const V q = L::fma(L::floor(k * L::broadcast(0.25)), L::broadcast(-4.0), k);
    const auto q_is_1 = L::eq(q, L::broadcast(1.0));
    const auto q_is_2 = L::eq(q, L::broadcast(2.0));
    const auto q_is_3 = L::eq(q, L::broadcast(3.0));

    V s = siny, c = cosy;
    // q=1: (c, -s); q=2: (-s, -c); q=3: (-c, s)
    V s1 = L::select(q_is_1, cosy, s);
    V c1 = L::select(q_is_1, L::broadcast(0.0) - siny, c);
    V s2 = L::select(q_is_2, L::broadcast(0.0) - siny, s1);
    V c2 = L::select(q_is_2, L::broadcast(0.0) - cosy, c1);
    s_out = L::select(q_is_3, L::broadcast(0.0) - cosy, s2);
    c_out = L::select(q_is_3, siny, c2);
}

// ---- Bessel J0,Y0,J1,Y1 ----
// Small arguments (x < 8): ascending series, 32 terms.
// Large arguments: Chebyshev fits of the amplitude functions P,Q in
// u = 2 (8/x)^2 - 1, then the phase form with angle addition
//   chi_n = x - (2n+1) pi/4.
inline constexpr int kChebN = 18;
inline constexpr double kP0Cheb[kChebN] = {
    0.999460349347518665,    -0.000536522046813211755, 3.07518478751949424e-6,
    -5.17059453760519706e-8, 1.63064646350747661e-9,   -7.8640913776524912e-11,
    5.16826238234813405e-12, -4.30457884215393719e-13, 4.32659558559009679e-14,
    -5.06904289206025677e-15, 6.74810647472218261e-16, -1.00116470379909392e-16,
    1.63153469137321052e-17, -2.87197861927114767e-18, 5.45891728604753504e-19,
    -1.20552074015912081e-19, 7.29864612720790239e-21, 4.19478521343641665e-20,
};
inline constexpr double kQ0Cheb[kChebN] = {
    -0.0155558546053370091,  0.0000683851994261164976, -7.41449841106067231e-7,
    1.79724572479678599e-8,  -7.27191593685649583e-10, 4.22012190471999791e-11,
    -3.20674742036037879e-12, 3.00614512173135531e-13, -3.33632816601249288e-14,
    4.25522616403351132e-15, -6.09993463444542118e-16, 9.66214762179936781e-17,
    -1.6687256801521832e-17, 3.10712021417832532e-18,  -6.18987624390877566e-19,
    1.32127264964671055e-19, -2.69700152513899318e-20, 4.07676329139120506e-22,
};
inline constexpr double kP1Cheb[kChebN] = {
    1.0009030408600137,      0.000898989833085940876,  -3.98728430048894138e-6,
    6.17763396064278413e-8,  -1.87189074909348881e-9,  8.8168986602839989e-11,
    -5.7048636320109641e-12, 4.69919546897263776e-13,  -4.68422351737865024e-14,
    5.4526896264549674e-15,  -7.22123779830711404e-16, 1.06679069126299882e-16,
    -1.73281425918959299e-17, 3.03437068520640523e-18, -5.75706315549726684e-19,
    1.33240056797006344e-19, 2.35720343537871723e-21,  -7.33714665795806163e-20,
};
inline constexpr double kQ1Cheb[kChebN] = {
    0.0467777870695353252,   -0.0000962772354915707955, 9.13861525795548937e-7,
    -2.09597813840818229e-8, 8.22919332763674476e-10,  -4.68636368824974086e-11,
    3.51521879407241432e-12, -3.26431566926085226e-13, 3.59677655544322627e-14,
    -4.56125397623761244e-15, 6.50828924644116237e-16, -1.02691731739753913e-16,
    1.76780368409151033e-17, -3.28186650768883779e-18, 6.52236496885945796e-19,
    -1.39385750114046487e-19, 2.75609347792067784e-20, 1.72810289418251202e-21,
};

inline constexpr double kGamma = 0.57721566490153286061;
inline constexpr double kTwoOverPiC = 0.63661977236758134308;
inline constexpr double kInvSqrt2 = 0.70710678118654752440;

template <class L>
inline typename L::V cheb_eval(const double (&coef)[kChebN], typename L::V u) {
    using V = typename L::V;
    const V two_u = u + u;
    V b0 = L::broadcast(0.0), b1 = L::broadcast(0.0);
    for (int j = kChebN - 1; j >= 1; --j) {
        const V t = b0;
        b0 = L::fma(two_u, b0, L::broadcast(coef[j]) - b1);
        b1 = t;
    }
    return L::fma(u, b0, L::broadcast(coef[0]) - b1);
}

// with_y=false skips the Y outputs (callers pass nullptr for y0/y1)
template <class L, bool with_y>
inline void j0y0j1y1_block(const double* x, double* j0, double* y0, double* j1, double* y1) {
    using V = typename L::V;
    const V xv = L::load(x);
    const auto small = L::lt(xv, L::broadcast(8.0));

    // --- series branch, clamped to [0, 8] so the unused side stays finite ---
    const V xs = L::select(small, xv, L::broadcast(8.0));
    const V q = xs * xs * L::broadcast(0.25);
    V tj0 = L::broadcast(1.0);             // (-1)^m q^m / (m!)^2
    V tj1 = L::broadcast(1.0);             // (-1)^m q^m / (m!(m+1)!)
    V sj0 = tj0, sj1 = tj1;
    V sy0 = L::broadcast(0.0);             // sum h_m * (-1)^(m+1) q^m/(m!)^2
    V sy1 = tj1;                           // sum (h_m + h_{m+1}) (-1)^m q^m/(m!(m+1)!), h0+h1 = 1
    double hm = 0.0;
    for (int m = 1; m <= 32; ++m) {
        const double im = 1.0 / m;
        hm += im;
        tj0 = tj0 * q * L::broadcast(-im * im);
        tj1 = tj1 * q * L::broadcast(-im / (m + 1));
        sj0 = sj0 + tj0;
        sj1 = sj1 + tj1;
        sy0 = sy0 - tj0 * L::broadcast(hm);
        sy1 = L::fma(tj1, L::broadcast(2.0 * hm + 1.0 / (m + 1)), sy1);
    }
    const V j0s = sj0;
    const V j1s = xs * L::broadcast(0.5) * sj1;
    V y0s = L::broadcast(0.0), y1s = L::broadcast(0.0);
    if (with_y) {
        const V lg = L::log_lanes(xs * L::broadcast(0.5)) + L::broadcast(kGamma);
        y0s = L::broadcast(kTwoOverPiC) * L::fma(lg, j0s, sy0);
        y1s = L::broadcast(kTwoOverPiC) * (lg * j1s - L::broadcast(1.0) / xs)
              - xs * L::broadcast(0.5 / 3.14159265358979323846) * sy1;
    }

    // --- asymptotic branch, clamped to [8, inf) ---
    const V xa = L::select(small, L::broadcast(8.0), xv);
    const V r = L::broadcast(8.0) / xa;
    const V u = L::fma(r * r, L::broadcast(2.0), L::broadcast(-1.0));
    const V P0 = cheb_eval<L>(kP0Cheb, u);
    const V Q0 = r * cheb_eval<L>(kQ0Cheb, u);
    const V P1 = cheb_eval<L>(kP1Cheb, u);
    const V Q1 = r * cheb_eval<L>(kQ1Cheb, u);
    const V env = L::sqrt(L::broadcast(kTwoOverPiC) / xa);
    V sx, cx;
    sincos_core<L>(xa, sx, cx);
    const V isq2 = L::broadcast(kInvSqrt2);
    const V cchi0 = (cx + sx) * isq2;      // cos(x - pi/4)
    const V schi0 = (sx - cx) * isq2;      // sin(x - pi/4)
    const V cchi1 = schi0;                 // cos(x - 3pi/4)
    const V schi1 = L::broadcast(0.0) - cchi0;
    const V j0a = env * L::fma(P0, cchi0, L::broadcast(0.0) - Q0 * schi0);
    const V y0a = env * L::fma(P0, schi0, Q0 * cchi0);
    const V j1a = env * L::fma(P1, cchi1, L::broadcast(0.0) - Q1 * schi1);
    const V y1a = env * L::fma(P1, schi1, Q1 * cchi1);

    L::store(j0, L::select(small, j0s, j0a));
    L::store(j1, L::select(small, j1s, j1a));
    if (with_y) {
        L::store(y0, L::select(small, y0s, y0a));
        L::store(y1, L::select(small, y1s, y1a));
    }
}

template <class L>
inline void run_j0y0j1y1(const double* x, std::size_t n, double* j0, double* y0,
                         double* j1, double* y1) {
    constexpr std::size_t W = L::width;
    std::size_t i = 0;
    for (; i + W <= n; i += W)
        j0y0j1y1_block<L, true>(x + i, j0 + i, y0 + i, j1 + i, y1 + i);
    if (i < n) {
        double xb[W], a[W], b[W], c[W], d[W];
        for (std::size_t k = 0; k < W; ++k) xb[k] = x[i + (k < n - i ? k : 0)];
        j0y0j1y1_block<L, true>(xb, a, b, c, d);
        for (std::size_t k = 0; i + k < n; ++k) {
            j0[i + k] = a[k]; y0[i + k] = b[k]; j1[i + k] = c[k]; y1[i + k] = d[k];
        }
    }
}

template <class L>
inline void run_j0j1(const double* x, std::size_t n, double* j0, double* j1) {
    constexpr std::size_t W = L::width;
    std::size_t i = 0;
    for (; i + W <= n; i += W)
        j0y0j1y1_block<L, false>(x + i, j0 + i, nullptr, j1 + i, nullptr);
    if (i < n) {
        double xb[W], a[W], c[W];
        for (std::size_t k = 0; k < W; ++k) xb[k] = x[i + (k < n - i ? k : 0)];
        j0y0j1y1_block<L, false>(xb, a, nullptr, c, nullptr);
        for (std::size_t k = 0; i + k < n; ++k) { j0[i + k] = a[k]; j1[i + k] = c[k]; }
    }
}

template <class L>
inline void run_sincos(const double* x, std::size_t n, double* s, double* c) {
    constexpr std::size_t W = L::width;
    std::size_t i = 0;
    using V = typename L::V;
    for (; i + W <= n; i += W) {
        V sv, cv;
        sincos_core<L>(L::load(x + i), sv, cv);
        L::store(s + i, sv);
        L::store(c + i, cv);
    }
    if (i < n) {
        double xb[W], sb[W], cb[W];
        for (std::size_t k = 0; k < W; ++k) xb[k] = x[i + (k < n - i ? k : 0)];
        V sv, cv;
        sincos_core<L>(L::load(xb), sv, cv);
        L::store(sb, sv);
        L::store(cb, cv);
        for (std::size_t k = 0; i + k < n; ++k) { s[i + k] = sb[k]; c[i + k] = cb[k]; }
    }
}

}  // namespace elast::simd::detail
