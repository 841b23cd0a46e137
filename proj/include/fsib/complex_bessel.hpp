#pragma once

// Bessel functions J0, J1, Y0, Y1 of general complex argument.
//
// Evaluation strategy: ascending power series (with log term for Y) for
// |z| <= 4; backward (Miller) recurrence with Neumann-series Y for
// 4 < |z| <= 16, which avoids the cancellation the raw series suffers at
// mid-range arguments; Hankel large-argument expansions for |z| > 16.
// Arguments with negative real part are first mapped into the right
// half-plane through the integer-order connection formulas, which also fixes
// the branch of Y on the negative real axis: a value -x + 0i is treated as
// x*exp(+i*pi), the upper-side limit of the cut.

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace fsib {

using cplx = std::complex<double>;

struct numeric_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr double pi = 3.14159265358979323846;
inline constexpr double euler_gamma = 0.57721566490153286061;

inline bool finite(cplx z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

// Compensated accumulator; keeps series summation error near one ulp of the
// running sum instead of one ulp of the largest term.
struct kahan_sum {
    cplx s{0.0, 0.0};
    cplx c{0.0, 0.0};
    void add(cplx x) {
        const cplx y = x - c;
        const cplx t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

// J0(z) = sum_m (-z^2/4)^m / (m!)^2
inline cplx j0_series(cplx z) {
    const cplx w = -0.25 * z * z;
    kahan_sum acc;
    cplx term{1.0, 0.0};
    acc.add(term);
    for (int m = 1; m <= 200; ++m) {
        term *= w / double(m * m);
        acc.add(term);
        if (std::abs(term) < 1e-17 * (std::abs(acc.s) + 1e-300)) break;
    }
    return acc.s;
}

// J1(z) = (z/2) sum_m (-z^2/4)^m / (m! (m+1)!)
inline cplx j1_series(cplx z) {
    const cplx w = -0.25 * z * z;
    kahan_sum acc;
    cplx term{1.0, 0.0};
    acc.add(term);
    for (int m = 1; m <= 200; ++m) {
        term *= w / double(m * (m + 1));
        acc.add(term);
        if (std::abs(term) < 1e-17 * (std::abs(acc.s) + 1e-300)) break;
    }
    return 0.5 * z * acc.s;
}

// Y0(z) = (2/pi) [ (log(z/2) + gamma) J0(z) + sum_{m>=1} (-1)^{m+1} H_m (z^2/4)^m / (m!)^2 ]
inline cplx y0_series(cplx z) {
    const cplx w = -0.25 * z * z;
    kahan_sum j0acc, hacc;
    cplx term{1.0, 0.0};
    j0acc.add(term);
    double harmonic = 0.0;
    for (int m = 1; m <= 200; ++m) {
        term *= w / double(m * m);   // term = (-1)^m (z^2/4)^m / (m!)^2
        harmonic += 1.0 / m;
        j0acc.add(term);
        hacc.add(-harmonic * term);  // = (-1)^{m+1} H_m (z^2/4)^m/(m!)^2
        if (std::abs(term) * (harmonic + 1.0) <
            1e-17 * (std::abs(j0acc.s) + std::abs(hacc.s) + 1e-300))
            break;
    }
    const cplx lg = std::log(0.5 * z) + euler_gamma;
    return (2.0 / pi) * (lg * j0acc.s + hacc.s);
}

// Y1(z) = (2/pi)(log(z/2)+gamma) J1(z) - 2/(pi z)
//         - (z/(2 pi)) sum_{k>=0} (H_k + H_{k+1}) (-z^2/4)^k / (k! (k+1)!)
inline cplx y1_series(cplx z) {
    const cplx w = -0.25 * z * z;
    kahan_sum j1acc, hacc;
    cplx term{1.0, 0.0};
    j1acc.add(term);
    hacc.add(term);  // k = 0: H_0 + H_1 = 1
    double hk = 0.0, hk1 = 1.0;
    for (int k = 1; k <= 200; ++k) {
        term *= w / double(k * (k + 1));
        hk += 1.0 / k;
        hk1 += 1.0 / (k + 1);
        j1acc.add(term);
        hacc.add((hk + hk1) * term);
        if (std::abs(term) * (hk + hk1 + 1.0) <
            1e-17 * (std::abs(j1acc.s) + std::abs(hacc.s) + 1e-300))
            break;
    }
    const cplx lg = std::log(0.5 * z) + euler_gamma;
    const cplx j1 = 0.5 * z * j1acc.s;
    return (2.0 / pi) * lg * j1 - 2.0 / (pi * z) - z / (2.0 * pi) * hacc.s;
}

// Hankel expansion, Re z >= 0, |z| > 12. Sums S± = sum_k (±i)^k a_k(nu)/z^k
// truncated at the smallest term, then
//   H1 = C e^{+i chi} S+,  H2 = C e^{-i chi} S-,  C = sqrt(2/(pi z)),
//   J = (H1 + H2)/2,  Y = (H1 - H2)/(2i),  chi = z - (2 nu + 1) pi/4.
inline void jy_asymptotic(int order, cplx z, cplx& j, cplx& y) {
    const double mu = 4.0 * order * order;
    const cplx iz = cplx(0.0, 1.0) / z;
    cplx tp{1.0, 0.0}, tm{1.0, 0.0};
    kahan_sum sp, sm;
    sp.add(tp);
    sm.add(tm);
    double prev = 1.0;
    for (int k = 0; k <= 60; ++k) {
        const double f = (mu - double(2 * k + 1) * double(2 * k + 1)) / (8.0 * (k + 1));
        tp *= f * iz;
        tm *= -f * iz;
        const double mag = std::abs(tp);
        if (mag >= prev) break;  // past the optimal truncation point
        sp.add(tp);
        sm.add(tm);
        prev = mag;
        if (mag < 1e-17) break;
    }
    const cplx chi = z - (2.0 * order + 1.0) * (pi / 4.0);
    const cplx pref = std::sqrt(2.0 / (pi * z));
    const cplx h1 = pref * std::exp(cplx(0.0, 1.0) * chi) * sp.s;
    const cplx h2 = pref * std::exp(cplx(0.0, -1.0) * chi) * sm.s;
    j = 0.5 * (h1 + h2);
    y = cplx(0.0, -0.5) * (h1 - h2);
}

// Backward-recurrence J chain with Neumann-series Y, Re z >= 0,
// 4 < |z| <= 16. The downward recurrence b_{n-1} = (2n/z) b_n - b_{n+1} is
// normalized against e^{-i sgn(Im z) z} = J0 + 2 sum_k (-i sgn)^k J_k, whose
// magnitude matches the largest chain entries off the real axis (the plain
// 1 = J0 + 2 J2 + ... normalizer cancels there). Y0 and Y1 come from
//   Y0 = (2/pi) [ (log(z/2) + g) J0 + 2 sum_k (-1)^{k+1} J_{2k} / k ]
//   Y1 = -Y0'  = (2/pi) [ (log(z/2) + g) J1 - J0 / z
//                         - sum_k (-1)^{k+1} (J_{2k-1} - J_{2k+1}) / k ]
// so every term rides on the well-conditioned J values.
inline void jy_miller(int order, cplx z, cplx& j, cplx& y) {
    constexpr int cap = 64;
    std::array<cplx, cap> b{};
    const int nstart = std::min(cap - 2, static_cast<int>(std::abs(z) * 1.4 + 38.0) & ~1);
    b[nstart + 1] = cplx(0.0, 0.0);
    b[nstart] = cplx(1e-30, 0.0);
    for (int n = nstart; n >= 1; --n)
        b[n - 1] = (2.0 * n) / z * b[n] - b[n + 1];

    const cplx rot = z.imag() >= 0.0 ? cplx(0.0, -1.0) : cplx(0.0, 1.0);
    kahan_sum norm;
    norm.add(b[0]);
    cplx rk = rot;
    for (int k = 1; k <= nstart; ++k, rk *= rot) norm.add(2.0 * rk * b[k]);
    const cplx scale = std::exp(rot * z) / norm.s;  // J_n = b_n * scale

    kahan_sum y0sum, y1sum;
    double sign = 1.0;
    for (int k = 1; 2 * k + 1 <= nstart; ++k) {
        y0sum.add(sign * b[2 * k] / double(k));
        y1sum.add(sign * (b[2 * k - 1] - b[2 * k + 1]) / double(k));
        sign = -sign;
    }

    const cplx lg = std::log(0.5 * z) + euler_gamma;
    const cplx j0 = b[0] * scale, j1 = b[1] * scale;
    if (order == 0) {
        j = j0;
        y = (2.0 / pi) * (lg * j0 + 2.0 * y0sum.s * scale);
    } else {
        j = j1;
        y = (2.0 / pi) * (lg * j1 - j0 / z - y1sum.s * scale);
    }
}

// J and Y together for Re z >= 0, z != 0.
inline void jy_right_halfplane(int order, cplx z, cplx& j, cplx& y) {
    const double az = std::abs(z);
    if (az <= 4.0) {
        j = (order == 0) ? j0_series(z) : j1_series(z);
        y = (order == 0) ? y0_series(z) : y1_series(z);
    } else if (az <= 16.0) {
        jy_miller(order, z, j, y);
    } else {
        jy_asymptotic(order, z, j, y);
    }
}

inline void jy_dispatch(int order, cplx z, cplx& j, cplx& y) {
    if (z.real() >= 0.0) {
        jy_right_halfplane(order, z, j, y);
        return;
    }
    // z = w e^{+i pi} (Im z >= 0, incl. the cut) or w e^{-i pi} (Im z < 0).
    const cplx w = -z;
    cplx jw, yw;
    jy_right_halfplane(order, w, jw, yw);
    const double s =
        (z.imag() > 0.0 || (z.imag() == 0.0 && !std::signbit(z.imag()))) ? 1.0 : -1.0;
    const cplx ycont = yw + cplx(0.0, 2.0 * s) * jw;
    if (order == 0) {
        j = jw;
        y = ycont;
    } else {
        j = -jw;
        y = -ycont;
    }
}

}  // namespace detail

/// Bessel function of the first kind, order 0 or 1, complex argument.
inline cplx bessel_j(int order, cplx z) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("bessel_j: order must be 0 or 1");
    if (!detail::finite(z)) throw numeric_error("bessel_j: non-finite argument");
    if (z == cplx(0.0, 0.0)) return order == 0 ? cplx(1.0, 0.0) : cplx(0.0, 0.0);
    cplx j, y;
    detail::jy_dispatch(order, z, j, y);
    return j;
}

/// Bessel function of the second kind on the principal log branch; the cut
/// lies on the negative real axis and -x + 0i takes the upper-side limit.
inline cplx bessel_y(int order, cplx z) {
    if (order != 0 && order != 1)
        throw std::invalid_argument("bessel_y: order must be 0 or 1");
    if (!detail::finite(z)) throw numeric_error("bessel_y: non-finite argument");
    if (z == cplx(0.0, 0.0)) throw numeric_error("bessel_y: singular at z = 0");
    cplx j, y;
    detail::jy_dispatch(order, z, j, y);
    return y;
}

}  // namespace fsib
