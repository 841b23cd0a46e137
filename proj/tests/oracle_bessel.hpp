#pragma once

// Quad-precision ascending-series reference values for J0, J1, Y0, Y1.
// Test-only: slow, but accurate to ~1e-33 minus cancellation losses, which
// keeps it well below 1e-12 relative everywhere in |z| <= 55.

#include <complex>
#include <quadmath.h>

namespace oracle {

using qcplx = __complex128;

inline qcplx make(std::complex<double> z) {
    qcplx q;
    __real__ q = z.real();
    __imag__ q = z.imag();
    return q;
}

inline std::complex<double> collapse(qcplx q) {
    return {double(crealq(q)), double(cimagq(q))};
}

inline __float128 qgamma() {
    static const __float128 g =
        strtoflt128("0.57721566490153286060651209008240243104", nullptr);
    return g;
}

inline qcplx j0_series(qcplx z, int terms = 400) {
    const qcplx w = -z * z / 4.0;
    qcplx sum = 1.0, term = 1.0;
    for (int m = 1; m <= terms; ++m) {
        term *= w / (__float128(m) * __float128(m));
        sum += term;
        if (cabsq(term) < 1e-40 * (cabsq(sum) + 1e-300) && m > 8) break;
    }
    return sum;
}

inline qcplx j1_series(qcplx z, int terms = 400) {
    const qcplx w = -z * z / 4.0;
    qcplx sum = 1.0, term = 1.0;
    for (int m = 1; m <= terms; ++m) {
        term *= w / (__float128(m) * __float128(m + 1));
        sum += term;
        if (cabsq(term) < 1e-40 * (cabsq(sum) + 1e-300) && m > 8) break;
    }
    return z / 2.0 * sum;
}

inline qcplx y0_series(qcplx z, int terms = 400) {
    const qcplx w = -z * z / 4.0;
    qcplx j0 = 1.0, hsum = 0.0, term = 1.0;
    __float128 h = 0.0;
    for (int m = 1; m <= terms; ++m) {
        term *= w / (__float128(m) * __float128(m));
        h += 1.0 / __float128(m);
        j0 += term;
        hsum -= h * term;
        if (cabsq(term) * (h + 1.0) < 1e-40 * (cabsq(j0) + cabsq(hsum) + 1e-300) &&
            m > 8)
            break;
    }
    const qcplx lg = clogq(z / 2.0) + qgamma();
    return 2.0 / M_PIq * (lg * j0 + hsum);
}

inline qcplx y1_series(qcplx z, int terms = 400) {
    const qcplx w = -z * z / 4.0;
    qcplx j1s = 1.0, hsum = 1.0, term = 1.0;  // k = 0: H_0 + H_1 = 1
    __float128 hk = 0.0, hk1 = 1.0;
    for (int k = 1; k <= terms; ++k) {
        term *= w / (__float128(k) * __float128(k + 1));
        hk += 1.0 / __float128(k);
        hk1 += 1.0 / __float128(k + 1);
        j1s += term;
        hsum += (hk + hk1) * term;
        if (cabsq(term) * (hk + hk1 + 1.0) <
                1e-40 * (cabsq(j1s) + cabsq(hsum) + 1e-300) &&
            k > 8)
            break;
    }
    const qcplx lg = clogq(z / 2.0) + qgamma();
    const qcplx j1 = z / 2.0 * j1s;
    return 2.0 / M_PIq * lg * j1 - 2.0 / (M_PIq * z) - z / (2.0 * M_PIq) * hsum;
}

inline std::complex<double> j0(std::complex<double> z) { return collapse(j0_series(make(z))); }
inline std::complex<double> j1(std::complex<double> z) { return collapse(j1_series(make(z))); }
inline std::complex<double> y0(std::complex<double> z) { return collapse(y0_series(make(z))); }
inline std::complex<double> y1(std::complex<double> z) { return collapse(y1_series(make(z))); }

}  // namespace oracle
