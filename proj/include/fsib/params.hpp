#pragma once

// Case taxonomy, user-facing problem parameters, and the derived constants
// shared by the coefficient formulas (wavenumbers, Bessel evaluations at the
// domain radii, and the trigonometric shorthands).

#include <array>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

#include "complex_bessel.hpp"

namespace fsib {

struct param_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Parameter sets at (or numerically indistinguishable from) a resonance of
/// the coupling system, where no unique solution exists.
struct singular_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Dimension { Channel2D, Tube3D };
enum class SolidLaw { Linear, Nonlinear };
enum class Regime { QuasiStatic, Transient };

/// One of the 16 solution permutations.
struct CaseSpec {
    Dimension dimension = Dimension::Channel2D;
    SolidLaw solid_law = SolidLaw::Linear;
    Regime fluid_regime = Regime::Transient;
    Regime solid_regime = Regime::Transient;

    bool fluid_transient() const { return fluid_regime == Regime::Transient; }
    bool solid_transient() const { return solid_regime == Regime::Transient; }
    bool is3d() const { return dimension == Dimension::Tube3D; }
    bool nonlinear() const { return solid_law == SolidLaw::Nonlinear; }

    bool operator==(const CaseSpec&) const = default;

    std::string name() const {
        std::string s = is3d() ? "tube3d" : "channel2d";
        s += nonlinear() ? "_nonlinear" : "_linear";
        s += fluid_transient() ? "_tf" : "_qf";
        s += solid_transient() ? "_ts" : "_qs";
        return s;
    }
};

inline std::array<CaseSpec, 16> all_cases() {
    std::array<CaseSpec, 16> out{};
    std::size_t k = 0;
    for (Dimension d : {Dimension::Channel2D, Dimension::Tube3D})
        for (SolidLaw l : {SolidLaw::Linear, SolidLaw::Nonlinear})
            for (Regime f : {Regime::QuasiStatic, Regime::Transient})
                for (Regime s : {Regime::QuasiStatic, Regime::Transient})
                    out[k++] = CaseSpec{d, l, f, s};
    return out;
}

/// Material, geometric and temporal parameters. P is the complex pressure
/// amplitude over the domain length; its phase shifts the cycle in time.
struct ProblemParams {
    double rho_f = 0.0;  ///< fluid mass density (0 in the quasi-static fluid regime)
    double mu_f = 0.0;   ///< fluid dynamic viscosity
    double rho_s = 0.0;  ///< solid mass density (0 in the quasi-static solid regime)
    double mu_s = 0.0;   ///< solid shear stiffness
    double H_i = 0.0;    ///< channel half-height / tube inner radius
    double H_o = 0.0;    ///< wall outer position / outer radius
    double L = 0.0;      ///< domain length
    double T = 0.0;      ///< temporal cycle length
    cplx P{0.0, 0.0};    ///< pressure amplitude over domain length

    /// Checks positivity/ordering and the regime/density consistency rules.
    /// A positive density under a quasi-static regime (or zero density under
    /// a transient one) is a hard error, not a silent branch switch.
    void validate(const CaseSpec& c) const {
        if (!(mu_f > 0.0)) throw param_error("mu_f must be > 0");
        if (!(mu_s > 0.0)) throw param_error("mu_s must be > 0");
        if (!(H_i > 0.0)) throw param_error("H_i must be > 0");
        if (!(H_o > H_i)) throw param_error("H_o must be > H_i");
        if (!(L > 0.0)) throw param_error("L must be > 0");
        if (!(T > 0.0)) throw param_error("T must be > 0");
        if (rho_f < 0.0 || rho_s < 0.0) throw param_error("densities must be >= 0");
        if (c.fluid_transient() != (rho_f > 0.0))
            throw param_error(c.fluid_transient()
                                  ? "transient fluid requires rho_f > 0"
                                  : "quasi-static fluid requires rho_f = 0");
        if (c.solid_transient() != (rho_s > 0.0))
            throw param_error(c.solid_transient()
                                  ? "transient solid requires rho_s > 0"
                                  : "quasi-static solid requires rho_s = 0");
        if (!std::isfinite(P.real()) || !std::isfinite(P.imag()))
            throw param_error("P must be finite");
    }
};

/// omega = 2 pi / T
inline double angular_frequency(double T) {
    if (!(T > 0.0)) throw param_error("cycle length T must be > 0");
    return 2.0 * detail::pi / T;
}

/// Womersley number H_i sqrt(omega rho_f / mu_f); transient fluid only.
inline double womersley(const ProblemParams& p) {
    if (!(p.rho_f > 0.0))
        throw param_error("Womersley number undefined for a quasi-static fluid");
    return p.H_i * std::sqrt(angular_frequency(p.T) * p.rho_f / p.mu_f);
}

/// Reynolds number 2 rho_f V_f H_i / mu_f with V_f the peak fluid speed.
inline double reynolds(const ProblemParams& p, double V_f) {
    if (!(p.rho_f > 0.0))
        throw param_error("Reynolds number undefined for a quasi-static fluid");
    if (V_f < 0.0) throw param_error("peak speed must be >= 0");
    return 2.0 * p.rho_f * V_f * p.H_i / p.mu_f;
}

/// Short-form constants derived from the problem parameters. Entries for
/// regimes that are not active in the case are left unset rather than zeroed.
struct DerivedConstants {
    double omega = 0.0;

    // transient fluid
    std::optional<cplx> k_f;       // sqrt(i rho_f omega / mu_f), principal root
    std::optional<cplx> alpha;     // e^{k_f H_i} + e^{-k_f H_i}          (2D)
    std::optional<cplx> beta;      // mu_f k_f (e^{k_f H_i} - e^{-k_f H_i}) (2D)
    std::optional<cplx> J0f_star;  // J0(i k_f H_i)                       (3D)
    std::optional<cplx> J1f_star;  // k_f J1(i k_f H_i)                   (3D)

    // transient solid
    std::optional<double> k_s;  // omega sqrt(rho_s / mu_s)
    std::optional<cplx> J0s_r, Y0s_r;                      // J0/Y0(-k_s H_o)  (3D)
    std::optional<cplx> gamma;                             // J0s_r / Y0s_r    (3D)
    std::optional<cplx> J0s_star, J1s_star;                // at -k_s H_i      (3D)
    std::optional<cplx> Y0s_star, Y1s_star;                //                  (3D)
    std::optional<cplx> Delta0, Delta1, nu0, nu1;          //                  (3D)
    std::optional<cplx> xi1, xi2, zeta1, zeta2;            // (2D nonlinear)
};

/// Populates every constant the case's coefficient formulas reference.
/// Throws singular_error when an outer-radius denominator is numerically
/// indistinguishable from zero.
inline DerivedConstants derive_constants(const CaseSpec& c, const ProblemParams& p) {
    p.validate(c);
    DerivedConstants d;
    d.omega = angular_frequency(p.T);

    if (c.fluid_transient()) {
        const cplx kf = std::sqrt(cplx(0.0, p.rho_f * d.omega / p.mu_f));
        d.k_f = kf;
        if (c.is3d()) {
            const cplx arg = cplx(0.0, 1.0) * kf * p.H_i;
            d.J0f_star = bessel_j(0, arg);
            d.J1f_star = kf * bessel_j(1, arg);
        } else {
            const cplx ep = std::exp(kf * p.H_i), em = std::exp(-kf * p.H_i);
            d.alpha = ep + em;
            d.beta = p.mu_f * kf * (ep - em);
        }
    }

    if (c.solid_transient()) {
        const double ks = d.omega * std::sqrt(p.rho_s / p.mu_s);
        d.k_s = ks;
        if (c.is3d()) {
            const cplx zo{-ks * p.H_o, 0.0}, zi{-ks * p.H_i, 0.0};
            d.J0s_r = bessel_j(0, zo);
            d.Y0s_r = bessel_y(0, zo);
            d.J0s_star = bessel_j(0, zi);
            d.J1s_star = cplx(0.0, ks) * bessel_j(1, zi);
            d.Y0s_star = bessel_y(0, zi);
            d.Y1s_star = cplx(0.0, ks) * bessel_y(1, zi);
            const double scale = std::abs(*d.J0s_r) + std::abs(*d.Y0s_star);
            if (std::abs(*d.Y0s_r) < 1e-12 * scale)
                throw singular_error("Y0(-k_s H_o) vanishes; solid mode singular");
            d.gamma = *d.J0s_r / *d.Y0s_r;
            d.Delta0 = *d.J0s_star - *d.gamma * *d.Y0s_star;
            d.Delta1 = *d.J1s_star - *d.gamma * *d.Y1s_star;
            d.nu0 = *d.Y0s_star / *d.Y0s_r;
            d.nu1 = *d.Y1s_star / *d.Y0s_r;
        } else if (c.nonlinear()) {
            const double so = std::sin(ks * p.H_o), co = std::cos(ks * p.H_o);
            const double si = std::sin(ks * p.H_i), ci = std::cos(ks * p.H_i);
            if (std::abs(so) < 1e-12)
                throw singular_error("sin(k_s H_o) vanishes; solid mode singular");
            d.xi1 = cplx(si + co / so * ci, 0.0);
            d.xi2 = cplx(co / so * si - ci, 0.0);
            d.zeta1 = cplx(ci / so, 0.0);
            d.zeta2 = cplx(1.0 - si / so, 0.0);
        }
    }
    return d;
}

}  // namespace fsib
