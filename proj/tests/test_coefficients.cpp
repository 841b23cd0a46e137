#include <doctest.h>

#include <random>

#include <fsib/solution.hpp>

#include "case_fixtures.hpp"

using namespace fsib;
using fixtures::family_params;
using fixtures::random_params;

namespace {

double crel(cplx got, cplx want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace

TEST_CASE("2D linear quasi-static/quasi-static closed form") {
    const CaseSpec c{Dimension::Channel2D, SolidLaw::Linear, Regime::QuasiStatic,
                     Regime::QuasiStatic};
    ProblemParams p = family_params(c);
    const auto d = derive_constants(c, p);
    const auto k = solve_coefficients(c, p, d);
    CHECK(std::abs(k.c3) == 0.0);
    CHECK(k.c4.real() == doctest::Approx(7.2).epsilon(1e-12));
    CHECK(k.c4.imag() == 0.0);
    CHECK(k.c1.real() == doctest::Approx(50.0).epsilon(1e-12));
    CHECK(k.c1.imag() == doctest::Approx(13.499031).epsilon(1e-6));
    CHECK(k.P_f == p.P);
    CHECK(k.P_s == p.P);
}

TEST_CASE("3D nonlinear quasi-static/quasi-static closed form") {
    const CaseSpec c{Dimension::Tube3D, SolidLaw::Nonlinear, Regime::QuasiStatic,
                     Regime::QuasiStatic};
    ProblemParams p = family_params(c);
    const auto d = derive_constants(c, p);
    const auto k = solve_coefficients(c, p, d);
    CHECK(std::abs(k.c4) == 0.0);
    const cplx want = p.P * p.H_i * p.H_i / (4.0 * p.mu_f) +
                      cplx(0.0, d.omega) * p.P * (p.H_o * p.H_o - p.H_i * p.H_i) /
                          (4.0 * p.mu_s);
    CHECK(crel(k.c1, want) < 1e-14);
    CHECK(k.c3 == -p.P);
}

TEST_CASE("zero forcing gives zero coefficients") {
    for (const CaseSpec& c : all_cases()) {
        ProblemParams p = family_params(c);
        p.P = {0.0, 0.0};
        const auto d = derive_constants(c, p);
        const auto k = solve_coefficients(c, p, d);
        CHECK(std::abs(k.c1) == 0.0);
        CHECK(std::abs(k.c2) == 0.0);
        CHECK(std::abs(k.c3) == 0.0);
        CHECK(std::abs(k.c4) == 0.0);
        const auto num = solve_coefficients_numeric(c, p, d);
        CHECK(std::abs(num.coeffs.c1) == 0.0);
        CHECK(std::abs(num.coeffs.c3) == 0.0);
        CHECK(std::abs(num.coeffs.c4) == 0.0);
    }
}

TEST_CASE("closed forms match the direct system solve across all cases") {
    std::mt19937_64 rng(20240817u);
    for (const CaseSpec& c : all_cases()) {
        // the headline family first, then random draws
        std::vector<ProblemParams> draws{family_params(c)};
        int attempts = 0;
        while (draws.size() < 21 && attempts < 200) {
            ++attempts;
            if (auto p = random_params(c, rng)) draws.push_back(*p);
        }
        REQUIRE(draws.size() == 21);
        for (const ProblemParams& p : draws) {
            const auto d = derive_constants(c, p);
            const auto closed = solve_coefficients(c, p, d);
            const auto numeric = solve_coefficients_numeric(c, p, d);
            if (numeric.near_resonant) continue;
            INFO("case ", c.name());
            CHECK(crel(closed.c1, numeric.coeffs.c1) < 1e-10);
            CHECK(crel(closed.c2, numeric.coeffs.c2) < 1e-10);
            CHECK(crel(closed.c3, numeric.coeffs.c3) < 1e-10);
            CHECK(crel(closed.c4, numeric.coeffs.c4) < 1e-10);
        }
    }
}

TEST_CASE("resonance: determinant collapses at omega_n, recovers between") {
    const CaseSpec c{Dimension::Channel2D, SolidLaw::Linear, Regime::QuasiStatic,
                     Regime::Transient};
    ProblemParams p = family_params(c);
    p.rho_f = 0.0;

    const auto omegas = resonance_frequencies(p, 3);
    CHECK(omegas[0] == doctest::Approx(detail::pi / 0.4 * std::sqrt(0.1)).epsilon(1e-12));

    for (std::size_t n = 0; n + 1 < omegas.size(); ++n) {
        ProblemParams pr = p;
        pr.T = 2.0 * detail::pi / omegas[n];
        const auto d = derive_constants(c, pr);
        const auto sys = coupling_system(c, pr, d);
        CHECK(std::abs(sys.determinant()) < 1e-10 * sys.row_norm_scale());
        // the closed form refuses to evaluate here
        CHECK_THROWS_AS((void)solve_coefficients(c, pr, d), singular_error);
        // the numeric route flags it instead
        const auto num = solve_coefficients_numeric(c, pr, d);
        CHECK(num.near_resonant);

        ProblemParams pm = p;
        pm.T = 2.0 * detail::pi / (0.5 * (omegas[n] + omegas[n + 1]));
        const auto dm = derive_constants(c, pm);
        const auto sysm = coupling_system(c, pm, dm);
        CHECK(std::abs(sysm.determinant()) > 1e-3 * sysm.row_norm_scale());
        CHECK(!solve_coefficients_numeric(c, pm, dm).near_resonant);
    }
}

TEST_CASE("constructing a solution runs the singularity guard") {
    const CaseSpec c{Dimension::Channel2D, SolidLaw::Linear, Regime::QuasiStatic,
                     Regime::Transient};
    ProblemParams p = family_params(c);
    p.rho_f = 0.0;
    p.T = 2.0 * detail::pi / resonance_frequencies(p, 0)[0];
    CHECK_THROWS_AS((void)AnalyticSolution(c, p), singular_error);
}

TEST_CASE("derive_constants is deterministic") {
    const CaseSpec c{Dimension::Tube3D, SolidLaw::Nonlinear, Regime::Transient,
                     Regime::Transient};
    const ProblemParams p = family_params(c);
    const auto a = derive_constants(c, p);
    const auto b = derive_constants(c, p);
    CHECK(*a.k_f == *b.k_f);
    CHECK(*a.J0f_star == *b.J0f_star);
    CHECK(*a.Delta1 == *b.Delta1);
    CHECK(*a.nu1 == *b.nu1);
}

TEST_CASE("resonance frequencies are an arithmetic progression") {
    ProblemParams p;
    p.rho_s = 2.5;
    p.mu_s = 0.3;
    p.H_i = 0.8;
    p.H_o = 1.3;
    const auto w = resonance_frequencies(p, 5);
    REQUIRE(w.size() == 6);
    const double spacing = detail::pi / (p.H_o - p.H_i) * std::sqrt(p.mu_s / p.rho_s);
    for (std::size_t n = 0; n + 1 < w.size(); ++n) {
        CHECK(w[n + 1] - w[n] == doctest::Approx(spacing).epsilon(1e-12));
        CHECK(w[n] < w[n + 1]);
    }
    // defining condition cos[k_s (H_o - H_i)] = 0
    for (double omega : w) {
        const double ks = omega * std::sqrt(p.rho_s / p.mu_s);
        CHECK(std::abs(std::cos(ks * (p.H_o - p.H_i))) < 1e-12);
    }
    p.rho_s = 0.0;
    CHECK_THROWS_AS((void)resonance_frequencies(p, 2), param_error);
}

TEST_CASE("coefficient subsets per case") {
    for (const CaseSpec& c : all_cases()) {
        const ProblemParams p = family_params(c);
        const auto k = solve_coefficients(c, p, derive_constants(c, p));
        if (c.is3d()) CHECK(std::abs(k.c2) == 0.0);  // centerline regularity
        if (!c.is3d() && c.fluid_transient()) CHECK(k.c2 == k.c1);  // smoothness
        if (!c.is3d() && !c.fluid_transient()) CHECK(std::abs(k.c2) == 0.0);
        if (c.nonlinear()) CHECK(k.c3 == -p.P);  // radial traction balance
        CHECK(k.P_f == k.P_s);
    }
}
