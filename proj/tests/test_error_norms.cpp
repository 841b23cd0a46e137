#include <doctest.h>

#include <quadmath.h>

#include <random>

#include <fsib/error_norms.hpp>

#include "case_fixtures.hpp"

using namespace fsib;
using fixtures::family_params;

namespace {

const CaseSpec kLin2dTT{Dimension::Channel2D, SolidLaw::Linear, Regime::Transient,
                        Regime::Transient};

// fluid points with unit-total weights
PointSet fluid_points(std::size_t n, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    PointSet ps;
    ps.dim = 2;
    ps.weights.emplace();
    for (std::size_t i = 0; i < n; ++i) {
        ps.coords.push_back({u01(rng), 0.99 * u01(rng), 0.0});
        ps.weights->push_back(1.0 / double(n));
    }
    return ps;
}

}  // namespace

TEST_CASE("zero error for numeric == analytic samples") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    const PointSet ps = fluid_points(20, 5u);
    const FieldTable t = sample_fields(sol, ps, {0.2}, {"v_f"});
    CHECK(l2_space(t.rows, sol, ps) == 0.0);
}

TEST_CASE("constant error on a unit-total-weight set") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    const PointSet ps = fluid_points(32, 6u);
    FieldTable t = sample_fields(sol, ps, {0.4}, {"p_f"});
    const double c = -0.8125;
    for (auto& r : t.rows) r.value[0] += c;
    CHECK(l2_space(t.rows, sol, ps) == doctest::Approx(std::abs(c)).epsilon(1e-14));
}

TEST_CASE("missing weights require the explicit uniform opt-in") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    PointSet ps = fluid_points(8, 7u);
    ps.weights.reset();
    const FieldTable t = sample_fields(sol, ps, {0.1}, {"v_f"});
    CHECK_THROWS_AS((void)l2_space(t.rows, sol, ps), param_error);
    CHECK_NOTHROW((void)l2_space(t.rows, sol, ps, /*allow_uniform_weights=*/true));
}

TEST_CASE("weighted sum matches quad-precision accumulation") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    std::mt19937_64 rng(9001u);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    PointSet ps = fluid_points(500, 8u);
    FieldTable t = sample_fields(sol, ps, {0.3}, {"v_f"});
    std::vector<double> errs;
    for (auto& r : t.rows) {
        const double e = 2.0 * u01(rng) - 1.0;
        r.value[0] += e;
        errs.push_back(e);
    }
    const double got = l2_space(t.rows, sol, ps);
    __float128 acc = 0.0;
    for (std::size_t i = 0; i < errs.size(); ++i)
        acc += __float128((*ps.weights)[i]) * __float128(errs[i]) * __float128(errs[i]);
    const double want = double(sqrtq(acc));
    CHECK(std::abs(got - want) < 1e-14 * want);
}

TEST_CASE("space-time norm basics") {
    // constant spatial norm a over a window of length T gives a sqrt(T)
    const double a = 0.73, T = 1.6;
    std::vector<double> times, norms;
    for (int k = 0; k <= 50; ++k) {
        times.push_back(9.0 * T + T * k / 50.0);
        norms.push_back(a);
    }
    CHECK(l2_space_time(norms, times) ==
          doctest::Approx(a * std::sqrt(T)).epsilon(1e-14));

    CHECK_THROWS_AS((void)l2_space_time({1.0}, {0.0}), param_error);
}

TEST_CASE("space-time norm of a linear-in-t spatial norm") {
    // n(t) = a + b t over [0, 1]: integral of n^2 is a^2 + a b + b^2/3
    const double a = 1.0, b = 0.5;
    const int n = 200000;
    std::vector<double> times, norms;
    times.reserve(n + 1);
    norms.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        const double t = double(k) / n;
        times.push_back(t);
        norms.push_back(a + b * t);
    }
    const double want = std::sqrt(a * a + a * b + b * b / 3.0);
    CHECK(l2_space_time(norms, times) == doctest::Approx(want).epsilon(1e-12));
}

TEST_CASE("windowing: periodic error norm is window-invariant") {
    const double T = 1.024;
    auto window_norm = [&](double t0) {
        std::vector<double> times, norms;
        for (int k = 0; k <= 256; ++k) {
            const double t = t0 + T * k / 256.0;
            times.push_back(t);
            norms.push_back(std::abs(std::sin(2.0 * detail::pi * t / T)) + 0.25);
        }
        return l2_space_time(norms, times);
    };
    CHECK(window_norm(9.0 * T) == doctest::Approx(window_norm(0.0)).epsilon(1e-12));
}

TEST_CASE("norm axioms on the discrete functional") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    const PointSet ps = fluid_points(64, 9u);
    std::mt19937_64 rng(4242u);
    std::uniform_real_distribution<double> u01(-1.0, 1.0);
    const FieldTable base = sample_fields(sol, ps, {0.6}, {"v_f"});
    std::vector<double> e1, e2;
    for (std::size_t i = 0; i < base.rows.size(); ++i) {
        e1.push_back(u01(rng));
        e2.push_back(u01(rng));
    }
    auto with_error = [&](const std::vector<double>& e, double lambda) {
        FieldTable t = base;
        for (std::size_t i = 0; i < t.rows.size(); ++i)
            t.rows[i].value[0] += lambda * e[i];
        return l2_space(t.rows, sol, ps);
    };
    const double n1 = with_error(e1, 1.0);
    const double lam = -2.7;
    CHECK(with_error(e1, lam) == doctest::Approx(std::abs(lam) * n1).epsilon(1e-13));
    std::vector<double> e12(e1.size());
    for (std::size_t i = 0; i < e1.size(); ++i) e12[i] = e1[i] + e2[i];
    CHECK(with_error(e12, 1.0) <= n1 + with_error(e2, 1.0) + 1e-14);
}

TEST_CASE("error_norms end-to-end against a perturbed export") {
    const AnalyticSolution sol(kLin2dTT, family_params(kLin2dTT));
    PointSet ps = fluid_points(40, 10u);
    FieldTable t = sample_fields(sol, ps, {0.0, 0.256, 0.512, 0.768, 1.024}, {"v_f"});
    for (auto& r : t.rows) r.value[0] += 1e-3;
    const auto reports = error_norms(t, sol, ps);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].field == "v_f");
    REQUIRE(reports[0].spatial_norms.size() == 5);
    for (double nk : reports[0].spatial_norms)
        CHECK(nk == doctest::Approx(1e-3).epsilon(1e-12));
    CHECK(reports[0].space_time ==
          doctest::Approx(1e-3 * std::sqrt(1.024)).epsilon(1e-12));
    const std::string kv = reports[0].key_values();
    CHECK(kv.find("error.v_f.space_time = ") != std::string::npos);
}

TEST_CASE("observed order: synthetic rates") {
    std::vector<std::pair<double, double>> first, third;
    for (double d : {0.1, 0.05, 0.025, 0.0125}) {
        first.emplace_back(d, 3.0 * d);
        third.emplace_back(d, d * d * d);
    }
    CHECK(observed_order(first) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(observed_order(third) == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("observed order on the published refinement triples") {
    const std::vector<std::pair<double, double>> fig8{
        {6.40e-2, 4.44e-2}, {8.00e-3, 8.42e-3}, {1.00e-3, 1.22e-3}};
    CHECK(observed_order(fig8) == doctest::Approx(0.86431).epsilon(1e-4));
}

TEST_CASE("observed order is scale invariant") {
    std::mt19937_64 rng(31u);
    std::uniform_real_distribution<double> u01(0.5, 2.0);
    std::vector<std::pair<double, double>> pairs;
    for (double d : {0.2, 0.08, 0.03, 0.011})
        pairs.emplace_back(d, u01(rng) * std::pow(d, 1.7));
    const double s0 = observed_order(pairs);
    std::vector<std::pair<double, double>> scaled;
    for (auto [d, e] : pairs) scaled.emplace_back(17.0 * d, 0.003 * e);
    CHECK(observed_order(scaled) == doctest::Approx(s0).epsilon(1e-12));
}

TEST_CASE("observed order input validation") {
    CHECK_THROWS_AS((void)observed_order({{0.1, 1.0}}), param_error);
    CHECK_THROWS_AS((void)observed_order({{0.1, 1.0}, {0.1, 0.5}}), param_error);
    CHECK_THROWS_AS((void)observed_order({{0.1, 1.0}, {0.05, -0.5}}), param_error);
}
