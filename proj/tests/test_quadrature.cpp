// Tests for the adaptive Gauss-Kronrod integrator, the Richardson/Neville
// extrapolator, and the fixed Gauss-Legendre rule.

#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "conevac/quadrature.hpp"

using conevac::Complex;
using conevac::integrate_gk;
using conevac::integrate_gk_real;
using conevac::QuadratureConfig;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("integrate_gk reproduces elementary integrals", "[quadrature]") {
    auto poly = integrate_gk_real([](double x) { return x * x * x - 2.0 * x + 1.0; }, -1.0, 3.0);
    REQUIRE(poly.converged);
    CHECK_THAT(poly.value.real(), Catch::Matchers::WithinAbs(16.0, 1e-12));

    // Incommensurate frequency so the oscillatory integral has a nonzero value
    // (a pure relative target against an exact zero would be unreachable).
    auto osc = integrate_gk_real([](double x) { return std::sin(40.3 * x); }, 0.0, pi);
    REQUIRE(osc.converged);
    CHECK_THAT(osc.value.real(),
               Catch::Matchers::WithinAbs((1.0 - std::cos(40.3 * pi)) / 40.3, 1e-12));

    auto gauss = integrate_gk_real([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    REQUIRE(gauss.converged);
    CHECK_THAT(gauss.value.real(), Catch::Matchers::WithinRel(std::sqrt(pi), 1e-12));
}

TEST_CASE("integrate_gk handles complex integrands", "[quadrature]") {
    auto res = integrate_gk([](double x) { return std::polar(1.0, 3.0 * x); }, 0.0, 2.0);
    REQUIRE(res.converged);
    const Complex exact = (std::polar(1.0, 6.0) - 1.0) / Complex(0.0, 3.0);
    CHECK(std::abs(res.value - exact) < 1e-12);
    CHECK(res.error < 1e-10 * std::abs(exact) + 1e-14);
}

TEST_CASE("breakpoints rescue integrands with interior kinks", "[quadrature]") {
    // |x - 1/3| has a kink that a breakpoint resolves exactly.
    auto f = [](double x) { return std::abs(x - 1.0 / 3.0); };
    const double exact = 0.5 * (1.0 / 3.0) * (1.0 / 3.0) + 0.5 * (2.0 / 3.0) * (2.0 / 3.0);
    const std::array<double, 1> bp{1.0 / 3.0};
    auto res = integrate_gk_real(f, 0.0, 1.0, {}, bp);
    REQUIRE(res.converged);
    CHECK_THAT(res.value.real(), Catch::Matchers::WithinAbs(exact, 1e-14));

    // Breakpoints outside the interval are ignored.
    const std::array<double, 3> wild{-5.0, 0.25, 7.0};
    auto res2 = integrate_gk_real(f, 0.0, 1.0, {}, wild);
    REQUIRE(res2.converged);
    CHECK_THAT(res2.value.real(), Catch::Matchers::WithinAbs(exact, 1e-12));
}

TEST_CASE("integrate_gk reports non-convergence honestly", "[quadrature]") {
    QuadratureConfig tight;
    tight.rel_tol = 1e-15;
    tight.max_intervals = 4;
    auto res = integrate_gk_real([](double x) { return std::sin(200.0 * x * x); }, 0.0, 10.0,
                                 tight);
    CHECK_FALSE(res.converged);
    CHECK(res.error > 0.0);
}

TEST_CASE("neville_to_zero extrapolates geometric ladders", "[quadrature]") {
    // f(h) = 1 + h + h^2: samples at a geometric ladder extrapolate to f(0) = 1.
    std::vector<double> hs{0.4, 0.2, 0.1, 0.05};
    std::vector<double> vals;
    for (double h : hs) vals.push_back(1.0 + h + h * h);
    double err = 0.0;
    const double lim = conevac::neville_to_zero<double>(hs, vals, &err);
    CHECK_THAT(lim, Catch::Matchers::WithinAbs(1.0, 1e-12));
    CHECK(err < 1e-2);

    SECTION("complex values extrapolate componentwise") {
        std::vector<Complex> cvals;
        for (double h : hs) cvals.push_back(Complex(1.0 + h, 2.0 - h * h));
        const Complex climit = conevac::neville_to_zero<Complex>(hs, cvals);
        CHECK(std::abs(climit - Complex(1.0, 2.0)) < 1e-12);
    }

    SECTION("degenerate ladders are rejected") {
        std::vector<double> dup{0.1, 0.1};
        std::vector<double> dv{1.0, 2.0};
        CHECK_THROWS_AS(conevac::neville_to_zero<double>(dup, dv), std::invalid_argument);
        std::vector<double> one{0.1};
        std::vector<double> ov{1.0};
        CHECK_THROWS_AS(conevac::neville_to_zero<double>(one, ov), std::invalid_argument);
    }
}

TEST_CASE("Gauss-Legendre nodes integrate high-degree polynomials", "[quadrature]") {
    const auto& gl = conevac::gauss_legendre_16();
    // Degree 31 is the highest degree a 16-point rule integrates exactly.
    auto f = [](double x) { return 31.0 * std::pow(x, 30.0); };
    const double v = gl.integrate(f, 0.0, 1.0);
    CHECK_THAT(v, Catch::Matchers::WithinRel(1.0, 1e-13));

    auto osc = [](double x) { return std::cos(x); };
    const double vi = gl.integrate(osc, -1.0, 1.0);
    CHECK_THAT(vi, Catch::Matchers::WithinRel(2.0 * std::sin(1.0), 1e-14));
}
