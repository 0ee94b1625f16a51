// Tests for the trajectory Wightman functions, the stationary response rate
// against the independent residue/closed-form oracles, detailed balance, and
// the finite-window response.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <utility>
#include <vector>

#include "conevac/detector.hpp"
#include "conevac/reference.hpp"

using namespace conevac;
namespace ref = conevac::reference;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {
constexpr double pi = std::numbers::pi;

std::complex<double> sinh_closed(double delta, double a) {
    const double sh = std::sinh(0.5 * a * delta);
    return {-a * a / (16.0 * pi * pi * sh * sh), 0.0};
}
}  // namespace

TEST_CASE("both trajectory forms reduce to the sinh^2 closed form", "[detector]") {
    for (double a : {1.0, 2.5}) {
        for (double delta : {0.3, -1.2, 4.0}) {
            CAPTURE(a, delta);
            const double s = 0.45 + 0.5 * delta, sp = 0.45 - 0.5 * delta;
            const auto want = sinh_closed(delta, a);
            const auto wi = wightman(TrajectoryKind::InertialScaled, s, sp, a, 0.0);
            const auto wa = wightman(TrajectoryKind::Accelerated, s, sp, a, 0.0);
            CHECK(std::abs(wi - want) < 1e-13 * std::abs(want));
            CHECK(std::abs(wa - want) < 1e-13 * std::abs(want));
            CHECK(std::abs(stationary_wightman(delta, a, 0.0) - want) < 1e-14 * std::abs(want));
        }
    }
}

TEST_CASE("coincident points require a regulator", "[detector]") {
    CHECK_THROWS_AS(wightman(TrajectoryKind::InertialScaled, 1.0, 1.0, 1.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(wightman(TrajectoryKind::Accelerated, -0.3, -0.3, 1.0, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS(stationary_wightman(0.0, 1.0, 0.0), std::domain_error);
    // With a regulator the coincident value is finite: -1/(4 pi^2 (i eps)^2) ~ +1/(4 pi^2 eps^2).
    const auto w = wightman(TrajectoryKind::Accelerated, 0.7, 0.7, 1.0, 1e-3);
    CHECK(w.real() > 0.0);
    CHECK_THAT(w.real() * (4.0 * pi * pi * 1e-6), WithinRel(1.0, 1e-5));
    CHECK_THROWS_AS(wightman(TrajectoryKind::Accelerated, 0.0, 1.0, -1.0, 0.1),
                    std::domain_error);
    CHECK_THROWS_AS(wightman(TrajectoryKind::Accelerated, 0.0, 1.0, 1.0, -0.1),
                    std::domain_error);
}

TEST_CASE("regulated forms agree exactly through the symmetric shift", "[detector]") {
    // With the symmetric shift the two trajectory evaluations and the
    // stationary closed form agree at finite epsilon, not just as eps -> 0.
    for (double eps : {1e-2, 1e-4}) {
        for (double s : {1.1, -0.4}) {
            const double sp = s - 0.7;
            const auto st = stationary_wightman(0.7, 1.0, eps);
            const auto wi = wightman(TrajectoryKind::InertialScaled, s, sp, 1.0, eps);
            const auto wa = wightman(TrajectoryKind::Accelerated, s, sp, 1.0, eps);
            CHECK(std::abs(wi - st) < 1e-12 * std::abs(st));
            CHECK(std::abs(wa - st) < 1e-12 * std::abs(st));
        }
    }
}

TEST_CASE("large-argument guards return the correct limits", "[detector]") {
    // Far separation: the correlation has decayed below double range; the
    // guarded paths return 0 rather than NaN from overflowed sinh.
    const auto far = stationary_wightman(800.0, 1.0, 1e-3);
    CHECK(far == std::complex<double>(0.0, 0.0));
    // Accelerated evaluation far from the origin delegates to the stationary
    // identity; translation invariance makes it equal to the near-origin value.
    const auto near = wightman(TrajectoryKind::Accelerated, 0.35, -0.35, 1.0, 1e-2);
    const auto shifted = wightman(TrajectoryKind::Accelerated, 350.35, 349.65, 1.0, 1e-2);
    CHECK(std::abs(shifted - near) < 1e-12 * std::abs(near));
    // No NaNs anywhere on a wide scan.
    for (double s : {500.0, 5000.0, 64000.0}) {
        const auto w = wightman(TrajectoryKind::Accelerated, s, s - 1.0, 1.0, 1e-3);
        CHECK(std::isfinite(w.real()));
        CHECK(std::isfinite(w.imag()));
    }
}

TEST_CASE("integrand identity holds along the sum coordinate", "[detector]") {
    // Fixed separation, midpoint swept across +-10/a: the deviation stays at
    // machine level.
    const double a = 1.0;
    std::vector<std::pair<double, double>> pts;
    for (int i = 0; i <= 40; ++i) {
        const double mid = -10.0 + 0.5 * i;
        pts.emplace_back(mid + 0.5, mid - 0.5);
    }
    CHECK(integrand_identity_check(a, pts) < 1e-12);
    // Random separations and midpoints.
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> mid(-10.0, 10.0);
    std::uniform_real_distribution<double> logd(std::log(0.1), std::log(8.0));
    pts.clear();
    for (int i = 0; i < 1000; ++i) {
        double d = std::exp(logd(rng));
        if (rng() & 1u) d = -d;
        const double m = mid(rng);
        pts.emplace_back(m + 0.5 * d, m - 0.5 * d);
    }
    CHECK(integrand_identity_check(a, pts) < 1e-12);
    // Empty input is zero; coincident samples are rejected.
    CHECK(integrand_identity_check(a, {}) == 0.0);
    std::vector<std::pair<double, double>> bad{{0.3, 0.3}};
    CHECK_THROWS_AS(integrand_identity_check(a, bad), std::domain_error);
}

TEST_CASE("stationary rate matches the residue-series oracle", "[detector][slow]") {
    struct Case {
        double E, a, eps;
    };
    const Case cases[] = {
        {0.5, 1.0, 1e-2}, {1.0, 1.0, 1e-3}, {-1.0, 1.0, 1e-3}, {2.0, 1.0, 1e-4},
        {-0.5, 2.0, 2e-3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.E, c.a, c.eps);
        const auto r = response_rate(c.E, c.a, c.eps, 200.0 / c.a);
        const double want = ref::rate_closed_form(c.E, c.a, c.eps);
        CHECK(std::abs(r.rate() - want) < 1e-9 + 3.0 * r.error_estimate);
        CHECK(r.rate() > 0.0);
        CHECK(r.stationary);
        // The imaginary part of the folded integrand is identically zero.
        CHECK(r.value.imag() == 0.0);
    }
    CHECK_THROWS_AS(response_rate(1.0, 1.0, 0.0, 200.0), std::domain_error);
    CHECK_THROWS_AS(response_rate(1.0, 1.0, 1e-3, -1.0), std::domain_error);
}

TEST_CASE("detailed balance at fixed epsilon", "[detector][slow]") {
    // At fixed eps the ratio deviates from the Boltzmann factor by
    // boltz * (e^{2 E eps} - 1): small absolutely, not relatively tiny.
    const double E = 1.0, a = 1.0, eps = 1e-3;
    const std::vector<double> single{eps};
    const auto rep = detailed_balance(E, a, single, 200.0);
    CHECK(rep.deviation_abs < 1e-4);
    const double expected = rep.boltzmann * std::expm1(2.0 * E * eps);
    CHECK_THAT(rep.deviation_abs, WithinRel(expected, 0.05));
    CHECK_THAT(rep.boltzmann, WithinRel(std::exp(-2.0 * pi), 1e-15));
    CHECK(rep.rate_positive > 0.0);
    CHECK(rep.rate_negative > rep.rate_positive);  // de-excitation dominates
}

TEST_CASE("epsilon ladder: deviations shrink and extrapolation nails balance",
          "[detector][slow]") {
    const double E = 1.0, a = 1.0, range = 200.0;
    const std::vector<double> ladder{1e-2, 1e-3, 1e-4};
    // Fixed-epsilon deviations decrease monotonically along the ladder.
    double prev = 1e9;
    for (double eps : ladder) {
        const std::vector<double> single{eps};
        const auto rep = detailed_balance(E, a, single, range);
        CHECK(rep.deviation_abs < prev);
        prev = rep.deviation_abs;
    }
    // Extrapolated balance is tight both absolutely and relatively.
    const auto rep = detailed_balance(E, a, ladder, range);
    CHECK(rep.deviation_abs < 1e-8);
    CHECK(rep.deviation_rel < 1e-6);
    // The extrapolated rate also matches the eps = 0 closed form.
    const auto rp = rate_epsilon_extrapolated(E, a, ladder, range);
    CHECK_THAT(rp.rate(), WithinRel(ref::rate_closed_form(E, a, 0.0), 1e-6));
    CHECK(rp.epsilon == 0.0);
    CHECK(rp.error_estimate > 0.0);
    // Ladder validation.
    const std::vector<double> bad{1e-3, 1e-2};
    CHECK_THROWS_AS(rate_epsilon_extrapolated(E, a, bad, range), std::invalid_argument);
    const std::vector<double> one{1e-3};
    CHECK_THROWS_AS(rate_epsilon_extrapolated(E, a, one, range), std::invalid_argument);
    CHECK_THROWS_AS(detailed_balance(E, a, {}, range), std::invalid_argument);
}

TEST_CASE("windowed response: degenerate and invalid windows", "[detector]") {
    const auto zero = windowed_response(1.0, TrajectoryKind::Accelerated, 2.0, 2.0, 1.0, 1e-3);
    CHECK(zero.value == std::complex<double>(0.0, 0.0));
    CHECK(zero.error_estimate == 0.0);
    CHECK_THROWS_AS(windowed_response(1.0, TrajectoryKind::Accelerated, 3.0, 2.0, 1.0, 1e-3),
                    std::invalid_argument);
    CHECK_THROWS_AS(windowed_response(1.0, TrajectoryKind::Accelerated, 0.0, 1.0, 1.0, 0.0),
                    std::domain_error);
}

TEST_CASE("windowed response: the two trajectory forms agree", "[detector][slow]") {
    const double E = 1.0, a = 1.0, eps = 1e-3;
    const auto in = windowed_response(E, TrajectoryKind::InertialScaled, -5.0, 5.0, a, eps);
    const auto ac = windowed_response(E, TrajectoryKind::Accelerated, -5.0, 5.0, a, eps);
    const double diff = std::abs(in.value - ac.value);
    CHECK(diff < 2.0 * (in.error_estimate + ac.error_estimate));
    CHECK(diff < 1e-8);
    CHECK(in.value.real() > 0.0);
}

TEST_CASE("windowed response cross-checks the reduced 1D form", "[detector][slow]") {
    // For the stationary kernel the double integral collapses to
    // Int (2T - |Delta|) e^{-iE Delta} W(Delta) dDelta; the independent
    // reduced-form evaluation must agree.
    const double E = 1.0, a = 1.0, eps = 1e-3, T = 15.0;
    const auto win = windowed_response(E, TrajectoryKind::Accelerated, -T, T, a, eps);
    const double reduced = ref::windowed_response_reduced(E, a, eps, -T, T);
    CHECK_THAT(win.value.real(), WithinRel(reduced, 1e-5));
    // Imaginary part vanishes by symmetry of the window.
    CHECK(std::abs(win.value.imag()) < 1e-6 * std::abs(win.value.real()));
}

TEST_CASE("windowed response approaches the stationary rate as the window grows",
          "[detector][slow]") {
    const double E = 1.0, a = 1.0, eps = 1e-3;
    const double oracle = ref::rate_closed_form(E, a, eps);
    std::vector<double> devs;
    for (double T : {16000.0, 32000.0, 64000.0}) {
        const auto win = windowed_response(E, TrajectoryKind::Accelerated, -T, T, a, eps);
        devs.push_back(std::abs(win.value.real() / (2.0 * T) - oracle) / oracle);
    }
    CAPTURE(devs[0], devs[1], devs[2]);
    // The finite-window correction is a constant offset, so the relative
    // deviation halves with each doubling and ends below 1%.
    CHECK(devs[0] < 0.05);
    CHECK_THAT(devs[1] / devs[0], WithinAbs(0.5, 0.12));
    CHECK_THAT(devs[2] / devs[1], WithinAbs(0.5, 0.12));
    CHECK(devs[2] < 0.01);
}
