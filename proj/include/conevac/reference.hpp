#pragma once

// Closed-form reference values ("oracles") used to validate the numerical
// pipelines.  Everything in this header is an independent analytic
// evaluation -- no code is shared with the quadrature/FFT implementations
// it is meant to check.
//
// Contents:
//   * complex Gamma function (Lanczos approximation),
//   * the damped wedge-mode Fourier integrals in closed form,
//   * the stationary detector rate as a residue series,
//   * geometric-state closed forms (entropy, occupation, truncation terms),
//   * the 1D reduction of the windowed detector response.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "conevac/quadrature.hpp"

namespace conevac::reference {

inline constexpr double kPi = std::numbers::pi;

// Lanczos approximation (g = 7, 9 coefficients), relative accuracy ~1e-13
// on the arguments used here.  Reflection formula covers Re z < 0.5.
inline std::complex<double> cgamma(std::complex<double> z) {
    static const double p[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (z.real() < 0.5) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPi / (std::sin(kPi * z) * cgamma(1.0 - z));
    }
    z -= 1.0;
    std::complex<double> x = p[0];
    for (int i = 1; i < 9; ++i) x += p[i] / (z + static_cast<double>(i));
    const std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

// ------------------------------------------------------------------
// Damped wedge-mode projections.
//
// The V > 0 wedge modes are (4*pi*w)^{-1/2} (aV)^{-i w/a}; expanding them in
// plane waves (4*pi*k)^{-1/2} e^{-ikV} and using plane-wave orthogonality
// gives coefficient integrals of the form
//     alpha = (1/2pi) sqrt(k/w) Int_0^inf e^{+ikV} (aV)^{-i w/a} dV,
//     beta  = (1/2pi) sqrt(k/w) Int_0^inf e^{-ikV} (aV)^{-i w/a} dV,
// damped by e^{-delta V} to make the oscillatory integral absolutely
// convergent (see docs/derivations.md for the normalization).  With
//     Int_0^inf e^{-sV} V^{-ib} dV = Gamma(1 - ib) s^{-(1-ib)},  Re s > 0,
// the damped integrals are elementary.  The V < 0 modes carry the opposite
// phase exponent; substituting V -> -V maps them onto the same form.
// ------------------------------------------------------------------

struct CoefficientPair {
    std::complex<double> alpha, beta;
};

// future_cone = true selects the V > 0 (future/right-wedge) phase
// convention, false the V < 0 (past/left-wedge) one.
inline CoefficientPair closed_coefficients(bool future_cone, double omega, double a,
                                           double k, double delta) {
    if (omega <= 0 || a <= 0 || k <= 0 || delta < 0)
        throw std::domain_error("closed_coefficients: omega, a, k must be > 0, delta >= 0");
    const double b = omega / a;
    const std::complex<double> i{0.0, 1.0};
    const double pref = std::sqrt(k / omega) / (2.0 * kPi);
    CoefficientPair out;
    if (future_cone) {
        const std::complex<double> gam = cgamma(1.0 - i * b);
        const std::complex<double> apow = std::pow(std::complex<double>(a, 0.0), -i * b);
        const std::complex<double> expo = -(1.0 - i * b);
        out.alpha = pref * apow * gam * std::pow(std::complex<double>(delta, -k), expo);
        out.beta = pref * apow * gam * std::pow(std::complex<double>(delta, k), expo);
    } else {
        const std::complex<double> gam = cgamma(1.0 + i * b);
        const std::complex<double> apow = std::pow(std::complex<double>(a, 0.0), i * b);
        const std::complex<double> expo = -(1.0 + i * b);
        out.alpha = pref * apow * gam * std::pow(std::complex<double>(delta, k), expo);
        out.beta = pref * apow * gam * std::pow(std::complex<double>(delta, -k), expo);
    }
    return out;
}

// |beta/alpha| in the delta -> 0 limit depends on omega/a only.
inline double coefficient_ratio_limit(double omega, double a) {
    return std::exp(-kPi * omega / a);
}

// ------------------------------------------------------------------
// Stationary detector rate.
//
// rate(E) = Int dDelta e^{-iE Delta} W(Delta - i eps) with
// W(z) = -a^2 / (16 pi^2 sinh^2(a z / 2)).  Closing the contour in the half
// plane where e^{-iE Delta} decays picks up the double poles at
// Delta = i eps + 2 pi i n / a; each contributes a residue proportional to
// e^{-iE Delta_n}, so the sum is a geometric series:
//   E > 0:  (E/2pi) e^{E eps} sum_{m>=1} e^{-2 pi E m / a}
//   E < 0:  -(E/2pi) e^{E eps} sum_{m>=0} e^{ 2 pi E m / a}
// Both sums equal (E/2pi) e^{E eps} / (e^{2 pi E / a} - 1); the series is
// summed numerically term by term, as an implementation-independent check.
// ------------------------------------------------------------------

inline double rate_residue_series(double E, double a, double epsilon) {
    if (a <= 0) throw std::domain_error("rate_residue_series: a must be > 0");
    if (E == 0.0) return a / (4.0 * kPi * kPi);
    const double bias = std::exp(E * epsilon);
    double sum = 0.0;
    if (E > 0) {
        const double r = std::exp(-2.0 * kPi * E / a);
        double term = r;
        while (term > 1e-300 && term > 1e-18 * sum) {
            sum += term;
            term *= r;
        }
        return (E / (2.0 * kPi)) * bias * sum;
    }
    const double r = std::exp(2.0 * kPi * E / a);
    double term = 1.0;
    while (term > 1e-300 && term > 1e-18 * sum) {
        sum += term;
        term *= r;
    }
    return -(E / (2.0 * kPi)) * bias * sum;
}

// The same rate via the summed closed form, for cross-checking the series.
inline double rate_closed_form(double E, double a, double epsilon) {
    if (E == 0.0) return a / (4.0 * kPi * kPi);
    return (E / (2.0 * kPi)) * std::exp(E * epsilon) / (std::expm1(2.0 * kPi * E / a));
}

// ------------------------------------------------------------------
// Geometric two-mode state closed forms, q = e^{-pi omega / a}.
// ------------------------------------------------------------------

inline double squeeze_parameter(double omega, double a) { return std::exp(-kPi * omega / a); }

// Entropy of the reduced geometric distribution p_n = (1-q^2) q^{2n}.
inline double entanglement_entropy_closed(double q) {
    const double q2 = q * q;
    if (q2 == 0.0) return 0.0;
    return -std::log1p(-q2) - q2 * std::log(q2) / (1.0 - q2);
}

inline double mean_occupation_closed(double omega, double a) {
    return 1.0 / std::expm1(2.0 * kPi * omega / a);
}

// Norm of the truncation edge term of (a_F - q a_P^dag)|psi> on the
// n <= n_trunc geometric state: the interior telescopes to zero and only
// the edge |n_trunc, n_trunc+1> component survives.
inline double edge_residual_exact(double q, int n_trunc) {
    const double C = std::sqrt(1.0 - q * q);
    return C * std::pow(q, n_trunc + 1) * std::sqrt(static_cast<double>(n_trunc + 1));
}

inline double edge_residual_bound(double q, int n_trunc) {
    return std::pow(q, n_trunc) * std::sqrt(static_cast<double>(n_trunc + 1));
}

inline double normalization_deficit(double q, int n_trunc) {
    return std::pow(q, 2 * (n_trunc + 1));
}

// ------------------------------------------------------------------
// 1D reduction of the windowed response.
//
// For a stationary kernel W(s - s') and window [s1, s2] of length 2T,
//   Int_{s1}^{s2} ds Int_{s1}^{s2} ds' e^{-iE(s-s')} W(s-s')
//     = Int_{-2T}^{2T} (2T - |Delta|) e^{-iE Delta} W(Delta) dDelta.
// The kernel decays like e^{-a|Delta|}, so the integration range can be
// clipped to |Delta| <= min(2T, clip) with negligible truncation error.
// This is the independent check for the 2D windowed quadrature.
// ------------------------------------------------------------------

inline double windowed_response_reduced(double E, double a, double epsilon,
                                        double s1, double s2,
                                        const QuadratureConfig& cfg = {}) {
    if (s2 < s1) throw std::invalid_argument("windowed_response_reduced: s2 < s1");
    const double two_t = s2 - s1;
    if (two_t == 0.0) return 0.0;
    const double clip = std::min(two_t, 50.0 / a);
    auto w_sinh = [&](std::complex<double> z) {
        const std::complex<double> s = std::sinh(0.5 * a * z);
        return -a * a / (16.0 * kPi * kPi * s * s);
    };
    auto integrand = [&](double d) {
        const std::complex<double> val =
            w_sinh(std::complex<double>(d, -epsilon)) *
            std::exp(std::complex<double>(0.0, -E * d));
        return (two_t - d) * 2.0 * val.real();  // folds Delta and -Delta
    };
    const double bps[] = {epsilon, 5.0 * epsilon, 1.0 / a, 10.0 / a};
    const auto res = integrate_gk_real(integrand, 0.0, clip, cfg, bps);
    return res.value.real();
}

}  // namespace conevac::reference
