#pragma once

// Wightman functions on the two trajectories that probe the cone structure,
// the pointwise identity between them, and the detector response: stationary
// rates (with detailed balance as the thermal signature) and finite-window
// double integrals.
//
// Trajectories (z is the single spatial direction that matters; the
// transverse separation vanishes on both):
//   InertialScaled: t(s) = a^{-1} e^{a s}, z = 0, with the conformal factor
//                   e^{a(s+s')} multiplying the flat Wightman function.
//   Accelerated:    t(s) = a^{-1} sinh(a s), z(s) = a^{-1} cosh(a s).
// Both reduce analytically to the stationary form
//   W(Delta) = -a^2 / (16 pi^2 sinh^2(a (Delta - i eps) / 2)),
// which is the content of the integrand identity; the two kinds are kept as
// genuinely different evaluation paths so the identity is a real check.
//
// Regulator convention: the iε prescription is applied symmetrically,
// s -> s - i eps/2 and s' -> s' + i eps/2, so that s - s' -> Delta - i eps
// while s + s' stays real.  This keeps the conformal factor of the
// inertial-scaled form real and makes the two trajectory forms agree exactly
// (not just to O(eps)) at finite regulator.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conevac/quadrature.hpp"

namespace conevac {

enum class TrajectoryKind { InertialScaled, Accelerated };

inline const char* to_string(TrajectoryKind k) {
    return k == TrajectoryKind::InertialScaled ? "inertial_scaled" : "accelerated";
}

struct ResponseResult {
    std::complex<double> value{0.0, 0.0};
    double error_estimate = 0.0;
    // configuration echo
    double E = 0.0;
    double a = 1.0;
    double epsilon = 0.0;
    double s1 = 0.0, s2 = 0.0;  // window; stationary rates use (-range, +range)
    TrajectoryKind kind = TrajectoryKind::Accelerated;
    bool stationary = false;

    double rate() const { return value.real(); }
};

namespace detail {

inline constexpr double kFourPiSq = 4.0 * std::numbers::pi * std::numbers::pi;

inline void require_wightman_args(double a, double epsilon) {
    if (!(a > 0.0) || !std::isfinite(a)) throw std::domain_error("wightman: a must be > 0");
    if (!(epsilon >= 0.0) || !std::isfinite(epsilon))
        throw std::domain_error("wightman: epsilon must be >= 0");
}

}  // namespace detail

// Stationary closed form W(Delta) = -a^2 / (16 pi^2 sinh^2(a(Delta - i eps)/2)).
inline std::complex<double> stationary_wightman(double delta, double a, double epsilon) {
    detail::require_wightman_args(a, epsilon);
    if (epsilon == 0.0 && delta == 0.0)
        throw std::domain_error("stationary_wightman: coincident points need epsilon > 0");
    const std::complex<double> z(0.5 * a * delta, -0.5 * a * epsilon);
    // |sinh z|^-2 ~ 4 e^{-2|Re z|} underflows past |Re z| ~ 355; return the
    // limit instead of dividing by an overflowed sinh.
    if (std::abs(z.real()) > 360.0) return {0.0, 0.0};
    const std::complex<double> sh = std::sinh(z);
    return -a * a / (4.0 * detail::kFourPiSq * (sh * sh));
}

// Regularized Wightman function evaluated through the chosen trajectory.
inline std::complex<double> wightman(TrajectoryKind kind, double s, double s_prime, double a,
                                     double epsilon) {
    detail::require_wightman_args(a, epsilon);
    if (epsilon == 0.0 && s == s_prime)
        throw std::domain_error("wightman: coincident points need epsilon > 0");
    const std::complex<double> sig(s, -0.5 * epsilon);
    const std::complex<double> sigp(s_prime, +0.5 * epsilon);
    if (kind == TrajectoryKind::InertialScaled) {
        // The symmetric shift cancels in s + s', so the conformal factor is
        // the real e^{a(s+s')}.  Factor and denominator both overflow for
        // a(s+s') beyond ~700; callers needing huge windows use Accelerated.
        const std::complex<double> dt = (std::exp(a * sig) - std::exp(a * sigp)) / a;
        return -std::exp(a * (s + s_prime)) / (detail::kFourPiSq * dt * dt);
    }
    // Accelerated.  The interval factors over the trajectory's null
    // coordinates V(s) = t + z = a^{-1} e^{a s}, U(s) = t - z = -a^{-1} e^{-a s}:
    //   dt^2 - dz^2 = (V - V')(U - U').
    // Forming dt^2 and dz^2 separately would subtract terms that grow like
    // e^{2 a |s|} while the difference stays O((s - s')^2); the factored form
    // is cancellation-free.  The exponentials overflow past |a s| ~ 700, so
    // beyond a conservative threshold use the exact algebraic reduction
    //   (V - V')(U - U') = (4/a^2) sinh^2(a (sig - sig')/2),
    // i.e. the stationary closed form; this is an identity, not an
    // approximation, and only engages far outside the matched-path regime
    // exercised by the identity checks.
    if (std::max(std::abs(a * s), std::abs(a * s_prime)) > 300.0)
        return stationary_wightman(s - s_prime, a, epsilon);
    const std::complex<double> dV = (std::exp(a * sig) - std::exp(a * sigp)) / a;
    const std::complex<double> dU = (std::exp(-a * sigp) - std::exp(-a * sig)) / a;
    return -1.0 / (detail::kFourPiSq * (dV * dU));
}

// Max relative deviation |W_inertial - W_accelerated| / |W_accelerated| at
// epsilon = 0 over the samples.  Empty sample list -> 0.
inline double integrand_identity_check(double a,
                                       std::span<const std::pair<double, double>> samples) {
    double worst = 0.0;
    for (const auto& [s, sp] : samples) {
        if (s == sp)
            throw std::domain_error("integrand_identity_check: coincident sample");
        const auto wi = wightman(TrajectoryKind::InertialScaled, s, sp, a, 0.0);
        const auto wa = wightman(TrajectoryKind::Accelerated, s, sp, a, 0.0);
        worst = std::max(worst, std::abs(wi - wa) / std::abs(wa));
    }
    return worst;
}

// Stationary response rate
//   rate(E) = Int_{-R}^{R} dDelta e^{-i E Delta} W(Delta - i eps),
// folded onto [0, R] using W(-Delta) = conj(W(Delta)), which makes the
// integrand manifestly real.  As eps -> 0+ and R -> inf this approaches
// (E / 2 pi) / (e^{2 pi E / a} - 1)  (equal to a / 4 pi^2 at E = 0).
inline ResponseResult response_rate(double E, double a, double epsilon, double delta_range,
                                    const QuadratureConfig& cfg = {1e-11, 0.0, 100000}) {
    detail::require_wightman_args(a, epsilon);
    if (!(epsilon > 0.0)) throw std::domain_error("response_rate: epsilon must be > 0");
    if (!(delta_range > 0.0)) throw std::domain_error("response_rate: delta_range must be > 0");

    // The integrand's cancelling peak carries L1 mass ~ 1/(4 pi eps); summing
    // it in doubles leaves rounding noise ~ 1e-16/eps, so a pure relative
    // target below that is unreachable for small net rates.  Give the
    // converged-check an absolute floor just above the noise unless the
    // caller set one explicitly.
    QuadratureConfig eff = cfg;
    if (eff.abs_tol == 0.0) eff.abs_tol = 3e-14 / epsilon;

    auto integrand = [=](double d) {
        const std::complex<double> ph(0.0, -E * d);
        return 2.0 * std::real(std::exp(ph) * stationary_wightman(d, a, epsilon));
    };
    std::vector<double> bps = {5.0 * epsilon, 1.0 / a, 10.0 / a};
    if (E != 0.0) {
        const double half_period = std::numbers::pi / std::abs(E);
        for (double d = half_period; d < delta_range; d += half_period) bps.push_back(d);
    }
    const auto res = integrate_gk_real(integrand, 0.0, delta_range, eff, bps);
    if (!res.converged)
        throw std::runtime_error("response_rate: quadrature did not converge (residual " +
                                 std::to_string(res.error) + ")");
    ResponseResult out;
    out.value = res.value;
    out.error_estimate = res.error;
    out.E = E;
    out.a = a;
    out.epsilon = epsilon;
    out.s1 = -delta_range;
    out.s2 = delta_range;
    out.stationary = true;
    return out;
}

// Richardson/Neville extrapolation of the stationary rate to epsilon = 0
// over a decreasing regulator ladder.
inline ResponseResult rate_epsilon_extrapolated(double E, double a,
                                                std::span<const double> eps_ladder,
                                                double delta_range,
                                                const QuadratureConfig& cfg = {1e-11, 0.0, 100000}) {
    if (eps_ladder.size() < 2)
        throw std::invalid_argument("rate_epsilon_extrapolated: need >= 2 epsilon levels");
    for (std::size_t i = 0; i + 1 < eps_ladder.size(); ++i)
        if (!(eps_ladder[i + 1] < eps_ladder[i]) || !(eps_ladder[i + 1] > 0.0))
            throw std::invalid_argument(
                "rate_epsilon_extrapolated: epsilons must be positive and decreasing");
    std::vector<double> xs(eps_ladder.begin(), eps_ladder.end());
    std::vector<double> ys;
    double quad_err = 0.0;
    for (double eps : xs) {
        const auto r = response_rate(E, a, eps, delta_range, cfg);
        ys.push_back(r.rate());
        quad_err = std::max(quad_err, r.error_estimate);
    }
    double extrap_err = 0.0;
    ResponseResult out;
    out.value = neville_to_zero<double>(xs, ys, &extrap_err);
    out.error_estimate = extrap_err + quad_err;
    out.E = E;
    out.a = a;
    out.epsilon = 0.0;
    out.s1 = -delta_range;
    out.s2 = delta_range;
    out.stationary = true;
    return out;
}

// Detailed-balance diagnostic: ratio = rate(E)/rate(-E) against the
// Boltzmann factor e^{-2 pi E / a}.  A single-entry ladder means "evaluate at
// that epsilon"; longer ladders extrapolate to epsilon = 0 first.
struct BalanceReport {
    double E = 0.0, a = 1.0;
    double rate_positive = 0.0, rate_negative = 0.0;
    double ratio = 0.0;
    double boltzmann = 0.0;
    double deviation_abs = 0.0;  // |ratio - boltzmann|
    double deviation_rel = 0.0;  // |ratio - boltzmann| / boltzmann
};

inline BalanceReport detailed_balance(double E, double a, std::span<const double> eps_ladder,
                                      double delta_range,
                                      const QuadratureConfig& cfg = {1e-11, 0.0, 100000}) {
    if (eps_ladder.empty()) throw std::invalid_argument("detailed_balance: empty epsilon ladder");
    auto rate_of = [&](double gap) {
        return (eps_ladder.size() == 1)
                   ? response_rate(gap, a, eps_ladder[0], delta_range, cfg).rate()
                   : rate_epsilon_extrapolated(gap, a, eps_ladder, delta_range, cfg).rate();
    };
    BalanceReport rep;
    rep.E = E;
    rep.a = a;
    rep.rate_positive = rate_of(E);
    rep.rate_negative = rate_of(-E);
    rep.ratio = rep.rate_positive / rep.rate_negative;
    rep.boltzmann = std::exp(-2.0 * std::numbers::pi * E / a);
    rep.deviation_abs = std::abs(rep.ratio - rep.boltzmann);
    rep.deviation_rel = rep.deviation_abs / rep.boltzmann;
    return rep;
}

// Finite-window response
//   F(E) = Int_{s1}^{s2} ds Int_{s1}^{s2} ds' e^{-i E (s - s')} W_kind(s, s'),
// by iterated adaptive quadrature.  The inner integrand is concentrated
// within ~40/a of s' = s (the Wightman function decays like e^{-a|s-s'|}),
// and by near-translation-invariance the outer integrand is flat in the bulk
// of the window: the e^{-iEs} phase cancels against the inner integral's
// e^{+iEs} content, so only O(40/a) edge strips carry structure.  Cost is
// therefore essentially independent of the window length.
inline ResponseResult windowed_response(double E, TrajectoryKind kind, double s1, double s2,
                                        double a, double epsilon,
                                        const QuadratureConfig& outer_cfg = {1e-7, 0.0, 100000},
                                        const QuadratureConfig& inner_cfg = {1e-10, 0.0, 100000}) {
    detail::require_wightman_args(a, epsilon);
    if (!(epsilon > 0.0)) throw std::domain_error("windowed_response: epsilon must be > 0");
    if (!std::isfinite(s1) || !std::isfinite(s2) || s1 > s2)
        throw std::invalid_argument("windowed_response: window must satisfy s1 <= s2");
    ResponseResult out;
    out.E = E;
    out.a = a;
    out.epsilon = epsilon;
    out.s1 = s1;
    out.s2 = s2;
    out.kind = kind;
    if (s1 == s2) return out;  // zero-width window

    // Same rounding-noise floor as response_rate: the inner integral crosses
    // the cancelling 1/(4 pi eps) peak at s' = s.
    QuadratureConfig inner_eff = inner_cfg;
    if (inner_eff.abs_tol == 0.0) inner_eff.abs_tol = 3e-14 / epsilon;

    const double reach = 40.0 / a;
    double max_inner_error = 0.0;
    auto inner = [&](double s) {
        std::vector<double> bps;
        for (double b : {s - reach, s - 5.0 * epsilon, s, s + 5.0 * epsilon, s + reach})
            if (b > s1 && b < s2) bps.push_back(b);
        auto res = integrate_gk(
            [&](double sp) {
                const std::complex<double> ph(0.0, -E * (s - sp));
                return std::exp(ph) * wightman(kind, s, sp, a, epsilon);
            },
            s1, s2, inner_eff, bps);
        max_inner_error = std::max(max_inner_error, res.error);
        return res.value;
    };

    std::vector<double> outer_bps;
    for (double b : {s1 + reach, s2 - reach})
        if (b > s1 && b < s2) outer_bps.push_back(b);
    std::sort(outer_bps.begin(), outer_bps.end());
    const auto res = integrate_gk(inner, s1, s2, outer_cfg, outer_bps);
    if (!res.converged)
        throw std::runtime_error("windowed_response: quadrature did not converge (residual " +
                                 std::to_string(res.error) + ")");
    out.value = res.value;
    out.error_estimate = res.error + (s2 - s1) * max_inner_error;
    return out;
}

}  // namespace conevac
