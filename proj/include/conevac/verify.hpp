#pragma once

// Acceptance gate: eight end-to-end checks with pinned tolerances, fixed
// seeds, and runtime budgets.  Each criterion reduces to a single headline
// number `measured` compared against `tolerance`; compound criteria (ranges,
// monotonicity) fold their parts into a normalized measure with tolerance 1.
// The same runner backs the standalone acceptance binary and the CLI
// `verify` subcommand.

#include <array>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "conevac/bogoliubov.hpp"
#include "conevac/detector.hpp"
#include "conevac/feasibility.hpp"
#include "conevac/modes.hpp"
#include "conevac/parallel.hpp"
#include "conevac/reference.hpp"
#include "conevac/spacetime.hpp"
#include "conevac/vacuum.hpp"

namespace conevac {

struct CriterionResult {
    int index = 0;
    std::string name;
    double measured = 0.0;
    double tolerance = 0.0;
    double seconds = 0.0;
    double time_limit_seconds = 0.0;
    bool value_ok = false;
    bool time_ok = false;
    bool passed = false;
    std::string detail;
};

namespace detail {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// 1. The F and R (P and L) modes are the same function of the global V.
inline void criterion_mode_identity(CriterionResult& r) {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> log_v(std::log(1e-3), std::log(1e3));
    const double a = 1.0;
    double worst = 0.0;
    for (double omega : {0.5, 1.0, 2.0}) {
        const ModeSpec F{Quadrant::F, omega, a}, R{Quadrant::R, omega, a};
        const ModeSpec P{Quadrant::P, omega, a}, L{Quadrant::L, omega, a};
        for (int i = 0; i < 1000; ++i) {
            const double V = std::exp(log_v(rng));
            worst = std::max(worst, std::abs(mode_g_of_V(F, V) - mode_g_of_V(R, V)));
            worst = std::max(worst, std::abs(mode_g(F, local_null_from_V(Quadrant::F, V, a)) -
                                             mode_g(R, local_null_from_V(Quadrant::R, V, a))));
            worst = std::max(worst, std::abs(mode_g_of_V(P, -V) - mode_g_of_V(L, -V)));
            worst = std::max(worst, std::abs(mode_g(P, local_null_from_V(Quadrant::P, -V, a)) -
                                             mode_g(L, local_null_from_V(Quadrant::L, -V, a))));
        }
    }
    r.measured = worst;
    r.detail = "max mode deviation over 3 omega x 1000 log-uniform V in [1e-3,1e3], seed 12345";
}

// 2. Extrapolated coefficient ratio and the complex cross-cone relation
//    against the Gamma-function closed form.
inline void criterion_bogoliubov(CriterionResult& r, unsigned threads) {
    const double a = 1.0;
    const std::array<double, 3> omegas{0.5, 1.0, 2.0};
    const std::array<double, 3> ks{0.5, 1.0, 2.0};
    struct Slot {
        double omega = 0.0, k = 0.0;
        BogoliubovEntry F, P;
    };
    std::vector<Slot> slots;
    for (double w : omegas)
        for (double k : ks) slots.push_back({w, k, {}, {}});
    parallel_for(slots.size(), threads, [&](std::size_t i) {
        slots[i].F = extrapolated_coefficients({Quadrant::F, slots[i].omega, a}, slots[i].k);
        slots[i].P = extrapolated_coefficients({Quadrant::P, slots[i].omega, a}, slots[i].k);
    });
    double worst_ratio = 0.0, worst_oracle = 0.0, worst_relation = 0.0;
    for (const auto& s : slots) {
        const double q = reference::coefficient_ratio_limit(s.omega, a);
        worst_ratio =
            std::max(worst_ratio, std::abs(std::abs(s.F.beta) / std::abs(s.F.alpha) - q));
        const auto of = reference::closed_coefficients(true, s.omega, a, s.k, 0.0);
        const auto op = reference::closed_coefficients(false, s.omega, a, s.k, 0.0);
        worst_oracle = std::max({worst_oracle, std::abs(s.F.alpha - of.alpha),
                                 std::abs(s.F.beta - of.beta), std::abs(s.P.alpha - op.alpha),
                                 std::abs(s.P.beta - op.beta)});
        worst_relation = std::max({worst_relation, std::abs(s.P.beta + q * std::conj(s.F.alpha)),
                                   std::abs(s.F.beta + q * std::conj(s.P.alpha))});
    }
    r.measured = std::max({worst_ratio, worst_oracle, worst_relation});
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "ratio dev " << worst_ratio << ", oracle dev " << worst_oracle
       << ", cross-cone dev " << worst_relation << " on the 3x3 (omega, k) grid";
    r.detail = os.str();
}

// 3. Truncated two-mode state: annihilation residuals within the analytic
//    edge bound, exact number balance, Gibbs ratio at machine precision.
inline void criterion_vacuum(CriterionResult& r) {
    const double a = 1.0;
    const double gibbs_machine = 1e-14;  // relative
    double worst = 0.0;
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    for (double omega : {0.5, 1.0, 2.0}) {
        const double q = squeeze_q(omega, a);
        const auto trunc = default_truncation(q);
        const TwoModeState st(omega, a, trunc.n_trunc);
        const double bound = reference::edge_residual_bound(q, trunc.n_trunc);
        const double rf = st.residual_norm(VacuumRelation::FAnnihilation) / bound;
        const double rp = st.residual_norm(VacuumRelation::PAnnihilation) / bound;
        const double bal = st.residual_norm(VacuumRelation::NumberBalance);
        double gibbs = 0.0;
        for (int n = 0; n + 1 <= trunc.n_trunc; ++n)
            gibbs = std::max(gibbs,
                             std::abs(st.probability(n + 1) / st.probability(n) - q * q) / (q * q));
        worst = std::max({worst, rf, rp, bal == 0.0 ? 0.0 : kInf, gibbs / gibbs_machine});
        if (omega == 1.0)
            os << "omega=a: residual/bound " << rf << "/" << rp << ", balance " << bal
               << ", Gibbs rel dev " << gibbs;
    }
    r.measured = worst;
    r.detail = os.str();
}

// 4. Pointwise identity of the two trajectory Wightman forms at epsilon = 0.
inline void criterion_integrand_identity(CriterionResult& r) {
    std::mt19937 rng(777);
    std::uniform_real_distribution<double> mid(-10.0, 10.0);
    std::uniform_real_distribution<double> log_d(std::log(0.1), std::log(8.0));
    std::vector<std::pair<double, double>> samples;
    samples.reserve(1000);
    for (int i = 0; i < 1000; ++i) {
        double d = std::exp(log_d(rng));
        if (rng() & 1u) d = -d;
        const double m = mid(rng);
        samples.emplace_back(m + 0.5 * d, m - 0.5 * d);
    }
    r.measured = integrand_identity_check(1.0, samples);
    r.detail = "max relative deviation over 1000 samples, |Delta| in [0.1,8]/a, mid in [-10,10]/a, seed 777";
}

// 5. Thermality of the stationary rate: detailed balance and residue-series
//    oracle, after extrapolating the regulator ladder to epsilon = 0.
inline void criterion_thermality(CriterionResult& r) {
    const double a = 1.0, range = 200.0;
    const std::array<double, 3> ladder{1e-2, 1e-3, 1e-4};
    double worst_balance = 0.0, worst_oracle = 0.0;
    for (double E : {0.5, 1.0, 2.0}) {
        const auto rp = rate_epsilon_extrapolated(E, a, ladder, range);
        const auto rn = rate_epsilon_extrapolated(-E, a, ladder, range);
        const double ratio = rp.rate() / rn.rate();
        const double boltz = std::exp(-2.0 * std::numbers::pi * E / a);
        const double dev_abs = std::abs(ratio - boltz);
        worst_balance = std::max({worst_balance, dev_abs, dev_abs / boltz});
        const double op = reference::rate_closed_form(E, a, 0.0);
        const double on = reference::rate_closed_form(-E, a, 0.0);
        worst_oracle = std::max({worst_oracle, std::abs(rp.rate() - op) / op,
                                 std::abs(rn.rate() - on) / on});
    }
    r.measured = std::max(worst_balance, worst_oracle);
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "balance dev " << worst_balance << ", oracle dev " << worst_oracle
       << " (epsilon ladder {1e-2,1e-3,1e-4}/a, range 200/a)";
    r.detail = os.str();
}

// 6. Matched-window equivalence of the two trajectory responses, judged
//    against the combined quadrature error (normalized: measured <= 1).
inline void criterion_windowed_equivalence(CriterionResult& r) {
    const double a = 1.0, E = 1.0, eps = 1e-3;
    const auto in = windowed_response(E, TrajectoryKind::InertialScaled, -5.0, 5.0, a, eps);
    const auto ac = windowed_response(E, TrajectoryKind::Accelerated, -5.0, 5.0, a, eps);
    const double diff = std::abs(in.value - ac.value);
    const double combined = in.error_estimate + ac.error_estimate;
    r.measured = diff / (2.0 * combined);
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << "|inertial - accelerated| = " << diff << ", 2x combined error = "
       << 2.0 * combined << ", response = " << in.value.real();
    r.detail = os.str();
}

// 7. Feasibility landmarks: ranges for the 1 K scaling constant and Unruh
//    acceleration, and the thermalization threshold at t1*Ebar1 = 1.
inline void criterion_feasibility(CriterionResult& r) {
    const double a1 = a_for_temperature(1.0);
    const double acc = unruh_acceleration_for(1.0);
    const double thr = thermalization_threshold(1.0);
    const double c_a = (a1 >= 1e11 && a1 <= 1e12) ? 0.0 : kInf;
    const double c_acc = (acc >= 1e20 && acc <= 1e21) ? 0.0 : kInf;
    const double c_thr = std::abs(thr - std::numbers::e) / (std::numbers::e * 1e-15);
    r.measured = std::max({c_a, c_acc, c_thr});
    std::ostringstream os;
    os.precision(6);
    os << std::scientific << "a(1K) = " << a1 << " rad/s, acceleration = " << acc
       << " m/s^2, threshold - e = " << thr - std::numbers::e;
    r.detail = os.str();
}

// 8. Positive-frequency purity of the G modes: guarded negative-frequency
//    fraction below tolerance at the finest level and monotone under the
//    refinement ladder.
inline void criterion_positive_frequency(CriterionResult& r) {
    const double a = 1.0;
    const auto ladder = default_refinement_ladder(a);
    double worst = 0.0;
    bool monotone = true;
    std::ostringstream os;
    os.precision(3);
    os << std::scientific;
    for (double omega : {0.5, 1.0, 2.0}) {
        double prev = kInf, last = 0.0;
        os << "omega=" << omega << ":";
        for (const auto& level : ladder) {
            const auto res = negative_frequency_fraction(
                [&](double V) {
                    return mode_G(omega, a, V, GVariant::G, level.regulator_delta);
                },
                level.scan);
            if (!(res.fraction < prev)) monotone = false;
            prev = res.fraction;
            last = res.fraction;
            os << " " << res.fraction;
        }
        os << "; ";
        worst = std::max(worst, last);
    }
    r.measured = monotone ? worst : kInf;
    r.detail = (monotone ? "monotone; " : "NOT MONOTONE; ") + os.str();
}

}  // namespace detail

inline std::vector<CriterionResult> run_acceptance(unsigned threads = 0) {
    std::vector<CriterionResult> out;
    auto timed = [&](int idx, const char* name, double tol, double limit, auto&& fn) {
        CriterionResult r;
        r.index = idx;
        r.name = name;
        r.tolerance = tol;
        r.time_limit_seconds = limit;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            fn(r);
        } catch (const std::exception& e) {
            r.measured = detail::kInf;
            r.detail = std::string("exception: ") + e.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        r.value_ok = r.measured <= r.tolerance;
        r.time_ok = r.seconds < r.time_limit_seconds;
        r.passed = r.value_ok && r.time_ok;
        out.push_back(std::move(r));
    };

    timed(1, "mode V-identity (F=R, P=L)", 1e-14, 1.0,
          [&](CriterionResult& r) { detail::criterion_mode_identity(r); });
    timed(2, "Bogoliubov ratio and Gamma-oracle relation", 1e-6, 60.0,
          [&](CriterionResult& r) { detail::criterion_bogoliubov(r, threads); });
    timed(3, "two-mode vacuum residuals (normalized)", 1.0, 1.0,
          [&](CriterionResult& r) { detail::criterion_vacuum(r); });
    timed(4, "trajectory integrand identity", 1e-12, 1.0,
          [&](CriterionResult& r) { detail::criterion_integrand_identity(r); });
    timed(5, "stationary-rate thermality", 1e-4, 120.0,
          [&](CriterionResult& r) { detail::criterion_thermality(r); });
    timed(6, "windowed response equivalence (normalized)", 1.0, 120.0,
          [&](CriterionResult& r) { detail::criterion_windowed_equivalence(r); });
    timed(7, "feasibility landmarks (normalized)", 1.0, 1.0,
          [&](CriterionResult& r) { detail::criterion_feasibility(r); });
    timed(8, "G-mode negative-frequency fraction", 1e-3, 60.0,
          [&](CriterionResult& r) { detail::criterion_positive_frequency(r); });
    return out;
}

inline std::string format_criterion_line(const CriterionResult& r) {
    std::ostringstream os;
    os << (r.passed ? "PASS" : "FAIL") << "  [" << r.index << "] " << r.name;
    os.precision(3);
    os << std::scientific << "  measured=" << r.measured << " tolerance=" << r.tolerance;
    os.precision(2);
    os << std::fixed << "  time=" << r.seconds << "s (limit " << r.time_limit_seconds << "s)";
    if (!r.detail.empty()) os << "\n      " << r.detail;
    return os.str();
}

}  // namespace conevac
