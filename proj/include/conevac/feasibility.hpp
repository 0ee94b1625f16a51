#pragma once

// SI-unit arithmetic for the experimental-feasibility estimates: the
// temperature associated with the conformal scaling constant, the equivalent
// linear acceleration, and the thermalization margin of a scaled-gap
// scenario.
//
// Unit conventions: the scaling constant `a` is an angular frequency
// (rad/s), so T = hbar a / (2 pi k_B) carries no factor of c; the ordinary
// (cycles/s) convention a / 2 pi is reported alongside since order-of-
// magnitude statements in the literature use both.

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace conevac {

// SI defining constants (2019 redefinition: h, k_B, c are exact).
struct PhysicalConstants {
    double h = 6.62607015e-34;                            // J s, exact
    double hbar = 6.62607015e-34 / (2.0 * std::numbers::pi);  // J s
    double k_B = 1.380649e-23;                            // J/K, exact
    double c = 299792458.0;                               // m/s, exact
};

inline const PhysicalConstants& physical_constants() {
    static const PhysicalConstants k{};
    return k;
}

// T = hbar a / (2 pi k_B), a in rad/s.
inline double temperature_from_a(double a) {
    if (!(a > 0.0)) throw std::domain_error("temperature_from_a: a must be > 0");
    const auto& k = physical_constants();
    return k.hbar * a / (2.0 * std::numbers::pi * k.k_B);
}

// Inverse of temperature_from_a: the scaling constant (rad/s) for a target
// temperature.
inline double a_for_temperature(double T) {
    if (!(T > 0.0)) throw std::domain_error("a_for_temperature: T must be > 0");
    const auto& k = physical_constants();
    return 2.0 * std::numbers::pi * k.k_B * T / k.hbar;
}

// Linear acceleration (m/s^2) whose Unruh temperature T = hbar a_acc / (2 pi c k_B)
// equals the given T; exactly c times a_for_temperature(T).
inline double unruh_acceleration_for(double T) {
    if (!(T > 0.0)) throw std::domain_error("unruh_acceleration_for: T must be > 0");
    const auto& k = physical_constants();
    return 2.0 * std::numbers::pi * k.c * k.k_B * T / k.hbar;
}

// rad/s -> cycles/s.
inline double ordinary_frequency(double angular) { return angular / (2.0 * std::numbers::pi); }

// A two-epoch scenario with the detector gap scaled as 1/(a t): the product
// t * E_bar(t) is invariant, so E_bar_2 is derived, not free.
struct ScalingScenario {
    double a = 1.0;        // 1/s
    double t1 = 0.0;       // s
    double t2 = 0.0;       // s
    double e_bar_1 = 0.0;  // Hz, gap at t1

    double e_bar_2() const { return t1 * e_bar_1 / t2; }

    void validate() const {
        if (!(a > 0.0) || !(t1 > 0.0) || !(t2 > 0.0) || !(e_bar_1 > 0.0))
            throw std::domain_error("ScalingScenario: all parameters must be > 0");
        if (!(t1 < t2)) throw std::domain_error("ScalingScenario: need t1 < t2");
    }
};

// Gap at coordinate time t for an eta-frequency E: E_bar(t) = E / (a t).
inline double scaled_gap(double E, double a, double t) {
    if (!(a > 0.0) || !(t > 0.0)) throw std::domain_error("scaled_gap: a and t must be > 0");
    return E / (a * t);
}

// Growth requirement for thermalization: t2/t1 must exceed e^{1/(t1 E_bar_1)}.
inline double thermalization_threshold(double t1_ebar1) {
    if (!(t1_ebar1 > 0.0)) throw std::domain_error("thermalization_threshold: product must be > 0");
    return std::exp(1.0 / t1_ebar1);
}

// Margin = (t2/t1) / e^{1/(t1 E_bar_1)}; values >> 1 mean comfortable
// thermalization, < 1 means the window is too short.
inline double thermalization_margin(const ScalingScenario& s) {
    s.validate();
    return (s.t2 / s.t1) / thermalization_threshold(s.t1 * s.e_bar_1);
}

struct FeasibilityReport {
    double temperature_K = 0.0;
    double a_rad_per_s = 0.0;
    double a_ordinary_Hz = 0.0;
    double unruh_acceleration = 0.0;  // m/s^2
    double margin = 0.0;
    double threshold = 0.0;
    ScalingScenario scenario;
};

inline FeasibilityReport feasibility_report(double temperature_K, const ScalingScenario& sc) {
    sc.validate();
    FeasibilityReport r;
    r.temperature_K = temperature_K;
    r.a_rad_per_s = a_for_temperature(temperature_K);
    r.a_ordinary_Hz = ordinary_frequency(r.a_rad_per_s);
    r.unruh_acceleration = unruh_acceleration_for(temperature_K);
    r.threshold = thermalization_threshold(sc.t1 * sc.e_bar_1);
    r.margin = thermalization_margin(sc);
    r.scenario = sc;
    return r;
}

}  // namespace conevac
