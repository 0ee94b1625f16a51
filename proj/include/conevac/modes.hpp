#pragma once

// Mode functions of the massless left-moving sector:
//   * plane waves (4 pi k)^{-1/2} e^{-ikV},
//   * quadrant conformal modes g_w = (4 pi w)^{-1/2} e^{-i w (local null)},
//   * their theta-supported composition as functions of the global V,
//   * the pure-positive-frequency combinations G and Gbar,
//   * a windowed-FFT estimator for the negative-frequency energy fraction.
//
// Only the left-moving sector is implemented; the right-moving sector is the
// identical construction in U (swap V -> U and the U-branch null relations).
//
// Support conventions: the F and R charts cover V > 0, the P and L charts
// V < 0.  On the light cone V = 0 the local coordinate diverges, so the
// composed modes return exactly 0 there (a measure-zero point in every
// integral computed here).

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "conevac/fft.hpp"
#include "conevac/spacetime.hpp"

namespace conevac {

struct ModeSpec {
    Quadrant quadrant = Quadrant::F;
    double omega = 1.0;  // conformal frequency, > 0
    double a = 1.0;      // scaling constant, > 0
};

namespace detail {

inline void require_mode_spec(const ModeSpec& s) {
    if (!(s.omega > 0.0) || !std::isfinite(s.omega))
        throw std::invalid_argument("modes: omega must be positive and finite");
    require_positive_a(s.a);
}

inline double mode_norm(double omega) {
    return 1.0 / std::sqrt(4.0 * std::numbers::pi * omega);
}

}  // namespace detail

// (4 pi k)^{-1/2} e^{-ikV}
inline std::complex<double> plane_wave(double k, double V) {
    if (!(k > 0.0) || !std::isfinite(k))
        throw std::invalid_argument("plane_wave: k must be positive and finite");
    return std::polar(detail::mode_norm(k), -k * V);
}

// (4 pi w)^{-1/2} e^{-i w local_null}; same closed form in every quadrant.
inline std::complex<double> mode_g(const ModeSpec& spec, double local_null) {
    detail::require_mode_spec(spec);
    return std::polar(detail::mode_norm(spec.omega), -spec.omega * local_null);
}

// Theta-supported composition: zero outside the quadrant's V-support (and at
// V = 0 exactly); inside, mode_g at the local null coordinate of V.  For
// V > 0 this is (4 pi w)^{-1/2} (aV)^{-i w/a}; for V < 0 it carries the
// opposite phase exponent, (4 pi w)^{-1/2} (a|V|)^{+i w/a}.
inline std::complex<double> mode_g_of_V(const ModeSpec& spec, double V) {
    detail::require_mode_spec(spec);
    const bool future_side = (spec.quadrant == Quadrant::F || spec.quadrant == Quadrant::R);
    if (V == 0.0 || (future_side && V < 0.0) || (!future_side && V > 0.0))
        return {0.0, 0.0};
    return mode_g(spec, local_null_from_V(spec.quadrant, V, spec.a));
}

enum class GVariant { G, GBar };

// Pure-positive-frequency modes assembled from the cone modes:
//   G(V)    = theta(V) g^F(nu(V)) + theta(-V) e^{-pi w/a} g^P(nub(V))*
//   Gbar(V) = theta(-V) g^P(nub(V)) + theta(V) e^{-pi w/a} g^F(nu(V))*
// Both equal a single principal-branch power of a(V - i0):
//   G = (4 pi w)^{-1/2} (a(V-i0))^{-i w/a},
//   Gbar = (4 pi w)^{-1/2} e^{-pi w/a} (a(V-i0))^{+i w/a}.
// `regulator_delta` > 0 evaluates the analytic continuation at V - i delta,
// which is what the windowed Fourier test samples; delta = 0 evaluates the
// boundary value via the branch split (returning 0 at V = 0).
inline std::complex<double> mode_G(double omega, double a, double V, GVariant variant,
                                   double regulator_delta = 0.0) {
    if (!(omega > 0.0) || !std::isfinite(omega))
        throw std::invalid_argument("mode_G: omega must be positive and finite");
    detail::require_positive_a(a);
    if (regulator_delta < 0.0) throw std::invalid_argument("mode_G: regulator_delta must be >= 0");
    const double b = omega / a;
    const double norm = detail::mode_norm(omega);
    const std::complex<double> i{0.0, 1.0};
    if (regulator_delta > 0.0) {
        const std::complex<double> z = a * std::complex<double>(V, -regulator_delta);
        const std::complex<double> phase =
            (variant == GVariant::G) ? std::exp(-i * b * std::log(z))
                                     : std::exp(-std::numbers::pi * b) * std::exp(i * b * std::log(z));
        return norm * phase;
    }
    if (V == 0.0) return {0.0, 0.0};
    const double lg = std::log(a * std::abs(V));
    if (variant == GVariant::G) {
        // V>0: (aV)^{-ib};  V<0: e^{-pi b} (a|V|)^{-ib}
        const double weight = (V > 0.0) ? 1.0 : std::exp(-std::numbers::pi * b);
        return weight * std::polar(norm, -b * lg);
    }
    // Gbar.  V<0: (a|V|)^{+ib};  V>0: e^{-pi b} (aV)^{+ib}
    const double weight = (V < 0.0) ? 1.0 : std::exp(-std::numbers::pi * b);
    return weight * std::polar(norm, b * lg);
}

// ------------------------------------------------------------------
// Negative-frequency energy fraction.
//
// Samples f on a symmetric window [-L, L], applies a Gaussian taper
// e^{-V^2/(2 sigma^2)}, and estimates the spectral energy density with an
// unscaled inverse FFT (analysis kernel e^{+ikV}, so a pure e^{-ikV} plane
// wave lands at bin k > 0).  The reported fraction is
//     sum_{k <= -k_guard} |F(k)|^2 / sum_all |F(k)|^2,
// optionally restricted to |k| <= k_max.
//
// The guard band k_guard = guard_bins * pi / L excludes the first few bins
// around k = 0: the cone modes' spectral density grows like |k|^{-2} toward
// k = 0, and any finite window smears that infrared peak across k = 0 by
// about one bin width.  Without the guard the estimator plateaus at the
// smearing level instead of converging; with it, refining the window and
// regulator drives the fraction of a genuinely positive-frequency function
// to zero.  guard_bins is a reported parameter, not a hidden constant.
// ------------------------------------------------------------------

struct FrequencyScanConfig {
    double half_width = 200.0;       // L: window is [-L, L)
    std::size_t n_samples = 1 << 17; // power of two
    double sigma = 200.0 / 4.5;      // Gaussian taper width
    double k_max = 0.0;              // 0 = no cutoff
    int guard_bins = 8;              // IR guard band, in units of pi/L
};

struct FrequencyScanResult {
    double fraction = 0.0;      // negative-frequency energy fraction
    double total_energy = 0.0;  // denominator, for diagnostics
    FrequencyScanConfig config;
};

inline FrequencyScanResult negative_frequency_fraction(
    const std::function<std::complex<double>(double)>& f, const FrequencyScanConfig& cfg) {
    const std::size_t n = cfg.n_samples;
    if (n < 8 || (n & (n - 1)) != 0 || !(cfg.half_width > 0.0) || !(cfg.sigma > 0.0))
        throw std::invalid_argument(
            "negative_frequency_fraction: need power-of-two samples >= 8 and positive "
            "window/taper widths");
    const double L = cfg.half_width;
    const double dV = 2.0 * L / static_cast<double>(n);

    std::vector<std::complex<double>> x(n);
    for (std::size_t j = 0; j < n; ++j) {
        const double V = -L + dV * static_cast<double>(j);
        const double taper = std::exp(-V * V / (2.0 * cfg.sigma * cfg.sigma));
        x[j] = f(V) * taper;
    }
    fft_radix2(x, +1);  // analysis kernel e^{+ikV}

    const double k_guard = cfg.guard_bins * std::numbers::pi / L;
    double energy_neg = 0.0, energy_total = 0.0;
    for (std::size_t m = 0; m < n; ++m) {
        const double k = fft_angular_frequency(m, n, dV);
        if (cfg.k_max > 0.0 && std::abs(k) > cfg.k_max) continue;
        const double e = std::norm(x[m]) * dV * dV;  // |dV * X_m|^2
        energy_total += e;
        if (k <= -k_guard) energy_neg += e;
    }
    FrequencyScanResult out;
    out.fraction = (energy_total > 0.0) ? energy_neg / energy_total : 0.0;
    out.total_energy = energy_total;
    out.config = cfg;
    return out;
}

// Default refinement ladder for the positivity test: window, resolution and
// taper grow together while the regulator shrinks, so a positive-frequency
// function must show a monotonically decreasing fraction.  Lengths scale
// like 1/a.
struct RefinementLevel {
    FrequencyScanConfig scan;
    double regulator_delta;
};

inline std::vector<RefinementLevel> default_refinement_ladder(double a = 1.0) {
    detail::require_positive_a(a);
    std::vector<RefinementLevel> levels(3);
    levels[0].scan = {100.0 / a, std::size_t{1} << 16, 100.0 / (4.0 * a), 0.0, 8};
    levels[0].regulator_delta = 0.04 / a;
    levels[1].scan = {200.0 / a, std::size_t{1} << 17, 200.0 / (4.5 * a), 0.0, 8};
    levels[1].regulator_delta = 0.02 / a;
    levels[2].scan = {400.0 / a, std::size_t{1} << 18, 400.0 / (5.0 * a), 0.0, 8};
    levels[2].regulator_delta = 0.01 / a;
    return levels;
}

}  // namespace conevac
