#pragma once

// Numerical extraction of the plane-wave expansion coefficients of the
// theta-supported cone modes, and the identities relating them.
//
// Writing the V > 0 mode as an integral over plane waves
//     g(V) = Int_0^inf dk [ alpha_k (4 pi k)^{-1/2} e^{-ikV}
//                         + beta_k  (4 pi k)^{-1/2} e^{+ikV} ],
// plane-wave orthogonality over the full V line gives (docs/derivations.md)
//     alpha_k = (1/2pi) sqrt(k/w) Int e^{+ikV} g-phase(V) dV,
//     beta_k  = (1/2pi) sqrt(k/w) Int e^{-ikV} g-phase(V) dV,
// with g-phase(V) = (aV)^{-i w/a} on V > 0 (F/R) and (a|V|)^{+i w/a} on
// V < 0 (P/L).  The integrands are purely oscillatory (log-phase), so they
// are damped by e^{-delta |V|} and the damping is removed afterwards by
// polynomial extrapolation of a geometric delta ladder.
//
// Quadrature design: the substitution V = a^{-1} e^{u} turns the log-phase
// into a linear phase in u, making the oscillation uniform where the plane
// wave is slow; breakpoints seeded at the plane-wave half-periods keep the
// adaptive rule efficient where it is fast.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "conevac/modes.hpp"
#include "conevac/quadrature.hpp"
#include "conevac/spacetime.hpp"

namespace conevac {

struct BogoliubovEntry {
    Quadrant quadrant = Quadrant::F;
    double omega = 0.0;
    double k = 0.0;
    std::complex<double> alpha{0.0, 0.0};
    std::complex<double> beta{0.0, 0.0};
    double regulator_delta = 0.0;  // smallest delta of the ladder if extrapolated
    bool extrapolated = false;
    double error_estimate = 0.0;
    double a = 1.0;
};

namespace detail {

// Core damped projection integral
//   J = Int_0^inf e^{i kappa V} e^{-delta V} (aV)^{-i b} dV
// via u = ln(aV):
//   J = (1/a) Int du exp(u - i b u) exp(i (kappa/a) e^u - (delta/a) e^u).
inline QuadratureResult damped_projection(double kappa, double b, double delta, double a,
                                          const QuadratureConfig& cfg) {
    const double abs_kappa = std::abs(kappa);
    const double scale = std::max(abs_kappa, delta);
    // Below V_min the integrand modulus is < V_min, negligible against |J| ~ 1/scale.
    const double u_min = std::log(a * 1e-20 / scale);
    // Above V_max the damping has reduced the integrand to e^{-46}.
    const double u_max = std::log(46.0 * a / delta);

    std::vector<double> bps;
    // Half-period breakpoints of the plane-wave phase kappa V = m pi.
    const double u_osc = std::log(a * std::numbers::pi / abs_kappa);
    for (double u = u_osc; u < u_max; ) {
        bps.push_back(u);
        const double V = std::exp(u) / a;
        u = std::log(a * (V + std::numbers::pi / abs_kappa));
    }
    // Below the first half-period the log phase dominates; its rate in u is b.
    const double du = std::numbers::pi / std::max(std::abs(b), 1.0);
    for (double u = u_osc - du; u > u_min; u -= du) bps.push_back(u);

    auto integrand = [=](double u) {
        const double ev = std::exp(u);
        const std::complex<double> expo(u - (delta / a) * ev, (kappa / a) * ev - b * u);
        return std::exp(expo);
    };
    // The integrand's L1 mass is a/delta (= Int e^{-delta V} dV in the
    // original variable), spread over ~ |kappa|/delta oscillation panels, so
    // the summed Kronrod-Gauss deviations of fully resolved panels floor at
    // ~ machine-eps * a/delta (measured 1.1e-15 * a/delta) no matter how far
    // the panels are subdivided.  When the projection nearly cancels -- |J|
    // is exponentially small for the counter-rotating component -- a purely
    // relative target sits below that floor and the refinement budget burns
    // on rounding noise; floor the absolute tolerance instead.  Large
    // projections are still governed by rel_tol, and the achieved error is
    // reported to callers either way.
    QuadratureConfig eff = cfg;
    eff.abs_tol = std::max(cfg.abs_tol, 5e-15 * a / delta);
    auto res = integrate_gk(integrand, u_min, u_max, eff, bps);
    res.value /= a;
    res.error /= a;
    return res;
}

inline bool future_side(Quadrant q) {
    return q == Quadrant::F || q == Quadrant::R;
}

}  // namespace detail

// Damped Fourier projection of the cone mode onto plane waves at a single
// (omega, k, delta).  Throws if the adaptive quadrature fails to converge.
inline BogoliubovEntry project_coefficients(const ModeSpec& spec, double k, double delta,
                                            const QuadratureConfig& quad_cfg = {1e-11, 0.0, 100000}) {
    detail::require_mode_spec(spec);
    if (!(k > 0.0) || !std::isfinite(k)) throw std::domain_error("project_coefficients: k must be > 0");
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw std::domain_error("project_coefficients: delta must be > 0");

    const double b_signed = detail::future_side(spec.quadrant) ? spec.omega / spec.a
                                                               : -spec.omega / spec.a;
    // F/R: alpha from e^{+ikV}, beta from e^{-ikV} on V > 0.
    // P/L: substituting V -> -V maps the support onto V > 0 and flips both
    // the plane-wave sign and the phase exponent.
    const double kappa_alpha = detail::future_side(spec.quadrant) ? k : -k;
    const auto res_a = detail::damped_projection(kappa_alpha, b_signed, delta, spec.a, quad_cfg);
    const auto res_b = detail::damped_projection(-kappa_alpha, b_signed, delta, spec.a, quad_cfg);
    if (!res_a.converged || !res_b.converged) {
        std::ostringstream msg;
        msg << "project_coefficients: quadrature did not converge (residuals "
            << res_a.error << ", " << res_b.error << " after " << res_a.intervals << "/"
            << res_b.intervals << " intervals)";
        throw std::runtime_error(msg.str());
    }
    const double pref = std::sqrt(k / spec.omega) / (2.0 * std::numbers::pi);
    BogoliubovEntry e;
    e.quadrant = spec.quadrant;
    e.omega = spec.omega;
    e.k = k;
    e.a = spec.a;
    e.alpha = pref * res_a.value;
    e.beta = pref * res_b.value;
    e.regulator_delta = delta;
    e.extrapolated = false;
    e.error_estimate = pref * (res_a.error + res_b.error);
    return e;
}

// Geometric regulator ladder delta_j = scale * k * r^j, j = 0..levels-1.
inline std::vector<double> default_delta_ladder(double k, int levels = 5, double scale = 0.1,
                                                double ratio = 0.5) {
    if (levels < 3) throw std::invalid_argument("default_delta_ladder: need >= 3 levels");
    std::vector<double> out(levels);
    double d = scale * k;
    for (int j = 0; j < levels; ++j, d *= ratio) out[j] = d;
    return out;
}

// Richardson/Neville extrapolation of a geometric delta ladder to delta = 0.
// Preconditions: >= 3 entries for the same (quadrant, omega, k), deltas in
// geometric progression; convergence of successive differences must not
// degrade (a non-monotone sequence signals a quadrature problem and is
// reported, never extrapolated through).
inline BogoliubovEntry extrapolate_delta(std::span<const BogoliubovEntry> entries) {
    if (entries.size() < 3)
        throw std::invalid_argument("extrapolate_delta: need at least 3 delta levels");
    const auto& first = entries.front();
    std::vector<double> deltas;
    for (const auto& e : entries) {
        if (e.quadrant != first.quadrant || e.omega != first.omega || e.k != first.k ||
            e.a != first.a)
            throw std::invalid_argument("extrapolate_delta: entries mix (quadrant, omega, k, a)");
        if (e.extrapolated)
            throw std::invalid_argument("extrapolate_delta: input already extrapolated");
        if (!(e.regulator_delta > 0.0))
            throw std::invalid_argument("extrapolate_delta: deltas must be positive");
        deltas.push_back(e.regulator_delta);
    }
    for (std::size_t i = 0; i + 1 < deltas.size(); ++i)
        if (!(deltas[i + 1] < deltas[i]))
            throw std::invalid_argument("extrapolate_delta: deltas must decrease");
    const double r0 = deltas[1] / deltas[0];
    for (std::size_t i = 1; i + 1 < deltas.size(); ++i) {
        const double r = deltas[i + 1] / deltas[i];
        if (std::abs(r - r0) > 1e-6 * r0)
            throw std::invalid_argument("extrapolate_delta: deltas must be geometric");
    }

    // Convergence diagnostic: successive differences must be non-increasing.
    auto check_monotone = [&](auto member, const char* which) {
        double prev = -1.0;
        for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
            const double d = std::abs(entries[i + 1].*member - entries[i].*member);
            if (prev >= 0.0 && d > prev * (1.0 + 1e-9) && d > 1e-14 * std::abs(entries.back().*member)) {
                std::ostringstream msg;
                msg << "extrapolate_delta: non-monotone " << which << " differences:";
                for (std::size_t j = 0; j + 1 < entries.size(); ++j)
                    msg << ' ' << std::abs(entries[j + 1].*member - entries[j].*member);
                throw std::runtime_error(msg.str());
            }
            prev = d;
        }
    };
    check_monotone(&BogoliubovEntry::alpha, "alpha");
    check_monotone(&BogoliubovEntry::beta, "beta");

    std::vector<std::complex<double>> alphas, betas;
    double quad_err = 0.0;
    for (const auto& e : entries) {
        alphas.push_back(e.alpha);
        betas.push_back(e.beta);
        quad_err = std::max(quad_err, e.error_estimate);
    }
    double err_a = 0.0, err_b = 0.0;
    BogoliubovEntry out = first;
    out.alpha = neville_to_zero<std::complex<double>>(deltas, alphas, &err_a);
    out.beta = neville_to_zero<std::complex<double>>(deltas, betas, &err_b);
    out.regulator_delta = deltas.back();
    out.extrapolated = true;
    out.error_estimate = std::max(err_a, err_b) + quad_err;
    return out;
}

// Convenience: project at a default ladder and extrapolate.
inline BogoliubovEntry extrapolated_coefficients(const ModeSpec& spec, double k,
                                                 int levels = 5, double delta_scale = 0.1,
                                                 const QuadratureConfig& quad_cfg = {1e-11, 0.0, 100000}) {
    const auto ladder = default_delta_ladder(k, levels, delta_scale);
    std::vector<BogoliubovEntry> entries;
    entries.reserve(ladder.size());
    for (double d : ladder) entries.push_back(project_coefficients(spec, k, d, quad_cfg));
    return extrapolate_delta(entries);
}

// Maximum absolute deviations of the six coefficient identities over a
// k-grid:
//   alpha^F = alpha^R, beta^F = beta^R, alpha^P = alpha^L, beta^P = beta^L,
//   beta^P = -e^{-pi w/a} conj(alpha^F), beta^F = -e^{-pi w/a} conj(alpha^P).
struct RelationReport {
    double dev_alpha_FR = 0.0;
    double dev_beta_FR = 0.0;
    double dev_alpha_PL = 0.0;
    double dev_beta_PL = 0.0;
    double dev_betaP_vs_alphaF = 0.0;
    double dev_betaF_vs_alphaP = 0.0;
    double omega = 0.0, a = 1.0;
    std::vector<double> k_grid;

    double max_deviation() const {
        return std::max({dev_alpha_FR, dev_beta_FR, dev_alpha_PL, dev_beta_PL,
                         dev_betaP_vs_alphaF, dev_betaF_vs_alphaP});
    }
};

inline RelationReport verify_relations(double omega, double a, std::span<const double> k_grid,
                                       int levels = 5, double delta_scale = 0.1,
                                       const QuadratureConfig& quad_cfg = {1e-11, 0.0, 100000}) {
    RelationReport rep;
    rep.omega = omega;
    rep.a = a;
    rep.k_grid.assign(k_grid.begin(), k_grid.end());
    const double q = std::exp(-std::numbers::pi * omega / a);
    for (double k : k_grid) {
        const auto F = extrapolated_coefficients({Quadrant::F, omega, a}, k, levels, delta_scale, quad_cfg);
        const auto R = extrapolated_coefficients({Quadrant::R, omega, a}, k, levels, delta_scale, quad_cfg);
        const auto P = extrapolated_coefficients({Quadrant::P, omega, a}, k, levels, delta_scale, quad_cfg);
        const auto L = extrapolated_coefficients({Quadrant::L, omega, a}, k, levels, delta_scale, quad_cfg);
        rep.dev_alpha_FR = std::max(rep.dev_alpha_FR, std::abs(F.alpha - R.alpha));
        rep.dev_beta_FR = std::max(rep.dev_beta_FR, std::abs(F.beta - R.beta));
        rep.dev_alpha_PL = std::max(rep.dev_alpha_PL, std::abs(P.alpha - L.alpha));
        rep.dev_beta_PL = std::max(rep.dev_beta_PL, std::abs(P.beta - L.beta));
        rep.dev_betaP_vs_alphaF =
            std::max(rep.dev_betaP_vs_alphaF, std::abs(P.beta + q * std::conj(F.alpha)));
        rep.dev_betaF_vs_alphaP =
            std::max(rep.dev_betaF_vs_alphaP, std::abs(F.beta + q * std::conj(P.alpha)));
    }
    return rep;
}

// ------------------------------------------------------------------
// Mode synthesis from a coefficient table.
//
// reconstruct_mode integrates
//   Int_{k1}^{kN} [ A_alpha(k) e^{-ikV} + A_beta(k) e^{+ikV} ] dk,
// A_x(k) = x(k) (4 pi k)^{-1/2}, interpolating the tabulated envelopes
// linearly in ln k (so the synthesis is exactly linear in the table), with
// Gauss-Legendre subpanels sized to the e^{+-ikV} oscillation.
//
// The synthesis integral converges toward k = 0 only in the Abel sense: the
// envelopes behave like k^{-1 + i b_s} (b_s = +-w/a per cone side), whose
// primitive oscillates in ln k without decaying.  Truncating at k1 > 0
// therefore leaves an O(1) remainder no matter how small k1 is.  The tail
// below k1 is completed analytically: with p = -1 + i b_s,
//   Int_0^{k1} A1 (k/k1)^p e^{-+ikV} dk
//     = A1 k1 sum_{m>=0} (-+ i k1 V)^m / (m! (p+1+m)),
// where the m = 0 term is the Abel-regularized value of the conditionally
// convergent endpoint.  Four terms leave O((k1 V)^4) behind.
// ------------------------------------------------------------------

namespace detail {

inline void require_table(std::span<const BogoliubovEntry> entries) {
    if (entries.size() < 2)
        throw std::invalid_argument("reconstruct_mode: need at least 2 k-nodes");
    const auto& f = entries.front();
    for (const auto& e : entries)
        if (e.quadrant != f.quadrant || e.omega != f.omega || e.a != f.a)
            throw std::invalid_argument("reconstruct_mode: entries mix (quadrant, omega, a)");
    for (std::size_t i = 0; i + 1 < entries.size(); ++i)
        if (!(entries[i].k < entries[i + 1].k) || !(entries[i].k > 0.0))
            throw std::invalid_argument("reconstruct_mode: k-grid must be positive and increasing");
}

inline std::complex<double> envelope_alpha(const BogoliubovEntry& e) {
    return e.alpha / std::sqrt(4.0 * std::numbers::pi * e.k);
}

inline std::complex<double> envelope_beta(const BogoliubovEntry& e) {
    return e.beta / std::sqrt(4.0 * std::numbers::pi * e.k);
}

// Abel-completed analytic tail below the first node.
inline std::complex<double> infrared_completion(std::complex<double> A1, double k1, double V,
                                                double b_signed, int osc_sign) {
    const std::complex<double> p{-1.0, b_signed};
    const std::complex<double> ikv{0.0, osc_sign * k1 * V};
    std::complex<double> term{1.0, 0.0};
    std::complex<double> sum{0.0, 0.0};
    double factorial = 1.0;
    for (int m = 0; m < 4; ++m) {
        if (m > 0) {
            term *= ikv;
            factorial *= m;
        }
        sum += term / (factorial * (p + 1.0 + static_cast<double>(m)));
    }
    return A1 * k1 * sum;
}

}  // namespace detail

inline std::complex<double> reconstruct_mode(std::span<const BogoliubovEntry> entries, double V) {
    detail::require_table(entries);
    if (V == 0.0) throw std::invalid_argument("reconstruct_mode: V must be nonzero");
    const auto& gl = gauss_legendre_16();
    const double b_signed = detail::future_side(entries.front().quadrant)
                                ? entries.front().omega / entries.front().a
                                : -entries.front().omega / entries.front().a;

    std::complex<double> total{0.0, 0.0};
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        const double k0 = entries[i].k, k1 = entries[i + 1].k;
        const double u0 = std::log(k0), u1 = std::log(k1);
        const auto Aa0 = detail::envelope_alpha(entries[i]);
        const auto Aa1 = detail::envelope_alpha(entries[i + 1]);
        const auto Ab0 = detail::envelope_beta(entries[i]);
        const auto Ab1 = detail::envelope_beta(entries[i + 1]);
        const int nsub = std::max(1, static_cast<int>(std::ceil((k1 - k0) * std::abs(V) / 4.0)));
        const double step = (u1 - u0) / nsub;
        for (int j = 0; j < nsub; ++j) {
            const double lo = u0 + j * step, hi = lo + step;
            total += gl.integrate(
                [&](double u) {
                    const double k = std::exp(u);
                    const double t = (u - u0) / (u1 - u0);
                    const auto Aa = Aa0 + (Aa1 - Aa0) * t;
                    const auto Ab = Ab0 + (Ab1 - Ab0) * t;
                    const std::complex<double> ph{0.0, -k * V};
                    return (Aa * std::exp(ph) + Ab * std::exp(-ph)) * k;  // k = Jacobian d k / d u
                },
                lo, hi);
        }
    }
    const double k1 = entries.front().k;
    total += detail::infrared_completion(detail::envelope_alpha(entries.front()), k1, V, b_signed, -1);
    total += detail::infrared_completion(detail::envelope_beta(entries.front()), k1, V, b_signed, +1);
    return total;
}

// A-priori bound on |reconstruct_mode - mode|: ultraviolet truncation (the
// integrand envelope falls like 1/k, so the tail beyond kN is ~|A(kN)|/|V|),
// the residual of the four-term infrared Taylor completion, and the
// piecewise-linear interpolation error of the envelopes in ln k.
inline double synthesis_error_bound(std::span<const BogoliubovEntry> entries, double V) {
    detail::require_table(entries);
    if (V == 0.0) throw std::invalid_argument("synthesis_error_bound: V must be nonzero");
    const double absV = std::abs(V);
    const auto& front = entries.front();
    const auto& back = entries.back();
    const double uv =
        1.6 * (std::abs(detail::envelope_alpha(back)) + std::abs(detail::envelope_beta(back))) / absV;
    const double k1 = front.k;
    const double x = k1 * absV;
    const double ir = (std::abs(detail::envelope_alpha(front)) + std::abs(detail::envelope_beta(front))) *
                      k1 * (x * x * x * x) / 24.0 * 4.0;
    const double b = front.omega / front.a;
    double interp = 0.0;
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
        const double du = std::log(entries[i + 1].k / entries[i].k);
        const double amp = std::abs(detail::envelope_alpha(entries[i])) +
                           std::abs(detail::envelope_beta(entries[i]));
        // Curvature of k^{-1+ib} envelopes in ln k over one panel, times the
        // panel measure |A| k du.
        interp += (1.0 + b * b) / 8.0 * du * du * amp * entries[i].k * du;
    }
    return uv + ir + interp;
}

}  // namespace conevac
