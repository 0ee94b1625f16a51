#pragma once

// Adaptive complex-valued quadrature (Gauss-Kronrod 7/15), fixed-order
// Gauss-Legendre panels, and Neville extrapolation of regulator ladders.
//
// The G7/K15 pair gives a cheap embedded error estimate per interval; the
// adaptive driver keeps a worst-first queue of intervals (no recursion), so
// behaviour is deterministic for a given integrand and configuration.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <numbers>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace conevac {

using Complex = std::complex<double>;

struct QuadratureConfig {
    double rel_tol = 1e-10;       // on the accumulated |integral|
    double abs_tol = 0.0;         // absolute floor; whichever is larger wins
    int max_intervals = 20000;    // refinement budget
};

struct QuadratureResult {
    Complex value{0.0, 0.0};
    double error = 0.0;           // accumulated K15-G7 deviation estimate
    int intervals = 0;            // intervals in the final partition
    bool converged = false;
};

namespace detail {

// QUADPACK 15-point Kronrod nodes/weights on [-1,1] (positive half; the
// rule is symmetric) and the embedded 7-point Gauss weights.
inline constexpr double kGKNodes[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0000000000000000};
inline constexpr double kKronrodWeights[8] = {
    0.0229353220105292, 0.0630920926299786, 0.1047900103222502,
    0.1406532597155259, 0.1690047266392679, 0.1903505780647854,
    0.2044329400752989, 0.2094821410847278};
// Gauss weights aligned with nodes 1, 3, 5, 7 of the Kronrod set.
inline constexpr double kGaussWeights[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

template <class F>
inline void gk15(const F& f, double lo, double hi, Complex& value, double& error) {
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    Complex kron{0.0, 0.0};
    Complex gauss{0.0, 0.0};
    for (int i = 0; i < 8; ++i) {
        const double dx = half * kGKNodes[i];
        const Complex fv = (i == 7) ? f(mid) : f(mid - dx) + f(mid + dx);
        kron += kKronrodWeights[i] * fv;
        // The embedded G7 rule uses Kronrod nodes 1, 3, 5 (paired) and the
        // center node 7; all have odd index, with Gauss weight index i/2.
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * fv;
    }
    value = half * kron;
    error = std::abs(half * (kron - gauss));
}

}  // namespace detail

// Integrate a complex-valued callable on [lo, hi].  `breakpoints` seeds the
// initial partition (values outside (lo, hi) are ignored); seeding matters
// whenever the integrand has narrow features an initial coarse rule would
// miss entirely.
template <class F>
QuadratureResult integrate_gk(const F& f, double lo, double hi,
                              const QuadratureConfig& cfg = {},
                              std::span<const double> breakpoints = {}) {
    struct Segment {
        double lo, hi, error;
        Complex value;
        bool operator<(const Segment& o) const { return error < o.error; }
    };

    std::vector<double> edges;
    edges.push_back(lo);
    for (double b : breakpoints)
        if (b > lo && b < hi) edges.push_back(b);
    edges.push_back(hi);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    std::priority_queue<Segment> queue;
    Complex total{0.0, 0.0};
    double total_err = 0.0;
    int n_seg = 0;
    auto push_segment = [&](double a, double b) {
        Segment s{a, b, 0.0, Complex{}};
        detail::gk15(f, a, b, s.value, s.error);
        total += s.value;
        total_err += s.error;
        queue.push(s);
        ++n_seg;
    };
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) push_segment(edges[i], edges[i + 1]);

    auto tolerance = [&]() {
        return std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    };
    while (total_err > tolerance() && n_seg < cfg.max_intervals && !queue.empty()) {
        Segment worst = queue.top();
        queue.pop();
        total -= worst.value;
        total_err -= worst.error;
        --n_seg;
        const double mid = 0.5 * (worst.lo + worst.hi);
        if (mid <= worst.lo || mid >= worst.hi) {  // interval at floating-point resolution
            total += worst.value;
            total_err += worst.error;
            ++n_seg;
            break;
        }
        push_segment(worst.lo, mid);
        push_segment(mid, worst.hi);
    }

    QuadratureResult out;
    out.value = total;
    out.error = total_err;
    out.intervals = n_seg;
    out.converged = total_err <= tolerance();
    return out;
}

// Real-valued convenience wrapper.
template <class F>
QuadratureResult integrate_gk_real(const F& f, double lo, double hi,
                                   const QuadratureConfig& cfg = {},
                                   std::span<const double> breakpoints = {}) {
    return integrate_gk([&](double x) { return Complex(f(x), 0.0); }, lo, hi, cfg, breakpoints);
}

// Neville polynomial extrapolation of samples (x_i, y_i) to x = 0.
// Intended for regulator ladders: x_i are the regulator values (geometric
// progressions work best), y_i the regulated results.  `err_estimate`
// receives |last - previous| of the tableau diagonal.
template <class T>
T neville_to_zero(std::span<const double> xs, std::span<const T> ys, double* err_estimate = nullptr) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("neville_to_zero: need >= 2 matching samples");
    const std::size_t n = xs.size();
    std::vector<T> t(ys.begin(), ys.end());
    T previous = t[0];
    for (std::size_t j = 1; j < n; ++j) {
        previous = t[0];
        for (std::size_t i = 0; i + j < n; ++i) {
            const double denom = xs[i] - xs[i + j];
            if (denom == 0.0) throw std::invalid_argument("neville_to_zero: duplicate abscissae");
            t[i] = (xs[i] * t[i + 1] - xs[i + j] * t[i]) / denom;
        }
    }
    if (err_estimate) *err_estimate = std::abs(t[0] - previous);
    return t[0];
}

// Fixed-order Gauss-Legendre rule on [-1,1]; nodes computed once by Newton
// iteration on P_n.  Used for smooth panel integration where an embedded
// error estimate is unnecessary.
struct GaussLegendre {
    std::vector<double> nodes, weights;

    explicit GaussLegendre(int n) : nodes(n), weights(n) {
        for (int i = 0; i < (n + 1) / 2; ++i) {
            // Chebyshev-like initial guess, then Newton on P_n(x) = 0.
            double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
            double dp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double pk = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = pk;
                }
                dp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / dp;
                x -= dx;
                if (std::abs(dx) < 1e-15) break;
            }
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = weights[n - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }

    // Integrate f over [lo, hi] with this rule.
    template <class F>
    auto integrate(const F& f, double lo, double hi) const {
        const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        auto acc = f(mid + half * nodes[0]) * weights[0];
        for (std::size_t i = 1; i < nodes.size(); ++i)
            acc += f(mid + half * nodes[i]) * weights[i];
        return acc * half;
    }
};

inline const GaussLegendre& gauss_legendre_16() {
    static const GaussLegendre rule(16);
    return rule;
}

}  // namespace conevac
