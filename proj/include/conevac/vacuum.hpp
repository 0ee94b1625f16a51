#pragma once

// The global vacuum restricted to one (omega, k)-pair of cone modes is a
// two-mode squeezed state over the future/past number basis,
//   |0> ~ sum_n q^n |n>_F |n>_P,   q = e^{-pi w / a},
// normalized by C = sqrt(1 - q^2).  This module builds the truncated state
// on a finite Fock grid and checks, numerically on the amplitudes, the
// annihilation identities that define it, the number balance between the
// two factors, and the thermal character of the reduced state.

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace conevac {

inline double squeeze_q(double omega, double a) {
    if (!(omega > 0.0) || !(a > 0.0))
        throw std::domain_error("squeeze_q: omega and a must be > 0");
    return std::exp(-std::numbers::pi * omega / a);
}

// Dense amplitude grid over |n_f, n_p> with 0 <= n <= side-1.  The grid is
// sized one level above the state truncation so ladder operators act without
// losing the edge term.
class FockVector2 {
  public:
    explicit FockVector2(int side) : side_(side), amp_(static_cast<std::size_t>(side) * side) {
        if (side < 1) throw std::invalid_argument("FockVector2: side must be >= 1");
    }

    int side() const { return side_; }
    std::complex<double>& at(int nf, int np) { return amp_[index(nf, np)]; }
    const std::complex<double>& at(int nf, int np) const { return amp_[index(nf, np)]; }

    double norm() const {
        double s = 0.0;
        for (const auto& z : amp_) s += std::norm(z);
        return std::sqrt(s);
    }

    FockVector2& operator-=(const FockVector2& o) {
        if (o.side_ != side_) throw std::invalid_argument("FockVector2: size mismatch");
        for (std::size_t i = 0; i < amp_.size(); ++i) amp_[i] -= o.amp_[i];
        return *this;
    }

    FockVector2& operator*=(double s) {
        for (auto& z : amp_) z *= s;
        return *this;
    }

  private:
    std::size_t index(int nf, int np) const {
        if (nf < 0 || np < 0 || nf >= side_ || np >= side_)
            throw std::out_of_range("FockVector2: index outside grid");
        return static_cast<std::size_t>(nf) * side_ + np;
    }

    int side_;
    std::vector<std::complex<double>> amp_;
};

enum class ConeFactor { Future, Past };

// a |n> = sqrt(n) |n-1>; amplitudes above the top row are dropped (they are
// zero for grids sized one above the state truncation).
inline FockVector2 annihilate(const FockVector2& v, ConeFactor which) {
    FockVector2 out(v.side());
    for (int nf = 0; nf < v.side(); ++nf)
        for (int np = 0; np < v.side(); ++np) {
            const auto& z = v.at(nf, np);
            if (z == std::complex<double>{}) continue;
            if (which == ConeFactor::Future && nf > 0)
                out.at(nf - 1, np) += std::sqrt(static_cast<double>(nf)) * z;
            if (which == ConeFactor::Past && np > 0)
                out.at(nf, np - 1) += std::sqrt(static_cast<double>(np)) * z;
        }
    return out;
}

// a^dag |n> = sqrt(n+1) |n+1>; raising off the top of the grid throws, the
// caller must size the grid to absorb it.
inline FockVector2 create(const FockVector2& v, ConeFactor which) {
    FockVector2 out(v.side());
    for (int nf = 0; nf < v.side(); ++nf)
        for (int np = 0; np < v.side(); ++np) {
            const auto& z = v.at(nf, np);
            if (z == std::complex<double>{}) continue;
            if (which == ConeFactor::Future) {
                if (nf + 1 >= v.side())
                    throw std::out_of_range("create: amplitude raised off the grid");
                out.at(nf + 1, np) += std::sqrt(static_cast<double>(nf + 1)) * z;
            } else {
                if (np + 1 >= v.side())
                    throw std::out_of_range("create: amplitude raised off the grid");
                out.at(nf, np + 1) += std::sqrt(static_cast<double>(np + 1)) * z;
            }
        }
    return out;
}

inline FockVector2 number_operator(const FockVector2& v, ConeFactor which) {
    FockVector2 out(v.side());
    for (int nf = 0; nf < v.side(); ++nf)
        for (int np = 0; np < v.side(); ++np) {
            const double n = (which == ConeFactor::Future) ? nf : np;
            out.at(nf, np) = n * v.at(nf, np);
        }
    return out;
}

struct TruncationChoice {
    int n_trunc = 0;
    bool capped = false;
};

// Smallest N with normalization deficit q^{2(N+1)} < tol.
inline TruncationChoice default_truncation(double q, double tol = 1e-12, int n_max = 512) {
    if (!(q > 0.0) || !(q < 1.0)) throw std::domain_error("default_truncation: need 0 < q < 1");
    if (!(tol > 0.0)) throw std::domain_error("default_truncation: tol must be > 0");
    const double needed = std::log(tol) / (2.0 * std::log(q)) - 1.0;
    int n = (needed < 0.0) ? 0 : static_cast<int>(std::ceil(needed));
    while (std::pow(q, 2.0 * (n + 1)) >= tol && n < n_max) ++n;  // guard the rounding of ceil
    if (n >= n_max) return {n_max, true};
    return {n, false};
}

enum class VacuumRelation { FAnnihilation, PAnnihilation, NumberBalance };

class TwoModeState {
  public:
    TwoModeState(double omega, double a, int n_trunc)
        : omega_(omega), a_(a), q_(squeeze_q(omega, a)), n_trunc_(n_trunc) {
        if (n_trunc < 0) throw std::invalid_argument("TwoModeState: n_trunc must be >= 0");
        // Recurrence keeps the Gibbs ratio p_{n+1}/p_n exact to rounding.
        coeff_.resize(n_trunc + 1);
        coeff_[0] = std::sqrt(1.0 - q_ * q_);
        for (int n = 1; n <= n_trunc; ++n) coeff_[n] = coeff_[n - 1] * q_;
    }

    double omega() const { return omega_; }
    double a() const { return a_; }
    double q() const { return q_; }
    int n_trunc() const { return n_trunc_; }
    double coefficient(int n) const { return coeff_.at(n); }
    double probability(int n) const { return coeff_.at(n) * coeff_.at(n); }

    // Sum of retained probabilities; the deficit 1 - total equals q^{2(N+1)}.
    double normalization() const {
        double s = 0.0;
        for (int n = n_trunc_; n >= 0; --n) s += probability(n);
        return s;
    }

    // Truncated von Neumann entropy of the reduced (one-cone) state.
    double entropy() const {
        double s = 0.0;
        for (int n = n_trunc_; n >= 0; --n) {
            const double p = probability(n);
            if (p > 0.0) s -= p * std::log(p);
        }
        return s;
    }

    // Truncated mean occupation of the reduced state.
    double mean_occupation() const {
        double s = 0.0;
        for (int n = n_trunc_; n >= 1; --n) s += n * probability(n);
        return s;
    }

    // Amplitudes on a grid one level above truncation.
    FockVector2 state_vector() const {
        FockVector2 v(n_trunc_ + 2);
        for (int n = 0; n <= n_trunc_; ++n) v.at(n, n) = coeff_[n];
        return v;
    }

    // Norm of the defining-identity residual applied to the truncated state:
    //   FAnnihilation: (a_F - q a_P^dag) |psi>
    //   PAnnihilation: (a_P - q a_F^dag) |psi>
    //   NumberBalance: (N_F - N_P) |psi>
    // The annihilation residuals are pure edge effects of the truncation,
    // C q^{N+1} sqrt(N+1) exactly; number balance vanishes identically.
    double residual_norm(VacuumRelation rel) const {
        const FockVector2 psi = state_vector();
        FockVector2 r(psi.side());
        switch (rel) {
            case VacuumRelation::FAnnihilation: {
                // Scale by q before raising so both branches form the same
                // float product sqrt(n+1) * (q c_n); the interior then
                // cancels bit-for-bit and only the edge term survives.
                r = annihilate(psi, ConeFactor::Future);
                FockVector2 t = psi;
                t *= q_;
                r -= create(t, ConeFactor::Past);
                break;
            }
            case VacuumRelation::PAnnihilation: {
                r = annihilate(psi, ConeFactor::Past);
                FockVector2 t = psi;
                t *= q_;
                r -= create(t, ConeFactor::Future);
                break;
            }
            case VacuumRelation::NumberBalance: {
                r = number_operator(psi, ConeFactor::Future);
                r -= number_operator(psi, ConeFactor::Past);
                break;
            }
        }
        return r.norm();
    }

  private:
    double omega_, a_, q_;
    int n_trunc_;
    std::vector<double> coeff_;
};

}  // namespace conevac
