#pragma once

// Quadrant decomposition of 1+1 Minkowski spacetime and the coordinate maps
// between Minkowski (t, z), quadrant conformal (u_time, u_space), and null
// (V = t+z, U = t-z) coordinates.  Natural units (c = 1) throughout.
//
// The four quadrants, with their conformal charts (a > 0 is the scaling
// constant, units 1/time):
//   F (future cone,  t > |z|):  t = a^-1 e^{a eta}  cosh(a zeta),
//                               z = a^-1 e^{a eta}  sinh(a zeta)
//   P (past cone,    t < -|z|): t = -a^-1 e^{a etab} cosh(a zetab),
//                               z = -a^-1 e^{a etab} sinh(a zetab)
//   R (right wedge,  z > |t|):  t = a^-1 e^{a eps}  sinh(a tau),
//                               z = a^-1 e^{a eps}  cosh(a tau)
//   L (left wedge,   z < -|t|): t = -a^-1 e^{a epsb} sinh(a taub),
//                               z = -a^-1 e^{a epsb} cosh(a taub)
//
// Each chart has a local null pair related to the global V, U by pure
// exponentials:
//   F: V =  a^-1 e^{a nu},    U =  a^-1 e^{a mu},    nu  = eta + zeta,  mu  = eta - zeta
//   P: V = -a^-1 e^{-a nub},  U = -a^-1 e^{-a mub},  nub = -(etab+zetab), mub = -(etab-zetab)
//   R: V =  a^-1 e^{a chi},   U = -a^-1 e^{-a kap},  chi = tau + eps,   kap = tau - eps
//   L: V = -a^-1 e^{-a chib}, U =  a^-1 e^{a kapb},  chib = -(epsb+taub), kapb = epsb - taub
//
// Note that for V > 0 the F and R charts share the same V-relation, so
// chi(V) = nu(V) identically; likewise nub(V) = chib(V) for V < 0.  The
// light cone |t| = |z| belongs to no chart and is reported as Boundary.

#include <cmath>
#include <stdexcept>
#include <string>

namespace conevac {

enum class Quadrant { F, P, R, L };

// classify() outcome: the light-cone boundary is a value, not an error.
enum class Region { F, P, R, L, Boundary };

inline const char* to_string(Quadrant q) {
    switch (q) {
        case Quadrant::F: return "F";
        case Quadrant::P: return "P";
        case Quadrant::R: return "R";
        case Quadrant::L: return "L";
    }
    return "?";
}

inline const char* to_string(Region r) {
    switch (r) {
        case Region::F: return "F";
        case Region::P: return "P";
        case Region::R: return "R";
        case Region::L: return "L";
        case Region::Boundary: return "boundary";
    }
    return "?";
}

inline Region region_of(Quadrant q) {
    switch (q) {
        case Quadrant::F: return Region::F;
        case Quadrant::P: return Region::P;
        case Quadrant::R: return Region::R;
        case Quadrant::L: return Region::L;
    }
    throw std::logic_error("region_of: invalid quadrant");
}

struct SpacetimeEvent {
    double t = 0.0;
    double z = 0.0;
};

struct QuadrantCoord {
    Quadrant quadrant = Quadrant::F;
    double u_time = 0.0;   // eta, etab, tau, or taub depending on quadrant
    double u_space = 0.0;  // zeta, zetab, eps, or epsb
    double a = 1.0;
};

struct NullCoord {
    double V = 0.0;        // t + z
    double U = 0.0;        // t - z
    Quadrant quadrant = Quadrant::F;
    double v_local = 0.0;  // nu, nub, chi, or chib
    double u_local = 0.0;  // mu, mub, kap, or kapb
    double a = 1.0;
};

enum class NullBranch { VLike, ULike };

namespace detail {

inline void require_finite(const SpacetimeEvent& e) {
    if (!std::isfinite(e.t) || !std::isfinite(e.z))
        throw std::domain_error("spacetime: event must have finite components");
}

inline void require_positive_a(double a) {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("spacetime: scaling constant a must be positive and finite");
}

}  // namespace detail

inline Region classify(const SpacetimeEvent& e) {
    detail::require_finite(e);
    const double at = std::abs(e.t), az = std::abs(e.z);
    if (at == az) return Region::Boundary;  // includes the origin
    if (e.t > az) return Region::F;
    if (e.t < -az) return Region::P;
    return (e.z > 0.0) ? Region::R : Region::L;
}

// Local null coordinate as a function of the global V (V-like branch) or
// U (U-like branch), inverting the exponential relations above.
inline double local_null_from_V(Quadrant q, double V, double a) {
    detail::require_positive_a(a);
    switch (q) {
        case Quadrant::F:
            if (!(V > 0.0)) throw std::domain_error("local_null_from_V: F requires V > 0");
            return std::log(a * V) / a;  // nu
        case Quadrant::R:
            if (!(V > 0.0)) throw std::domain_error("local_null_from_V: R requires V > 0");
            return std::log(a * V) / a;  // chi = nu
        case Quadrant::P:
            if (!(V < 0.0)) throw std::domain_error("local_null_from_V: P requires V < 0");
            return -std::log(-a * V) / a;  // nub
        case Quadrant::L:
            if (!(V < 0.0)) throw std::domain_error("local_null_from_V: L requires V < 0");
            return -std::log(-a * V) / a;  // chib
    }
    throw std::logic_error("local_null_from_V: invalid quadrant");
}

inline double local_null_from_U(Quadrant q, double U, double a) {
    detail::require_positive_a(a);
    switch (q) {
        case Quadrant::F:
            if (!(U > 0.0)) throw std::domain_error("local_null_from_U: F requires U > 0");
            return std::log(a * U) / a;  // mu
        case Quadrant::P:
            if (!(U < 0.0)) throw std::domain_error("local_null_from_U: P requires U < 0");
            return -std::log(-a * U) / a;  // mub
        case Quadrant::R:
            if (!(U < 0.0)) throw std::domain_error("local_null_from_U: R requires U < 0");
            return -std::log(-a * U) / a;  // kap
        case Quadrant::L:
            if (!(U > 0.0)) throw std::domain_error("local_null_from_U: L requires U > 0");
            return std::log(a * U) / a;  // kapb
    }
    throw std::logic_error("local_null_from_U: invalid quadrant");
}

// Global null coordinate from the quadrant-local one (the forward maps).
inline double null_map(Quadrant q, double local_null, double a, NullBranch branch) {
    detail::require_positive_a(a);
    const double x = local_null;
    if (branch == NullBranch::VLike) {
        switch (q) {
            case Quadrant::F: return std::exp(a * x) / a;    // V = a^-1 e^{a nu}
            case Quadrant::R: return std::exp(a * x) / a;    // V = a^-1 e^{a chi}
            case Quadrant::P: return -std::exp(-a * x) / a;  // V = -a^-1 e^{-a nub}
            case Quadrant::L: return -std::exp(-a * x) / a;  // V = -a^-1 e^{-a chib}
        }
    } else {
        switch (q) {
            case Quadrant::F: return std::exp(a * x) / a;    // U = a^-1 e^{a mu}
            case Quadrant::P: return -std::exp(-a * x) / a;  // U = -a^-1 e^{-a mub}
            case Quadrant::R: return -std::exp(-a * x) / a;  // U = -a^-1 e^{-a kap}
            case Quadrant::L: return std::exp(a * x) / a;    // U = a^-1 e^{a kapb}
        }
    }
    throw std::logic_error("null_map: invalid quadrant");
}

// Full null description of an in-quadrant event.
inline NullCoord to_null(const SpacetimeEvent& e, double a) {
    detail::require_finite(e);
    detail::require_positive_a(a);
    const Region r = classify(e);
    if (r == Region::Boundary)
        throw std::domain_error("to_null: event lies on the light cone; no chart covers it");
    NullCoord n;
    n.V = e.t + e.z;
    n.U = e.t - e.z;
    n.a = a;
    switch (r) {
        case Region::F: n.quadrant = Quadrant::F; break;
        case Region::P: n.quadrant = Quadrant::P; break;
        case Region::R: n.quadrant = Quadrant::R; break;
        case Region::L: n.quadrant = Quadrant::L; break;
        default: break;
    }
    n.v_local = local_null_from_V(n.quadrant, n.V, a);
    n.u_local = local_null_from_U(n.quadrant, n.U, a);
    return n;
}

// Conformal chart coordinates of an in-quadrant event.  Routed through the
// null pair, which is numerically stable everywhere strictly inside a
// quadrant:
//   F: eta  = (nu + mu)/2,    zeta  = (nu - mu)/2
//   P: etab = -(nub + mub)/2, zetab = (mub - nub)/2
//   R: tau  = (chi + kap)/2,  eps   = (chi - kap)/2
//   L: taub = -(chib + kapb)/2, epsb = (kapb - chib)/2
inline QuadrantCoord to_quadrant(const SpacetimeEvent& e, double a) {
    const NullCoord n = to_null(e, a);
    QuadrantCoord qc;
    qc.quadrant = n.quadrant;
    qc.a = a;
    const double v = n.v_local, u = n.u_local;
    switch (n.quadrant) {
        case Quadrant::F:
            qc.u_time = 0.5 * (v + u);
            qc.u_space = 0.5 * (v - u);
            break;
        case Quadrant::P:
            qc.u_time = -0.5 * (v + u);
            qc.u_space = 0.5 * (u - v);
            break;
        case Quadrant::R:
            qc.u_time = 0.5 * (v + u);
            qc.u_space = 0.5 * (v - u);
            break;
        case Quadrant::L:
            qc.u_time = -0.5 * (v + u);
            qc.u_space = 0.5 * (u - v);
            break;
    }
    return qc;
}

// The defining chart maps, verbatim.  In the cones (F/P) the exponential
// radial factor carries the time coordinate and the boost angle the space
// coordinate; in the wedges (R/L) the roles are exchanged.
inline SpacetimeEvent from_quadrant(const QuadrantCoord& qc) {
    detail::require_positive_a(qc.a);
    const double a = qc.a;
    SpacetimeEvent e;
    switch (qc.quadrant) {
        case Quadrant::F: {
            const double radial = std::exp(a * qc.u_time) / a;  // e^{a eta}/a
            const double arg = a * qc.u_space;                  // a zeta
            e.t = radial * std::cosh(arg);
            e.z = radial * std::sinh(arg);
            break;
        }
        case Quadrant::P: {
            const double radial = std::exp(a * qc.u_time) / a;  // e^{a etab}/a
            const double arg = a * qc.u_space;                  // a zetab
            e.t = -radial * std::cosh(arg);
            e.z = -radial * std::sinh(arg);
            break;
        }
        case Quadrant::R: {
            const double radial = std::exp(a * qc.u_space) / a;  // e^{a eps}/a
            const double arg = a * qc.u_time;                    // a tau
            e.t = radial * std::sinh(arg);
            e.z = radial * std::cosh(arg);
            break;
        }
        case Quadrant::L: {
            const double radial = std::exp(a * qc.u_space) / a;  // e^{a epsb}/a
            const double arg = a * qc.u_time;                    // a taub
            e.t = -radial * std::sinh(arg);
            e.z = -radial * std::cosh(arg);
            break;
        }
    }
    return e;
}

}  // namespace conevac
