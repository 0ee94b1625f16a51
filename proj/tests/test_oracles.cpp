// Oracle pinning: the closed-form reference layer is checked against values
// computed independently with arbitrary-precision arithmetic and hardcoded
// here.  Everything downstream (projection integrals, detector rates, vacuum
// spectra) is later compared against this layer, so these constants anchor
// the whole suite to an independent computation path.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <numbers>

#include "conevac/reference.hpp"

using conevac::Complex;
namespace ref = conevac::reference;

namespace {
constexpr double pi = std::numbers::pi;

void check_complex(Complex got, Complex want, double rel) {
    CAPTURE(got, want);
    CHECK(std::abs(got - want) <= rel * std::abs(want));
}
}  // namespace

TEST_CASE("complex gamma matches high-precision references", "[oracle]") {
    // Reference values: 50-digit arbitrary-precision evaluation, rounded to
    // the nearest double.
    check_complex(ref::cgamma(Complex(1.0, -1.0)),
                  Complex(0.49801566811835474, 0.15494982830181012), 1e-14);
    check_complex(ref::cgamma(Complex(1.0, 0.5)),
                  Complex(0.80169409706971673, -0.1996397381645961), 1e-14);
    check_complex(ref::cgamma(Complex(1.0, -2.0)),
                  Complex(0.1519040026700362, -0.019804880161854988), 1e-14);
    check_complex(ref::cgamma(Complex(0.5, 3.0)),
                  Complex(0.02144567055243065, 0.0068653648372617102), 1e-13);
    // Sanity anchors with exactly known values.
    check_complex(ref::cgamma(Complex(5.0, 0.0)), Complex(24.0, 0.0), 1e-14);
    check_complex(ref::cgamma(Complex(0.5, 0.0)), Complex(std::sqrt(pi), 0.0), 1e-14);
}

TEST_CASE("closed-form projection coefficients match references", "[oracle]") {
    // Each triple (omega, a, k) at finite regulator delta, evaluated from the
    // Gamma-function closed form with arbitrary-precision arithmetic.
    {
        auto c = ref::closed_coefficients(true, 1.0, 1.0, 1.0, 0.1);
        check_complex(c.alpha, Complex(-0.073896547658967415, 0.3519677005858034), 1e-13);
        check_complex(c.beta, Complex(0.0074968695888217125, -0.017425644571898134), 1e-13);
    }
    {
        auto c = ref::closed_coefficients(false, 0.5, 1.0, 2.0, 0.05);
        check_complex(c.alpha, Complex(-0.15263657278150389, -0.24035382360788191), 1e-13);
        check_complex(c.beta, Complex(0.035052327517268084, 0.049539609627476916), 1e-13);
    }
    {
        auto c = ref::closed_coefficients(true, 2.0, 1.3, 0.7, 0.02);
        check_complex(c.alpha, Complex(0.29655173612832159, 0.26854601878134193), 1e-13);
        check_complex(c.beta, Complex(-0.0024401996421044223, -0.0024776188812204885), 1e-13);
    }
}

TEST_CASE("closed-form coefficients obey the cone relations at delta -> 0", "[oracle]") {
    for (double omega : {0.5, 1.0, 2.0})
        for (double k : {0.5, 1.0, 2.0}) {
            const double a = 1.0;
            const auto f = ref::closed_coefficients(true, omega, a, k, 0.0);
            const auto p = ref::closed_coefficients(false, omega, a, k, 0.0);
            const double ratio = ref::coefficient_ratio_limit(omega, a);
            // |beta|/|alpha| -> e^{-pi omega / a} in each cone.
            CHECK_THAT(std::abs(f.beta) / std::abs(f.alpha),
                       Catch::Matchers::WithinRel(ratio, 1e-12));
            CHECK_THAT(std::abs(p.beta) / std::abs(p.alpha),
                       Catch::Matchers::WithinRel(ratio, 1e-12));
            // Cross-cone pairing: beta^P = -e^{-pi omega/a} conj(alpha^F) and
            // beta^F = -e^{-pi omega/a} conj(alpha^P).
            CHECK(std::abs(p.beta + ratio * std::conj(f.alpha)) < 1e-12 * std::abs(p.beta));
            CHECK(std::abs(f.beta + ratio * std::conj(p.alpha)) < 1e-12 * std::abs(f.beta));
            // Continuum normalization |alpha|^2 - |beta|^2 = 1/(2 pi k) * ...
            // is not finite-normalizable here; the ratio checks above are the
            // regulator-independent statements.
        }
}

TEST_CASE("stationary rate: residue series equals closed form", "[oracle]") {
    // Two independent derivations of the same quantity: a geometric residue
    // sum and the Planck-factor closed form.  Reference values pinned from
    // arbitrary-precision evaluation of the closed form.
    struct Case {
        double E, a, eps, want;
    };
    const Case cases[] = {
        {0.5, 1.0, 1e-2, 0.0036121884987285915},
        {1.0, 1.0, 1e-3, 0.00029806672563031201},
        {-1.0, 1.0, 1e-3, 0.15929333888767108},
        {2.0, 1.0, 1e-4, 1.1102814537326284e-06},
        {-0.5, 2.0, 2e-3, 0.10036091921937451},
    };
    for (const auto& c : cases) {
        CAPTURE(c.E, c.a, c.eps);
        const double closed = ref::rate_closed_form(c.E, c.a, c.eps);
        const double series = ref::rate_residue_series(c.E, c.a, c.eps);
        CHECK_THAT(closed, Catch::Matchers::WithinRel(c.want, 1e-14));
        CHECK_THAT(series, Catch::Matchers::WithinRel(c.want, 1e-13));
    }
    // Gapless limit: rate -> a / (4 pi^2).
    CHECK_THAT(ref::rate_closed_form(0.0, 2.0, 0.0),
               Catch::Matchers::WithinRel(2.0 / (4.0 * pi * pi), 1e-14));
    CHECK_THAT(ref::rate_residue_series(0.0, 2.0, 0.0),
               Catch::Matchers::WithinRel(2.0 / (4.0 * pi * pi), 1e-14));
}

TEST_CASE("vacuum closed forms match pinned references", "[oracle]") {
    // omega = 1, a = 2: q = e^{-pi/2}; omega = a: q = e^{-pi}.
    const double q_pi = ref::squeeze_parameter(1.0, 1.0);
    CHECK_THAT(q_pi, Catch::Matchers::WithinRel(0.043213918263772251, 1e-15));
    CHECK_THAT(ref::entanglement_entropy_closed(q_pi),
               Catch::Matchers::WithinRel(0.013624629924104223, 1e-13));
    CHECK_THAT(ref::mean_occupation_closed(1.0, 1.0),
               Catch::Matchers::WithinRel(0.0018709365986606446, 1e-13));
    const double C = std::sqrt(1.0 - q_pi * q_pi);
    CHECK_THAT(C, Catch::Matchers::WithinRel(0.99906584230884998, 1e-15));
    // Truncation diagnostics at small n are exactly computable.
    CHECK_THAT(ref::normalization_deficit(0.5, 3), Catch::Matchers::WithinRel(0.00390625, 1e-15));
    CHECK_THAT(ref::edge_residual_exact(0.5, 3),
               Catch::Matchers::WithinRel(std::sqrt(0.75) * 0.0625 * 2.0, 1e-14));
    CHECK_THAT(ref::edge_residual_bound(0.5, 3),
               Catch::Matchers::WithinRel(0.125 * 2.0, 1e-14));
}

TEST_CASE("mode normalization constant", "[oracle]") {
    CHECK_THAT(1.0 / std::sqrt(4.0 * pi), Catch::Matchers::WithinRel(0.28209479177387814, 1e-16));
}

TEST_CASE("thermalization margin example value", "[oracle]") {
    // t2/t1 = 10 against threshold e at t1*ebar1 = 1 gives margin 10/e.
    CHECK_THAT(10.0 / std::exp(1.0), Catch::Matchers::WithinRel(3.6787944117144233, 1e-16));
}
