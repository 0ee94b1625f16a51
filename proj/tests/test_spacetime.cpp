// Tests for event classification and the Minkowski / quadrant / null chart
// maps, including exact boundary handling and round-trips in both directions.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <stdexcept>

#include "conevac/spacetime.hpp"

using namespace conevac;

TEST_CASE("classification covers all regions and the boundary", "[spacetime]") {
    CHECK(classify({2.0, 0.5}) == Region::F);
    CHECK(classify({-2.0, 0.5}) == Region::P);
    CHECK(classify({0.5, 2.0}) == Region::R);
    CHECK(classify({0.5, -2.0}) == Region::L);
    // |t| == |z| is the light cone, including the origin; it is a value, not
    // an error.
    CHECK(classify({0.0, 0.0}) == Region::Boundary);
    CHECK(classify({1.0, 1.0}) == Region::Boundary);
    CHECK(classify({1.0, -1.0}) == Region::Boundary);
    CHECK(classify({-3.5, 3.5}) == Region::Boundary);
    CHECK(to_string(Region::Boundary) == std::string("boundary"));
    CHECK(to_string(Quadrant::F) == std::string("F"));
}

TEST_CASE("chart maps hit the textbook anchor points", "[spacetime]") {
    const double a = 1.0;
    // Future cone, origin of the chart: (t, z) = (1/a, 0).
    const SpacetimeEvent f0 = from_quadrant({Quadrant::F, 0.0, 0.0, a});
    CHECK_THAT(f0.t, Catch::Matchers::WithinAbs(1.0, 1e-15));
    CHECK_THAT(f0.z, Catch::Matchers::WithinAbs(0.0, 1e-15));
    // Past cone mirrors it.
    const SpacetimeEvent p0 = from_quadrant({Quadrant::P, 0.0, 0.0, a});
    CHECK_THAT(p0.t, Catch::Matchers::WithinAbs(-1.0, 1e-15));
    // Right wedge chart origin: (t, z) = (0, 1/a); the radial direction is
    // set by the spatial coordinate.
    const SpacetimeEvent r0 = from_quadrant({Quadrant::R, 0.0, 0.0, a});
    CHECK_THAT(r0.t, Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK_THAT(r0.z, Catch::Matchers::WithinAbs(1.0, 1e-15));
    const SpacetimeEvent l0 = from_quadrant({Quadrant::L, 0.0, 0.0, a});
    CHECK_THAT(l0.z, Catch::Matchers::WithinAbs(-1.0, 1e-15));
    // Nonzero wedge time tilts the wedge point along t.
    const double a2 = 0.7, tau = 0.4, eps = -0.3;
    const SpacetimeEvent r1 = from_quadrant({Quadrant::R, tau, eps, a2});
    CHECK_THAT(r1.t, Catch::Matchers::WithinRel(std::exp(a2 * eps) * std::sinh(a2 * tau) / a2,
                                                1e-14));
    CHECK_THAT(r1.z, Catch::Matchers::WithinRel(std::exp(a2 * eps) * std::cosh(a2 * tau) / a2,
                                                1e-14));
    // Future cone with nonzero coordinates.
    const SpacetimeEvent f1 = from_quadrant({Quadrant::F, 0.25, -0.5, a2});
    CHECK_THAT(f1.t, Catch::Matchers::WithinRel(std::exp(a2 * 0.25) * std::cosh(a2 * 0.5) / a2,
                                                1e-14));
    CHECK_THAT(f1.z, Catch::Matchers::WithinRel(-std::exp(a2 * 0.25) * std::sinh(a2 * 0.5) / a2,
                                                1e-14));
}

TEST_CASE("round-trips are tight in both directions", "[spacetime]") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.3, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const double a = scale(rng);
        for (Quadrant q : {Quadrant::F, Quadrant::P, Quadrant::R, Quadrant::L}) {
            const double ut = coord(rng), us = coord(rng);
            const SpacetimeEvent ev = from_quadrant({q, ut, us, a});
            const QuadrantCoord back = to_quadrant(ev, a);
            REQUIRE(back.quadrant == q);
            // The event stores rounded Minkowski doubles, and near the cone
            // forming t +- z from them loses relative precision like
            // e^{2 a |boost|}, where the boost angle is u_space in the cones
            // and u_time in the wedges; that conditioning is intrinsic to the
            // representation, so the bound scales with it.
            const bool cone = (q == Quadrant::F || q == Quadrant::P);
            const double boost = cone ? us : ut;
            const double tol = 2e-13 + 1e-14 * std::exp(2.0 * a * std::abs(boost)) / a;
            CHECK_THAT(back.u_time, Catch::Matchers::WithinAbs(ut, tol));
            CHECK_THAT(back.u_space, Catch::Matchers::WithinAbs(us, tol));
        }
    }
    // And the Minkowski-first direction.
    std::uniform_real_distribution<double> mink(-5.0, 5.0);
    for (int i = 0; i < 2000; ++i) {
        const double t = mink(rng), z = mink(rng), a = scale(rng);
        if (classify({t, z}) == Region::Boundary) continue;
        const QuadrantCoord qc = to_quadrant({t, z}, a);
        const SpacetimeEvent back = from_quadrant(qc);
        CHECK_THAT(back.t, Catch::Matchers::WithinAbs(t, 1e-12));
        CHECK_THAT(back.z, Catch::Matchers::WithinAbs(z, 1e-12));
    }
}

TEST_CASE("null coordinates obey the per-quadrant sign table", "[spacetime]") {
    const double a = 1.0;
    // F: V > 0, U > 0; P: both negative; R: V > 0, U < 0; L: V < 0, U > 0.
    const NullCoord f = to_null(from_quadrant({Quadrant::F, 0.3, -0.2, a}), a);
    CHECK(f.V > 0.0);
    CHECK(f.U > 0.0);
    const NullCoord p = to_null(from_quadrant({Quadrant::P, 0.3, -0.2, a}), a);
    CHECK(p.V < 0.0);
    CHECK(p.U < 0.0);
    const NullCoord r = to_null(from_quadrant({Quadrant::R, 0.3, -0.2, a}), a);
    CHECK(r.V > 0.0);
    CHECK(r.U < 0.0);
    const NullCoord l = to_null(from_quadrant({Quadrant::L, 0.3, -0.2, a}), a);
    CHECK(l.V < 0.0);
    CHECK(l.U > 0.0);

    // V = t + z and U = t - z always.
    for (const NullCoord& n : {f, p, r, l}) {
        const SpacetimeEvent ev = from_quadrant(to_quadrant({0.5 * (n.V + n.U),
                                                             0.5 * (n.V - n.U)},
                                                            a));
        CHECK_THAT(ev.t + ev.z, Catch::Matchers::WithinAbs(n.V, 1e-13));
        CHECK_THAT(ev.t - ev.z, Catch::Matchers::WithinAbs(n.U, 1e-13));
    }
}

TEST_CASE("local null coordinates invert the exponential maps", "[spacetime]") {
    const double a = 1.4;
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> coord(-1.5, 1.5);
    for (int i = 0; i < 500; ++i) {
        for (Quadrant q : {Quadrant::F, Quadrant::P, Quadrant::R, Quadrant::L}) {
            const double ut = coord(rng), us = coord(rng);
            const NullCoord n = to_null(from_quadrant({q, ut, us, a}), a);
            // Reconstruct the chart coordinates from the local null pair.
            double t_back = 0.0, s_back = 0.0;
            switch (q) {
                case Quadrant::F:
                    t_back = 0.5 * (n.v_local + n.u_local);
                    s_back = 0.5 * (n.v_local - n.u_local);
                    break;
                case Quadrant::P:
                    t_back = -0.5 * (n.v_local + n.u_local);
                    s_back = 0.5 * (n.u_local - n.v_local);
                    break;
                case Quadrant::R:
                    t_back = 0.5 * (n.v_local + n.u_local);
                    s_back = 0.5 * (n.v_local - n.u_local);
                    break;
                case Quadrant::L:
                    t_back = -0.5 * (n.v_local + n.u_local);
                    s_back = 0.5 * (n.u_local - n.v_local);
                    break;
            }
            CAPTURE(to_string(q), ut, us);
            CHECK_THAT(t_back, Catch::Matchers::WithinAbs(ut, 1e-12));
            CHECK_THAT(s_back, Catch::Matchers::WithinAbs(us, 1e-12));
            // And V regenerates from the V-like local coordinate.
            CHECK_THAT(null_map(q, n.v_local, a, NullBranch::VLike),
                       Catch::Matchers::WithinRel(n.V, 1e-13));
            CHECK_THAT(null_map(q, n.u_local, a, NullBranch::ULike),
                       Catch::Matchers::WithinRel(n.U, 1e-13));
        }
    }
}

TEST_CASE("future cone and right wedge share the V-like map for V > 0", "[spacetime]") {
    // For V > 0 the F-cone coordinate nu(V) and the R-wedge coordinate chi(V)
    // are the same function; the difference must be exactly zero because the
    // evaluation path is identical code.
    const double a = 0.9;
    for (double V : {1e-6, 0.001, 0.5, 1.0, 42.0, 1e9}) {
        const double nu = local_null_from_V(Quadrant::F, V, a);
        const double chi = local_null_from_V(Quadrant::R, V, a);
        CHECK(nu == chi);
    }
    // Likewise P and L share the V < 0 branch.
    for (double V : {-1e-6, -0.25, -7.0}) {
        CHECK(local_null_from_V(Quadrant::P, V, a) == local_null_from_V(Quadrant::L, V, a));
    }
}

TEST_CASE("boundary and domain errors", "[spacetime]") {
    CHECK_THROWS_AS(to_null({1.0, 1.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(to_quadrant({0.0, 0.0}, 1.0), std::domain_error);
    CHECK_THROWS_AS(to_quadrant({2.0, 1.0}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(to_quadrant({2.0, 1.0}, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(from_quadrant({Quadrant::F, 0.0, 0.0, 0.0}), std::invalid_argument);
    // Wrong-sign V for a cone's V-like map is a domain error.
    CHECK_THROWS_AS(local_null_from_V(Quadrant::F, -1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(local_null_from_V(Quadrant::P, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(local_null_from_V(Quadrant::F, 0.0, 1.0), std::domain_error);
}
