#include "doctest.h"
#include "orbavg/elements.hpp"
#include "orbavg/errors.hpp"

#include <cmath>
#include <random>

using namespace orbavg;

TEST_CASE("solve_kepler basics") {
    CHECK(solve_kepler(0.0, 1.234) == doctest::Approx(1.234).epsilon(1e-15));
    CHECK(solve_kepler(0.5, M_PI) == doctest::Approx(M_PI).epsilon(1e-15));
    // frozen bisection oracle for zeta - 0.1 sin zeta = 0.5
    CHECK(solve_kepler(0.1, 0.5) == doctest::Approx(0.55247998690657035).epsilon(1e-13));
    CHECK_THROWS_AS(solve_kepler(1.0, 0.3), DomainError);
    CHECK_THROWS_AS(solve_kepler(-0.1, 0.3), DomainError);
}

TEST_CASE("solve_kepler closes the loop over (e, ell)") {
    for (double e = 0.0; e <= 0.951; e += 0.05) {
        for (int k = 0; k < 32; ++k) {
            double ell = kTwoPi * k / 32.0;
            double z = solve_kepler(e, ell);
            CHECK(std::fabs(z - e * std::sin(z) - ell) < 1e-13);
        }
    }
    // branch preservation
    double z = solve_kepler(0.3, 0.5 + 4.0 * kTwoPi);
    CHECK(std::fabs(z - solve_kepler(0.3, 0.5) - 4.0 * kTwoPi) < 1e-12);
}

TEST_CASE("anomalies") {
    auto [nu0, rho0] = anomalies(0.0, 0.7);
    CHECK(nu0 == doctest::Approx(0.7).epsilon(1e-15));
    CHECK(rho0 == doctest::Approx(1.0).epsilon(1e-15));

    auto [nu1, rho1] = anomalies(0.3, 0.0);
    CHECK(nu1 == doctest::Approx(0.0));
    CHECK(rho1 == doctest::Approx(0.7));

    auto [nu2, rho2] = anomalies(0.3, M_PI / 2.0);
    CHECK(rho2 == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(nu2 == doctest::Approx(1.8754889808102941).epsilon(1e-14));

    CHECK_THROWS_AS(anomalies(1.2, 0.1), DomainError);
}

TEST_CASE("anomalies ellipse identity on a grid") {
    for (int i = 0; i < 100; ++i) {
        double e = 0.95 * i / 99.0;
        for (int j = 0; j < 100; ++j) {
            double zeta = kTwoPi * j / 100.0;
            auto [nu, rho] = anomalies(e, zeta);
            double cx = rho * std::cos(nu) + e;          // = cos zeta
            double sy = rho * std::sin(nu);              // = sqrt(1-e^2) sin zeta
            double id = cx * cx + sy * sy / (1.0 - e * e);
            CHECK(std::fabs(id - 1.0) < 1e-13);
            CHECK(rho > 0.0);
        }
    }
}

TEST_CASE("rotation matrices") {
    Mat3 r = rot3(0.0);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) CHECK(r(i, j) == doctest::Approx(i == j ? 1.0 : 0.0));

    Vec3 e2 = rot1(M_PI / 2.0) * Vec3{0, 1, 0};
    CHECK(e2.x == doctest::Approx(0.0));
    CHECK(e2.y == doctest::Approx(0.0));
    CHECK(e2.z == doctest::Approx(1.0));

    Vec3 e1 = rot3(M_PI / 2.0) * Vec3{1, 0, 0};
    CHECK(e1.x == doctest::Approx(0.0));
    CHECK(e1.y == doctest::Approx(1.0));
    CHECK(e1.z == doctest::Approx(0.0));

    std::mt19937_64 rng(12345);
    for (int k = 0; k < 50; ++k) {
        double a = kTwoPi * (rng() >> 11) * 0x1.0p-53;
        for (const Mat3& m : {rot1(a), rot3(a)}) {
            CHECK(orthogonality_defect(m) < 1e-14);
            CHECK(det(m) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("mass bookkeeping") {
    MassParams m{1.0, 1e-3, 2e-3, 1.0};
    CHECK(m.frak_M(1) == doctest::Approx(1.001));
    CHECK(m.frak_M(2) == doctest::Approx(1.002));
    CHECK(m.frak_m(1) == doctest::Approx(1e-3 / 1.001));
    CHECK(m.frak_m(2) == doctest::Approx(2e-3 / 1.002));

    MassParams n = MassParams::normalized();
    CHECK(n.frak_m(1) == 1.0);
    CHECK(n.frak_m(2) == 1.0);
    CHECK(n.frak_M(1) == 1.0);
    CHECK(n.frak_M(2) == 1.0);

    OrbitGeometry o = OrbitGeometry::from_actions(1.2, 0.9, n);
    CHECK(o.a2 == doctest::Approx(1.44));
    CHECK(o.g2() == doctest::Approx(0.9));
    OrbitGeometry o2 = OrbitGeometry::from_geometry(o.a2, o.e2, n);
    CHECK(o2.lambda2 == doctest::Approx(1.2));
    CHECK_THROWS_AS(OrbitGeometry::from_geometry(-1.0, 0.1, n), DomainError);
}
