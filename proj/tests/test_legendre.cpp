#include "doctest.h"
#include "orbavg/errors.hpp"
#include "orbavg/legendre.hpp"

#include <cmath>
#include <vector>

using namespace orbavg;

TEST_CASE("legendre_eval basics") {
    for (double t : {-1.0, -0.3, 0.0, 0.8, 1.0}) CHECK(legendre_eval(0, t) == 1.0);
    CHECK(legendre_eval(3, 1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(legendre_eval(2, 0.0) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(legendre_eval(4, 0.0) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK_THROWS_AS(legendre_eval(2, 1.5), DomainError);
    CHECK_THROWS_AS(legendre_eval(-1, 0.5), DomainError);
    // |P_n| <= 1 on [-1, 1]
    for (int n = 0; n <= 30; ++n)
        for (int k = 0; k <= 40; ++k) {
            double t = -1.0 + 2.0 * k / 40.0;
            CHECK(std::fabs(legendre_eval(n, t)) <= 1.0 + 1e-14);
        }
}

TEST_CASE("generating function partial sums") {
    // sum P_n(t) eps^n -> 1/sqrt(1 - 2 eps t + eps^2), geometric error ratio ~ eps
    for (double eps : {0.1, 0.3}) {
        for (double t : {-0.7, 0.2, 0.9}) {
            double target = 1.0 / std::sqrt(1.0 - 2.0 * eps * t + eps * eps);
            double sum = 0.0;
            double prev_err = 0.0;
            for (int n = 0; n <= 40; ++n) {
                sum += legendre_eval(n, t) * std::pow(eps, n);
                double err = std::fabs(sum - target);
                if (n == 20) prev_err = err;
                if (n == 30) {
                    // ten more terms shrink the error by about eps^10
                    double expected = prev_err * std::pow(eps, 10);
                    CHECK(err < 100.0 * expected + 1e-15);
                }
            }
            CHECK(std::fabs(sum - target) < 1e-12);
        }
    }
}

TEST_CASE("delta sequence") {
    CHECK(legendre_delta(0) == 1.0);
    CHECK(legendre_delta(1) == 0.0);
    CHECK(legendre_delta(2) == doctest::Approx(-0.5));
    CHECK(legendre_delta(4) == doctest::Approx(3.0 / 8.0));
    CHECK(legendre_delta(7) == 0.0);
    LegendreTable tab(10);
    CHECK(tab.delta[6] == doctest::Approx(-5.0 / 16.0));
    for (int n = 0; n <= 10; ++n) CHECK(tab.eval(n, 1.0) == doctest::Approx(1.0));
}

TEST_CASE("averaging identity") {
    // odd degrees vanish
    for (double t : {0.0, 0.5, -0.8}) {
        auto r = averaging_identity_defect(3, t, 64);
        CHECK(std::fabs(r.lhs) < 1e-12);
        CHECK(r.rhs == 0.0);
    }
    auto r2 = averaging_identity_defect(2, 1.0, 64);
    CHECK(r2.rhs == doctest::Approx(-0.5));
    CHECK(r2.defect < 1e-13);
    auto r4 = averaging_identity_defect(4, 0.0, 64);
    CHECK(r4.rhs == doctest::Approx(9.0 / 64.0));
    CHECK(r4.defect < 1e-13);
    // full sweep per the stated property
    for (int n = 0; n <= 30; ++n)
        for (double t : {0.0, 0.25, -0.25, 0.5, -0.5, 0.75, -0.75, 1.0, -1.0})
            CHECK(averaging_identity_defect(n, t, 8 * (n + 1)).defect < 1e-10);
}

TEST_CASE("even derivatives closed forms") {
    CHECK(even_derivative(1, 0, EvalPoint::Zero) == doctest::Approx(-0.5));
    CHECK(even_derivative(1, 1, EvalPoint::Zero) == doctest::Approx(1.5));
    CHECK(even_derivative(2, 0, EvalPoint::One) == doctest::Approx(1.0));
    CHECK_THROWS_AS(even_derivative(1, 2, EvalPoint::Zero), DomainError);

    // P_2m(sqrt(tau)) is a degree-m polynomial in tau, so divided differences
    // through m+1 samples reconstruct it exactly; differentiate the
    // reconstruction analytically.
    auto p_of_tau = [](int m, double tau) { return legendre_eval(2 * m, std::sqrt(tau)); };
    for (int m = 1; m <= 6; ++m) {
        std::vector<double> node(m + 1), dd(m + 1);
        for (int j = 0; j <= m; ++j) {
            node[j] = static_cast<double>(j) / m;
            dd[j] = p_of_tau(m, node[j]);
        }
        for (int lvl = 1; lvl <= m; ++lvl)
            for (int j = m; j >= lvl; --j)
                dd[j] = (dd[j] - dd[j - 1]) / (node[j] - node[j - lvl]);
        // expand Newton form into monomial coefficients
        std::vector<double> mono(m + 1, 0.0);
        for (int j = m; j >= 0; --j) {
            for (int q = m; q >= 1; --q) mono[q] = mono[q - 1] - node[j] * mono[q];
            mono[0] = dd[j] - node[j] * mono[0];
        }
        for (int h = 0; h <= m; ++h)
            for (EvalPoint at : {EvalPoint::Zero, EvalPoint::One}) {
                double tau0 = (at == EvalPoint::Zero) ? 0.0 : 1.0;
                double fd = 0.0;
                for (int q = h; q <= m; ++q) {
                    double fall = 1.0;
                    for (int i = 0; i < h; ++i) fall *= (q - i);
                    fd += mono[q] * fall * std::pow(tau0, q - h);
                }
                double exact = even_derivative(m, h, at);
                CHECK(std::fabs(fd - exact) <= 1e-6 * std::max(1.0, std::fabs(exact)));
            }
    }
}

TEST_CASE("duality relation between the endpoint derivatives") {
    for (int m = 0; m <= 8; ++m)
        for (int h = 0; h <= m; ++h) {
            double lhs = ((h % 2) ? -1.0 : 1.0) * double_factorial(2 * h - 1)
                       / double_factorial(2 * h) * even_derivative(m, h, EvalPoint::Zero);
            double rhs = ((m % 2) ? -1.0 : 1.0) * double_factorial(2 * m - 1)
                       / double_factorial(2 * m) * even_derivative(m, h, EvalPoint::One);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
        }
}

TEST_CASE("twin coefficient recursions") {
    CoeffRecursion cb = cbar_table(12);
    CoeffRecursion ch = chat_table(12);
    CHECK(cb.at(0, 0) == 1.0);
    CHECK(cb.at(1, 0) == 0.0);
    CHECK(cb.at(1, 1) == -1.0);
    CHECK(cb.at(5, 9) == 0.0);  // out of range
    for (int h = 0; h <= 12; ++h)
        for (int j = 0; j <= h; ++j) {
            double a = cb.at(h, j), b = ch.at(h, j);
            CHECK(std::fabs(a - b) <= 1e-12 * std::max(1.0, std::fabs(a)));
        }
}

TEST_CASE("derivatives through the coefficient table") {
    CoeffRecursion cb = cbar_table(6);
    // P_2(sqrt(1-2z)) = 1 - 3z
    CHECK(derivative_via_table(cb, 1, 1) == doctest::Approx(-3.0));
    // cross-check against the Dh closed form for a few (m, h)
    auto dh_closed = [](int m, int h) {
        double v = 1.0 / double_factorial(2 * h);
        for (int q = 2 * m - 2 * h + 2; q <= 2 * m; q += 2) v *= q;
        for (int q = 2 * m + 1; q <= 2 * m + 2 * h - 1; q += 2) v *= q;
        return (h % 2) ? -v : v;
    };
    for (int m = 1; m <= 5; ++m)
        for (int h = 0; h <= std::min(m, 6); ++h)
            CHECK(derivative_via_table(cb, m, h)
                  == doctest::Approx(dh_closed(m, h)).epsilon(1e-12));
}
