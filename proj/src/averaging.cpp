#include "orbavg/averaging.hpp"

#include <cmath>

#include "orbavg/errors.hpp"
#include "orbavg/legendre.hpp"

namespace orbavg {

namespace {

// Guard on the squared denominator of an average; orbits past crossing make the
// integral meaningless.
void check_min_den2(double min_den2, double a2) {
    if (min_den2 < 1e-20 * a2 * a2)
        throw CollisionError("average: denominator vanishes on the quadrature grid");
}

// (1/2pi) int rho dzeta / sqrt(r1^2 + 2 r1 a2 rho cross cos(g + nu) + a2^2 rho^2)
double belline_average(double r1, double a2, double e2, double cross_factor, double g,
                       int nodes) {
    if (nodes < 64) throw DomainError("average: nodes must be >= 64");
    double acc = 0.0, min_den2 = 1e300;
    for (int k = 0; k < nodes; ++k) {
        double zeta = kTwoPi * k / nodes;
        auto [nu, rho] = anomalies(e2, zeta);
        double den2 = r1 * r1 + 2.0 * r1 * a2 * rho * cross_factor * std::cos(g + nu)
                    + a2 * a2 * rho * rho;
        min_den2 = std::min(min_den2, den2);
        acc += rho / std::sqrt(den2);
    }
    check_min_den2(min_den2, a2);
    return acc / nodes;
}

}  // namespace

void ReducedSecularPoint::validate() const {
    if (!(gamma2_action > 0.0) || std::fabs(theta) > gamma2_action || gamma2_action > lambda2)
        throw DomainError("ReducedSecularPoint: need 0 < |Theta| <= Gamma2 <= Lambda2");
    if (r1 < 0.0 || r1 >= a2()) throw DomainError("ReducedSecularPoint: need 0 <= r1 < a2");
}

double outer_average(const ReducedSecularPoint& p, int nodes) {
    p.validate();
    double a2 = p.a2();
    double ratio = p.gamma2_action / p.lambda2;
    double e2 = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    double tr = p.theta / p.gamma2_action;
    double s = std::sqrt(std::max(0.0, 1.0 - tr * tr));
    return belline_average(p.r1, a2, e2, s, p.gamma2, nodes);
}

double dual_average(const DualPoint& p, int nodes) {
    if (!(p.g2_action > 0.0) || p.g2_action > p.lambda2)
        throw DomainError("DualPoint: need 0 < G2 <= Lambda2");
    double a2 = p.a2();
    double ratio = p.g2_action / p.lambda2;
    double e2 = std::sqrt(std::max(0.0, 1.0 - ratio * ratio));
    return belline_average(p.r1, a2, e2, std::sin(p.iota), p.g2, nodes);
}

double mixed_average(double r1, const Vec3& n1, const OrbitGeometry& orbit,
                     int nodes_inner, int nodes_outer) {
    if (norm(n1) == 0.0) throw DomainError("mixed_average: n1 must be nonzero");
    if (r1 < 0.0 || r1 >= orbit.a2 * (1.0 - orbit.e2))
        throw DomainError("mixed_average: need 0 <= r1 < a2 (1 - e2)");
    Vec3 nhat = unit(n1);
    double acc = 0.0, min_den2 = 1e300;
    for (int k = 0; k < nodes_outer; ++k) {
        double zeta = kTwoPi * k / nodes_outer;
        auto [nu, rho] = anomalies(orbit.e2, zeta);
        Vec3 x2 = orbit.a2 * rho * Vec3{std::cos(nu), std::sin(nu), 0.0};
        Vec3 node = cross(x2, nhat);
        double nn = norm(node);
        double inner;
        if (nn < 1e-13 * norm(x2)) {
            // x2 parallel to n1: x1 . x2 = 0, the inner integrand is constant
            inner = 1.0 / std::sqrt(r1 * r1 + norm2(x2));
            min_den2 = std::min(min_den2, r1 * r1 + norm2(x2));
        } else {
            Vec3 u = node / nn;
            Vec3 w = cross(nhat, u);
            double sum = 0.0;
            for (int j = 0; j < nodes_inner; ++j) {
                double phi1 = kTwoPi * j / nodes_inner;
                Vec3 x1 = r1 * (std::cos(phi1) * u + std::sin(phi1) * w);
                double den2 = norm2(x1 - x2);
                min_den2 = std::min(min_den2, den2);
                sum += 1.0 / std::sqrt(den2);
            }
            inner = sum / nodes_inner;
        }
        acc += rho * inner;
    }
    check_min_den2(min_den2, orbit.a2);
    return acc / nodes_outer;
}

PowerSeries epsilon_project(const PowerSeries& s) {
    PowerSeries out;
    out.a.assign(s.a.size(), 0.0);
    for (int n = 0; n < static_cast<int>(s.a.size()); n += 2)
        out.a[n] = legendre_delta(n) * s.a[n];
    return out;
}

PowerSeries bridge_coefficients(const Vec3& n1, const OrbitGeometry& orbit,
                                int order, int nodes) {
    if (norm(n1) == 0.0) throw DomainError("bridge_coefficients: n1 must be nonzero");
    Vec3 nhat = unit(n1);
    PowerSeries s;
    s.a.assign(order + 1, 0.0);
    for (int k = 0; k < nodes; ++k) {
        double zeta = kTwoPi * k / nodes;
        auto [nu, rho] = anomalies(orbit.e2, zeta);
        double t = nhat.x * std::cos(nu) + nhat.y * std::sin(nu);  // n1 . unit(x2)
        std::vector<double> pn = legendre_all(order, t);
        double rp = 1.0;  // rho^{-n}
        for (int n = 0; n <= order; ++n) {
            s.a[n] += rp * pn[n];
            rp /= rho;
        }
    }
    for (double& v : s.a) v /= nodes;
    return s;
}

double bridge_average(double r1, const Vec3& n1, const OrbitGeometry& orbit,
                      int series_order, int nodes) {
    double eps = r1 / orbit.a2;
    if (eps >= 1.0 - orbit.e2)
        throw ConvergenceError("bridge_average: eps beyond the convergence radius 1 - e2",
                               1.0);
    PowerSeries proj = epsilon_project(bridge_coefficients(n1, orbit, series_order, nodes));
    // tail estimate: geometric with ratio eps/(1-e2)
    double q = eps / (1.0 - orbit.e2);
    int last = series_order - (series_order % 2);
    double tail = std::fabs(proj.a[last]) * std::pow(eps, last) * q * q / (1.0 - q * q);
    if (tail > 1e-10)
        throw ConvergenceError("bridge_average: truncation residual too large", tail);
    return proj.eval(eps) / orbit.a2;
}

Phi1Average phi1_average_defect(double r1, const Vec3& n1, const Vec3& x2,
                                int nodes, int series_order) {
    double r2 = norm(x2);
    if (r2 == 0.0) throw DomainError("phi1_average_defect: x2 must be nonzero");
    if (r1 < 0.0 || r1 >= r2) throw DomainError("phi1_average_defect: need 0 <= r1 < r2");
    Vec3 nhat = unit(n1);

    double lhs;
    Vec3 node = cross(x2, nhat);
    double nn = norm(node);
    if (nn < 1e-13 * r2) {
        lhs = 1.0 / std::sqrt(r1 * r1 + r2 * r2);
    } else {
        Vec3 u = node / nn;
        Vec3 w = cross(nhat, u);
        double acc = 0.0;
        for (int j = 0; j < nodes; ++j) {
            double phi1 = kTwoPi * j / nodes;
            Vec3 x1 = r1 * (std::cos(phi1) * u + std::sin(phi1) * w);
            acc += 1.0 / norm(x1 - x2);
        }
        lhs = acc / nodes;
    }

    double t = dot(x2, nhat) / r2;
    double eps = r1 / r2;
    double rhs = 0.0, term = 0.0;
    std::vector<double> pn = legendre_all(series_order, t);
    for (int n = 0; n <= series_order; n += 2) {
        term = legendre_delta(n) * pn[n] * std::pow(eps, n);
        rhs += term;
    }
    double tail = std::fabs(eps) < 1.0 ? std::fabs(term) * eps * eps / (1.0 - eps * eps) : 1e300;
    if (tail > 1e-12 && std::fabs(term) > 1e-15 * std::fabs(rhs))
        throw ConvergenceError("phi1_average_defect: series truncation residual too large", tail);
    rhs /= r2;
    return {lhs, rhs, std::fabs(lhs - rhs)};
}

}  // namespace orbavg
