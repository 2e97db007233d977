#include "orbavg/elements.hpp"

#include <cmath>

#include "orbavg/errors.hpp"

namespace orbavg {

OrbitGeometry OrbitGeometry::from_geometry(double a2, double e2, const MassParams& m) {
    if (a2 <= 0.0) throw DomainError("OrbitGeometry: a2 must be positive");
    if (e2 < 0.0 || e2 >= 1.0) throw DomainError("OrbitGeometry: e2 outside [0,1)");
    return {a2, e2, m.frak_m(2) * std::sqrt(m.frak_M(2) * a2)};
}

OrbitGeometry OrbitGeometry::from_actions(double lambda2, double gamma2, const MassParams& m) {
    if (lambda2 <= 0.0 || gamma2 <= 0.0 || gamma2 > lambda2)
        throw DomainError("OrbitGeometry: need 0 < Gamma2 <= Lambda2");
    double fm = m.frak_m(2), fM = m.frak_M(2);
    double a2 = lambda2 * lambda2 / (fM * fm * fm);
    double r = gamma2 / lambda2;
    return {a2, std::sqrt(std::max(0.0, 1.0 - r * r)), lambda2};
}

double solve_kepler(double e, double ell) {
    if (e < 0.0 || e >= 1.0) throw DomainError("solve_kepler: e outside [0,1)");
    if (!std::isfinite(ell)) throw DomainError("solve_kepler: ell not finite");
    // reduce to [-pi, pi], remember the branch
    double branch = kTwoPi * std::round(ell / kTwoPi);
    double l = ell - branch;

    double z = l + e * std::sin(l);
    bool converged = false;
    for (int it = 0; it < 50; ++it) {
        double f = z - e * std::sin(z) - l;
        if (std::fabs(f) < 1e-14) { converged = true; break; }
        z -= f / (1.0 - e * std::cos(z));
    }
    if (!converged || std::fabs(z - e * std::sin(z) - l) >= 1e-13) {
        // bisection on [l - e, l + e] (monotone: d/dz = 1 - e cos z > 0)
        double lo = l - e, hi = l + e;
        for (int it = 0; it < 200; ++it) {
            z = 0.5 * (lo + hi);
            if (z - e * std::sin(z) < l) lo = z; else hi = z;
        }
        z = 0.5 * (lo + hi);
    }
    return z + branch;
}

Anomalies anomalies(double e, double zeta) {
    if (e < 0.0 || e >= 1.0) throw DomainError("anomalies: e outside [0,1)");
    double rho = 1.0 - e * std::cos(zeta);
    double nu = std::atan2(std::sqrt(1.0 - e * e) * std::sin(zeta), std::cos(zeta) - e);
    // keep nu on the branch of zeta
    nu += kTwoPi * std::round((zeta - nu) / kTwoPi);
    return {nu, rho};
}

Mat3 rot1(double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.a = {1, 0, 0,
           0, c, -s,
           0, s, c};
    return r;
}

Mat3 rot3(double angle) {
    double c = std::cos(angle), s = std::sin(angle);
    Mat3 r;
    r.a = {c, -s, 0,
           s, c, 0,
           0, 0, 1};
    return r;
}

}  // namespace orbavg
