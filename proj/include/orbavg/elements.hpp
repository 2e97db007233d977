#pragma once

#include "orbavg/vec.hpp"

namespace orbavg {

/// Masses of the planetary problem. The reduced quantities frak_m_i, frak_M_i
/// are always recomputed from (m0, mi, mu).
struct MassParams {
    double m0 = 1.0;
    double m1 = 1.0;
    double m2 = 1.0;
    double mu = 0.0;

    double frak_m(int i) const {
        double mi = (i == 1) ? m1 : m2;
        return m0 * mi / (m0 + mu * mi);
    }
    double frak_M(int i) const {
        double mi = (i == 1) ? m1 : m2;
        return m0 + mu * mi;
    }

    // frak_m_i = frak_M_i = 1 exactly; mass-transparent formulas, a2 = Lambda2^2.
    static MassParams normalized() { return MassParams{1.0, 1.0, 1.0, 0.0}; }

    // m0 = 1, m1 = m2 = 1e-3, mu = 1.
    static MassParams planetary_defaults() { return MassParams{1.0, 1e-3, 1e-3, 1.0}; }
};

/// Outer-body ellipse. Stores (a2, e2) and the action Lambda2 = frak_m2 sqrt(frak_M2 a2);
/// G2 (= Gamma2) follows from e2 = sqrt(1 - G2^2/Lambda2^2).
struct OrbitGeometry {
    double a2 = 1.0;
    double e2 = 0.0;
    double lambda2 = 1.0;

    double g2() const { return lambda2 * std::sqrt(1.0 - e2 * e2); }

    static OrbitGeometry from_geometry(double a2, double e2, const MassParams& m);
    static OrbitGeometry from_actions(double lambda2, double gamma2, const MassParams& m);
};

/// Invert ell = zeta - e sin(zeta). Newton seeded with zeta0 = ell + e sin(ell),
/// bisection fallback. Result stays on the 2pi-branch of ell.
double solve_kepler(double e, double ell);

struct Anomalies {
    double nu;   // true anomaly
    double rho;  // |x|/a = 1 - e cos(zeta)
};

/// True anomaly and normalized radius from the eccentric anomaly:
/// rho cos(nu) = cos(zeta) - e, rho sin(nu) = sqrt(1-e^2) sin(zeta).
Anomalies anomalies(double e, double zeta);

Mat3 rot1(double angle);
Mat3 rot3(double angle);

}  // namespace orbavg
