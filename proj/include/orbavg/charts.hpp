#pragma once

#include <array>

#include "orbavg/elements.hpp"
#include "orbavg/vec.hpp"

namespace orbavg {

/// Heliocentric impulses and positions of the two planets.
struct CartesianPair {
    Vec3 y1, y2, x1, x2;
};

/// Two-centre style state: (y0, x0) auxiliary pair, (y, x) moving particle.
struct PCartesian {
    Vec3 y0, x0, y, x;
};

/// The outer Kepler chart. Conjugate pairs:
/// (Lambda2, ell2), (Z, z), (G, g), (R1, r1), (Gamma2, gamma2), (Theta, theta_node).
struct KPoint {
    double lambda2, ell2;
    double Z, z;
    double G, g;
    double R1, r1;
    double gamma2_action, gamma2;  // (Gamma2, gamma2)
    double theta_action, theta_node;  // (Theta, vartheta)

    std::array<double, 12> as_array() const {
        return {lambda2, Z, G, R1, gamma2_action, theta_action,
                ell2, z, g, r1, gamma2, theta_node};
    }
    static KPoint from_array(const std::array<double, 12>& v) {
        return {v[0], v[6], v[1], v[7], v[2], v[8], v[3], v[9], v[4], v[10], v[5], v[11]};
    }
};

/// Angular-momentum reducing chart of the two-centre problem. Conjugate pairs:
/// (Z, z), (G, g), (Theta, theta_node), (R0, r0), (R, r), (Phi, phi).
struct PPoint {
    double Z, z;
    double G, g;
    double theta_action, theta_node;
    double R0, r0;
    double R, r;
    double Phi, phi;

    std::array<double, 12> as_array() const {
        return {Z, G, theta_action, R0, R, Phi, z, g, theta_node, r0, r, phi};
    }
    static PPoint from_array(const std::array<double, 12>& v) {
        return {v[0], v[6], v[1], v[7], v[2], v[8], v[3], v[9], v[4], v[10], v[5], v[11]};
    }
};

struct LiouvillePoint {
    double p_lambda, lambda;
    double p_mu, mu;
    double theta_action;
    double r0;
};

/// Chart -> Cartesian. The outer leg is Keplerian with action Lambda2 (two-body
/// energy -frak_m2^3 frak_M2^2 / (2 Lambda2^2)); the inner body is carried by
/// the (R1, r1) radial pair and the angular structure.
CartesianPair k_forward(const KPoint& p, const MassParams& m);

/// Cartesian -> chart. Requires a negative-energy outer state, e2 > 0 and
/// nonvanishing nodes.
KPoint k_inverse(const CartesianPair& c, const MassParams& m);

PCartesian p_forward(const PPoint& p);
PPoint p_inverse(const PCartesian& c);

/// Confocal (lambda, mu) coordinates and their conjugate momenta from a PPoint.
LiouvillePoint liouville_from_p(const PPoint& p);

/// Max-norm of J^T Omega J - Omega, with J the central finite-difference
/// Jacobian of the forward map in canonical (actions, angles) ordering.
double symplectic_defect_k(const KPoint& p, const MassParams& m, double h_fd);
double symplectic_defect_p(const PPoint& p, double h_fd);
double symplectic_defect_identity(double h_fd);

}  // namespace orbavg
