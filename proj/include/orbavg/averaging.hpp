#pragma once

#include <vector>

#include "orbavg/elements.hpp"
#include "orbavg/vec.hpp"

namespace orbavg {

/// The reduced point (r1, Lambda2, Theta, Gamma2, gamma2) carrying h1 and calG.
struct ReducedSecularPoint {
    double r1;
    double lambda2;
    double theta;    // Theta
    double gamma2_action;  // Gamma2
    double gamma2;   // angle
    MassParams masses = MassParams::normalized();

    double a2() const {
        double fm = masses.frak_m(2);
        return lambda2 * lambda2 / (masses.frak_M(2) * fm * fm);
    }
    double epsilon() const { return r1 / a2(); }
    void validate() const;
};

/// Dual-chart point: mutual inclination iota between C1 and C2, argument g2.
struct DualPoint {
    double r1;
    double lambda2;
    double g2_action;  // G2
    double iota;
    double g2;
    MassParams masses = MassParams::normalized();

    double a2() const {
        double fm = masses.frak_m(2);
        return lambda2 * lambda2 / (masses.frak_M(2) * fm * fm);
    }
};

struct PowerSeries {
    std::vector<double> a;  // coefficients of sum a_n eps^n

    int order() const { return static_cast<int>(a.size()) - 1; }
    double eval(double eps) const {
        double v = 0.0;
        for (int n = order(); n >= 0; --n) v = v * eps + a[n];
        return v;
    }
};

inline constexpr int kDefaultNodes = 256;

/// h1: outer averaged Newtonian potential (average over the outer mean anomaly).
double outer_average(const ReducedSecularPoint& p, int nodes = kDefaultNodes);

/// h2: dual averaged Newtonian potential (inner position replaced by r1 * unit C1).
double dual_average(const DualPoint& p, int nodes = kDefaultNodes);

/// h3: mixed doubly averaged Newtonian potential. n1 is the inner angular momentum
/// direction; the inner body runs on the circle of radius r1 normal to n1, the angle
/// measured from the moving node x2 x n1. The orbit sits in standard position
/// (perihelion along axis 1, C2 along axis 3).
double mixed_average(double r1, const Vec3& n1, const OrbitGeometry& orbit,
                     int nodes_inner = 128, int nodes_outer = kDefaultNodes);

/// P_eps: multiply the 2m-th coefficient by (-1)^m (2m-1)!!/(2m)!!, kill odd ones.
PowerSeries epsilon_project(const PowerSeries& s);

/// The Legendre coefficients a_n = <rho^{-n-1} P_n(n1 . x2hat)>_{l2} of the
/// inverse distance 1/|eps n1 - x2/a2|.
PowerSeries bridge_coefficients(const Vec3& n1, const OrbitGeometry& orbit,
                                int order, int nodes = kDefaultNodes);

/// h3 through the eps-projection identity: (1/a2) P_eps <g_eps>|_{eps = r1/a2}.
double bridge_average(double r1, const Vec3& n1, const OrbitGeometry& orbit,
                      int series_order = 20, int nodes = kDefaultNodes);

struct Phi1Average {
    double lhs;     // quadrature over phi1
    double rhs;     // projected Legendre series
    double defect;  // |lhs - rhs|
};

/// Single-angle average of 1/|x1(phi1) - x2| against its Legendre-series value.
Phi1Average phi1_average_defect(double r1, const Vec3& n1, const Vec3& x2,
                                int nodes = kDefaultNodes, int series_order = 40);

}  // namespace orbavg
