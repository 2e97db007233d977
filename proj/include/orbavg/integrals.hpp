#pragma once

#include "orbavg/averaging.hpp"
#include "orbavg/charts.hpp"
#include "orbavg/elements.hpp"
#include "orbavg/vec.hpp"

namespace orbavg {

/// Arguments of the energy representation E(r1, a2, Theta, G) at fixed Lambda2.
struct EnergyArgs {
    double r1;
    double a2;
    double theta;
    double lambda2;
    double G;  // the first integral calG

    double calE() const { return std::sqrt(std::max(0.0, lambda2 * lambda2 - G * G)) / lambda2; }
    double calI() const { return std::sqrt(std::max(0.0, G * G - theta * theta)) / lambda2; }
    void validate() const;
};

/// calG^2 / Lambda2^2 on the reduced chart:
/// Gamma2^2/Lambda2^2 + (r1/a2) sqrt(1 - Gamma2^2/Lambda2^2) sqrt(1 - Theta^2/Gamma2^2) cos gamma2.
double calG_squared(const ReducedSecularPoint& p);

/// calG^2 / Lambda2^2 from a Cartesian pair:
/// G2^2/Lambda2^2 - e2 (x1 . P2)/a2, with e2 P2 taken from the Lenz vector
/// (continuous through e2 = 0).
double calG_cartesian(const CartesianPair& c, const MassParams& m);

/// E by quadrature at given (calE, calI).
double energy_integral(double r1, double a2, double calE, double calI,
                       int nodes = kDefaultNodes);

double energy_E(const EnergyArgs& a, int nodes = kDefaultNodes);

/// Solve calG^2(Gamma2; gamma2) = G^2 for Gamma2 in (|Theta|, Lambda2).
double solve_gamma2_action(double r1, double lambda2, double theta, double a2,
                           double gamma2, double G);

struct LevelsetResult {
    double defect;        // max - min of h1 along the calG level set
    double max_dev_ff;    // max |h1 - E(ff quadrature)|
    double energy;        // E value
    bool closed_curve;    // Gamma2(gamma2) stayed inside (|Theta|, Lambda2) all around
};

/// Sweep gamma2, invert calG for Gamma2, evaluate h1, compare with Eq.-style E.
LevelsetResult levelset_defect(const ReducedSecularPoint& p, int nodes = kDefaultNodes,
                               int gamma2_grid = 48);

struct SeparatrixResult {
    double G_root;            // zero of dE/dG
    double ratio;             // G_root / Theta
    double dev_sqrt53;        // |ratio - sqrt(5/3)|  (printed leading-order locus)
    double dev_sqrt5;         // |ratio - sqrt(5)|    (locus from the printed expansion)
};

/// Locate dE/dG = 0 in the open interval (|Theta|, Lambda2) by scan + bisection
/// of the central-difference derivative.
SeparatrixResult separatrix_locus(double r1, double a2, double lambda2, double theta,
                                  int nodes = kDefaultNodes);

/// |{h1, calG^2}| in the reduced pair (Gamma2, gamma2) by central differences.
/// perturb_cross scales the cos(gamma2) coefficient of calG^2 (1 = exact theory;
/// anything else is a negative control).
double bracket_defect(const ReducedSecularPoint& p, double h_fd = 1e-5,
                      int nodes = kDefaultNodes, double perturb_cross = 1.0);

/// Scale |grad h1| |grad calG^2| for the bracket error budget.
double bracket_scale(const ReducedSecularPoint& p, double h_fd = 1e-5,
                     int nodes = kDefaultNodes);

// ---------------------------------------------------------------------------
// two-centre problem
// ---------------------------------------------------------------------------

struct TwoCentreState {
    Vec3 y, x;
    double m_plus = 1.0, m_minus = 1.0;
    Vec3 x0{0.0, 0.0, 0.5};
};

double two_centre_energy(const TwoCentreState& s);
double two_centre_N(const TwoCentreState& s);
double two_centre_Theta(const TwoCentreState& s);

struct LiouvilleSplit {
    double f_mu, f_lambda;  // both equal cal N on the H = E level
};

/// F^(mu), F^(lambda) evaluated at the Liouville image of the state.
LiouvilleSplit liouville_split(const TwoCentreState& s);

// ---------------------------------------------------------------------------
// auxiliary Hamiltonian (outer body + fixed inner position)
// ---------------------------------------------------------------------------

struct AuxState {
    Vec3 y2, x2;
    Vec3 x1;  // fixed
    MassParams masses;
};

double aux_hamiltonian(const AuxState& s);
double aux_G2(const AuxState& s);       // calG^2_aux
double aux_H_script(const AuxState& s); // cal H_aux
double aux_N(const AuxState& s);        // calG^2_aux + mu cal H_aux
double aux_N_hat(const AuxState& s);    // the un-truncated integral of Eq.-style cal N

// ---------------------------------------------------------------------------
// three-body Hamiltonian
// ---------------------------------------------------------------------------

/// H in K-coordinates: inner kinetic + |C1|^2 closed form + outer Kepler action
/// term - mu m1 m2 f (direct + indirect through the chart).
double three_body_in_K(const KPoint& p, const MassParams& m);

/// Cartesian H_2P = sum h_2P^(i) - mu m1 m2 (1/|x1-x2| - y1.y2/(m0 m1 m2)).
double three_body_cartesian(const CartesianPair& c, const MassParams& m);

}  // namespace orbavg
