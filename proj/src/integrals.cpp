#include "orbavg/integrals.hpp"

#include <cmath>

#include "orbavg/errors.hpp"

namespace orbavg {

void EnergyArgs::validate() const {
    if (r1 < 0.0 || a2 <= 0.0) throw DomainError("EnergyArgs: need r1 >= 0, a2 > 0");
    if (std::fabs(theta) > G + 1e-14 || G > lambda2 + 1e-14)
        throw DomainError("EnergyArgs: need |Theta| <= G <= Lambda2");
}

double calG_squared(const ReducedSecularPoint& p) {
    p.validate();
    double rl = p.gamma2_action / p.lambda2;
    double rt = p.theta / p.gamma2_action;
    return rl * rl + p.epsilon() * std::sqrt(std::max(0.0, 1.0 - rl * rl))
                       * std::sqrt(std::max(0.0, 1.0 - rt * rt)) * std::cos(p.gamma2);
}

double calG_cartesian(const CartesianPair& c, const MassParams& m) {
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double r2 = norm(c.x2);
    double h2 = norm2(c.y2) / (2.0 * fm2) - fm2 * fM2 / r2;
    if (h2 >= 0.0) throw DomainError("calG_cartesian: outer state not elliptic");
    double a2 = -fm2 * fM2 / (2.0 * h2);
    double L2 = fm2 * std::sqrt(fM2 * a2);
    Vec3 c2 = cross(c.x2, c.y2);
    double G2 = norm(c2);
    // e2 P2 = Lenz / (frak_M2 frak_m2^2); the product is continuous at e2 = 0
    Vec3 e2P2 = (cross(c.y2, c2) - fM2 * fm2 * fm2 * c.x2 / r2) / (fM2 * fm2 * fm2);
    return (G2 / L2) * (G2 / L2) - dot(c.x1, e2P2) / a2;
}

double energy_integral(double r1, double a2, double calE, double calI, int nodes) {
    if (nodes < 64) throw DomainError("energy_integral: nodes must be >= 64");
    double acc = 0.0, min_den2 = 1e300;
    for (int k = 0; k < nodes; ++k) {
        double zeta = kTwoPi * k / nodes;
        double c = std::cos(zeta), s = std::sin(zeta);
        double den2 = r1 * r1 + a2 * a2 - 2.0 * a2 * (r1 * calI * s + a2 * calE * c)
                    + a2 * a2 * calE * calE * c * c;
        min_den2 = std::min(min_den2, den2);
        acc += (1.0 - calE * c) / std::sqrt(den2);
    }
    if (min_den2 < 1e-20 * a2 * a2)
        throw CollisionError("energy_integral: denominator vanishes on the grid");
    return acc / nodes;
}

double energy_E(const EnergyArgs& a, int nodes) {
    a.validate();
    return energy_integral(a.r1, a.a2, a.calE(), a.calI(), nodes);
}

double solve_gamma2_action(double r1, double lambda2, double theta, double a2,
                           double gamma2, double G) {
    double target = (G / lambda2) * (G / lambda2);
    double eps = r1 / a2;
    auto f = [&](double gam) {
        double rl = gam / lambda2, rt = theta / gam;
        return rl * rl + eps * std::sqrt(std::max(0.0, 1.0 - rl * rl))
                           * std::sqrt(std::max(0.0, 1.0 - rt * rt)) * std::cos(gamma2)
             - target;
    };
    double lo = std::fabs(theta) + 1e-8, hi = lambda2 - 1e-8;
    if (lo >= hi) throw LevelSetLeavesChartError("solve_gamma2_action: empty interval");
    double flo = f(lo), fhi = f(hi);
    if (flo > 0.0 || fhi < 0.0)
        throw LevelSetLeavesChartError("solve_gamma2_action: level set leaves (|Theta|, Lambda2)");
    for (int it = 0; it < 100; ++it) {
        double mid = 0.5 * (lo + hi);
        if (f(mid) < 0.0) lo = mid; else hi = mid;
    }
    // Newton polish
    double g = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        double h = 1e-7 * lambda2;
        double d = (f(g + h) - f(g - h)) / (2.0 * h);
        if (d == 0.0) break;
        double step = f(g) / d;
        double next = g - step;
        if (next <= std::fabs(theta) || next >= lambda2) break;
        g = next;
    }
    return g;
}

LevelsetResult levelset_defect(const ReducedSecularPoint& p, int nodes, int gamma2_grid) {
    p.validate();
    double G2sq = calG_squared(p);
    double G = p.lambda2 * std::sqrt(G2sq);
    double a2 = p.a2();

    EnergyArgs ea{p.r1, a2, p.theta, p.lambda2, G};
    double E = energy_E(ea, nodes);

    double hmin = 1e300, hmax = -1e300, dev = 0.0;
    bool closed = true;
    for (int k = 0; k < gamma2_grid; ++k) {
        double g2 = kTwoPi * k / gamma2_grid;
        double gam;
        try {
            gam = solve_gamma2_action(p.r1, p.lambda2, p.theta, a2, g2, G);
        } catch (const LevelSetLeavesChartError&) {
            closed = false;
            throw;
        }
        ReducedSecularPoint q = p;
        q.gamma2_action = gam;
        q.gamma2 = g2;
        double h = outer_average(q, nodes);
        hmin = std::min(hmin, h);
        hmax = std::max(hmax, h);
        dev = std::max(dev, std::fabs(h - E));
    }
    return {hmax - hmin, dev, E, closed};
}

SeparatrixResult separatrix_locus(double r1, double a2, double lambda2, double theta,
                                  int nodes) {
    if (theta == 0.0)
        throw NoRootError("separatrix_locus: Theta = 0, locus degenerates to the boundary");
    double lo = std::fabs(theta) * 1.02, hi = lambda2 * 0.98;
    if (lo >= hi) throw DomainError("separatrix_locus: empty interior interval");
    double hG = 1e-6 * lambda2;
    auto dEdG = [&](double G) {
        EnergyArgs a{r1, a2, theta, lambda2, 0.0};
        a.G = G + hG;
        double ep = energy_E(a, nodes);
        a.G = G - hG;
        double em = energy_E(a, nodes);
        return (ep - em) / (2.0 * hG);
    };
    const int kScan = 64;
    double prevG = lo, prevD = dEdG(lo);
    double rootLo = 0.0, rootHi = 0.0;
    bool found = false;
    for (int k = 1; k <= kScan; ++k) {
        double G = lo + (hi - lo) * k / kScan;
        double d = dEdG(G);
        if (prevD == 0.0 || (prevD < 0.0) != (d < 0.0)) {
            rootLo = prevG;
            rootHi = G;
            found = true;
            break;
        }
        prevG = G;
        prevD = d;
    }
    if (!found) throw NoRootError("separatrix_locus: no sign change of dE/dG in the interior");
    double dlo = dEdG(rootLo);
    for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (rootLo + rootHi);
        double dm = dEdG(mid);
        if ((dm < 0.0) == (dlo < 0.0)) { rootLo = mid; dlo = dm; }
        else rootHi = mid;
        if (rootHi - rootLo < 1e-10 * lambda2) break;
    }
    double root = 0.5 * (rootLo + rootHi);
    double ratio = root / theta;
    return {root, ratio,
            std::fabs(ratio - std::sqrt(5.0 / 3.0)),
            std::fabs(ratio - std::sqrt(5.0))};
}

namespace {

double calG_squared_scaled(const ReducedSecularPoint& p, double perturb_cross) {
    double rl = p.gamma2_action / p.lambda2;
    double rt = p.theta / p.gamma2_action;
    return rl * rl + perturb_cross * p.epsilon()
             * std::sqrt(std::max(0.0, 1.0 - rl * rl))
             * std::sqrt(std::max(0.0, 1.0 - rt * rt)) * std::cos(p.gamma2);
}

struct ReducedGradients {
    double dh_dgam, dh_dang, dg_dgam, dg_dang;
};

ReducedGradients reduced_gradients(const ReducedSecularPoint& p, double h_fd, int nodes,
                                   double perturb_cross) {
    double scale = p.lambda2;
    double h = h_fd * scale;
    if (p.gamma2_action - h <= std::fabs(p.theta) || p.gamma2_action + h >= p.lambda2)
        throw SingularChartError("bracket_defect: point too close to the chart boundary");
    auto hval = [&](double gam, double ang) {
        ReducedSecularPoint q = p;
        q.gamma2_action = gam;
        q.gamma2 = ang;
        return outer_average(q, nodes);
    };
    auto gval = [&](double gam, double ang) {
        ReducedSecularPoint q = p;
        q.gamma2_action = gam;
        q.gamma2 = ang;
        return calG_squared_scaled(q, perturb_cross);
    };
    ReducedGradients g;
    g.dh_dgam = (hval(p.gamma2_action + h, p.gamma2) - hval(p.gamma2_action - h, p.gamma2)) / (2 * h);
    g.dh_dang = (hval(p.gamma2_action, p.gamma2 + h) - hval(p.gamma2_action, p.gamma2 - h)) / (2 * h);
    g.dg_dgam = (gval(p.gamma2_action + h, p.gamma2) - gval(p.gamma2_action - h, p.gamma2)) / (2 * h);
    g.dg_dang = (gval(p.gamma2_action, p.gamma2 + h) - gval(p.gamma2_action, p.gamma2 - h)) / (2 * h);
    return g;
}

}  // namespace

double bracket_defect(const ReducedSecularPoint& p, double h_fd, int nodes,
                      double perturb_cross) {
    p.validate();
    if (h_fd < 1e-6 || h_fd > 1e-4)
        throw DomainError("bracket_defect: h_fd outside [1e-6, 1e-4] x scale");
    ReducedGradients g = reduced_gradients(p, h_fd, nodes, perturb_cross);
    // {h, g}_{Gamma2, gamma2} with the convention {gamma2, Gamma2} = 1
    return std::fabs(g.dh_dang * g.dg_dgam - g.dh_dgam * g.dg_dang);
}

double bracket_scale(const ReducedSecularPoint& p, double h_fd, int nodes) {
    ReducedGradients g = reduced_gradients(p, h_fd, nodes, 1.0);
    double nh = std::hypot(g.dh_dgam, g.dh_dang);
    double ng = std::hypot(g.dg_dgam, g.dg_dang);
    return nh * ng;
}

// ---------------------------------------------------------------------------

namespace {
void check_two_centre(const TwoCentreState& s, double& rp, double& rm) {
    rp = norm(s.x + s.x0);
    rm = norm(s.x - s.x0);
    double scale = std::max(norm(s.x0), norm(s.x));
    if (rp < 1e-12 * scale || rm < 1e-12 * scale)
        throw CollisionError("two_centre: particle at a centre");
}
}  // namespace

double two_centre_energy(const TwoCentreState& s) {
    double rp, rm;
    check_two_centre(s, rp, rm);
    return 0.5 * norm2(s.y) - s.m_plus / rp - s.m_minus / rm;
}

double two_centre_N(const TwoCentreState& s) {
    double rp, rm;
    check_two_centre(s, rp, rm);
    Vec3 c = cross(s.x, s.y);
    return norm2(c) + dot(s.x0, s.y) * dot(s.x0, s.y)
         + 2.0 * dot(s.x, s.x0) * (s.m_plus / rp - s.m_minus / rm);
}

double two_centre_Theta(const TwoCentreState& s) {
    return dot(s.x0, cross(s.x, s.y)) / norm(s.x0);
}

LiouvilleSplit liouville_split(const TwoCentreState& s) {
    double rp, rm;
    check_two_centre(s, rp, rm);
    double r0 = norm(s.x0);
    double lam = (rp + rm) / (2.0 * r0);
    double mu = (rp - rm) / (2.0 * r0);
    if (lam <= 1.0 + 1e-13 || std::fabs(mu) >= 1.0 - 1e-13)
        throw DegenerateGeometryError("liouville_split: state on a confocal degeneracy");

    Vec3 c = cross(s.x, s.y);
    double Phi = norm(c);
    double Theta = dot(s.x0, c) / r0;
    double r = norm(s.x);
    double R = dot(s.y, s.x) / r;
    Vec3 n2 = cross(s.x0, c);
    double phi = oriented_angle(c, n2, cross(c, s.x));

    double q = lam * lam + mu * mu - 1.0;
    double sq = std::sqrt(q);
    double karg = (1.0 - mu * mu) * (lam * lam - 1.0) * Phi * Phi - q * Theta * Theta;
    double kv = std::copysign(std::sqrt(std::max(0.0, karg)), std::sin(phi));
    double pl = r0 * lam * R / sq - mu * kv / (q * (lam * lam - 1.0));
    double pm = r0 * mu * R / sq + lam * kv / (q * (1.0 - mu * mu));

    double E = two_centre_energy(s);
    double fmu = pm * pm * (1.0 - mu * mu) + Theta * Theta / (1.0 - mu * mu)
               + 2.0 * r0 * (s.m_plus - s.m_minus) * mu + 2.0 * r0 * r0 * mu * mu * E;
    double fla = -pl * pl * (lam * lam - 1.0) - Theta * Theta / (lam * lam - 1.0)
               + 2.0 * r0 * (s.m_plus + s.m_minus) * lam + 2.0 * r0 * r0 * lam * lam * E;
    return {fmu, fla};
}

// ---------------------------------------------------------------------------

namespace {
void check_aux(const AuxState& s, double& r2, double& d12) {
    r2 = norm(s.x2);
    d12 = norm(s.x1 - s.x2);
    double scale = std::max(norm(s.x1), r2);
    if (r2 < 1e-12 * scale || d12 < 1e-12 * scale)
        throw CollisionError("aux: collision configuration");
}
}  // namespace

double aux_hamiltonian(const AuxState& s) {
    double r2, d12;
    check_aux(s, r2, d12);
    double fm2 = s.masses.frak_m(2), fM2 = s.masses.frak_M(2);
    return norm2(s.y2) / (2.0 * fm2) - fm2 * fM2 / r2
         - s.masses.mu * s.masses.m1 * s.masses.m2 / d12;
}

double aux_G2(const AuxState& s) {
    double fm2 = s.masses.frak_m(2), fM2 = s.masses.frak_M(2);
    Vec3 c2 = cross(s.x2, s.y2);
    Vec3 lenz = cross(s.y2, c2) - fM2 * fm2 * fm2 * s.x2 / norm(s.x2);
    return (norm2(c2) - dot(s.x1, lenz)) / fm2;
}

double aux_H_script(const AuxState& s) {
    double r2, d12;
    check_aux(s, r2, d12);
    return s.masses.m1 * s.masses.m2 * dot(s.x1 - s.x2, s.x1) / d12;
}

double aux_N(const AuxState& s) { return aux_G2(s) + s.masses.mu * aux_H_script(s); }

double aux_N_hat(const AuxState& s) {
    double r2, d12;
    check_aux(s, r2, d12);
    double fm2 = s.masses.frak_m(2), fM2 = s.masses.frak_M(2);
    Vec3 w = s.x2 - 0.5 * s.x1;
    return norm2(cross(w, s.y2)) / fm2 + dot(s.x1, s.y2) * dot(s.x1, s.y2) / (4.0 * fm2)
         + dot(s.x1, w) * (fM2 * fm2 / r2 - s.masses.mu * s.masses.m1 * s.masses.m2 / d12);
}

// ---------------------------------------------------------------------------

double three_body_in_K(const KPoint& p, const MassParams& m) {
    double fm1 = m.frak_m(1), fM1 = m.frak_M(1);
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double G = p.G, Gam = p.gamma2_action, Th = p.theta_action;
    double c1sq = G * G + Gam * Gam - 2.0 * Th * Th
                + 2.0 * std::sqrt(std::max(0.0, G * G - Th * Th))
                      * std::sqrt(std::max(0.0, Gam * Gam - Th * Th)) * std::cos(p.theta_node);
    CartesianPair c = k_forward(p, m);
    double d12 = norm(c.x1 - c.x2);
    if (d12 < 1e-12 * norm(c.x2)) throw CollisionError("three_body_in_K: collision");
    double f = 1.0 / d12 - dot(c.y1, c.y2) / (m.m0 * m.m1 * m.m2);
    return p.R1 * p.R1 / (2.0 * fm1) + c1sq / (2.0 * fm1 * p.r1 * p.r1) - fm1 * fM1 / p.r1
         - fm2 * fm2 * fm2 * fM2 * fM2 / (2.0 * p.lambda2 * p.lambda2)
         - m.mu * m.m1 * m.m2 * f;
}

double three_body_cartesian(const CartesianPair& c, const MassParams& m) {
    double fm1 = m.frak_m(1), fM1 = m.frak_M(1);
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double r1 = norm(c.x1), r2 = norm(c.x2), d12 = norm(c.x1 - c.x2);
    if (r1 == 0.0 || r2 == 0.0 || d12 == 0.0)
        throw CollisionError("three_body_cartesian: collision configuration");
    double h1 = norm2(c.y1) / (2.0 * fm1) - fm1 * fM1 / r1;
    double h2 = norm2(c.y2) / (2.0 * fm2) - fm2 * fM2 / r2;
    double f = 1.0 / d12 - dot(c.y1, c.y2) / (m.m0 * m.m1 * m.m2);
    return h1 + h2 - m.mu * m.m1 * m.m2 * f;
}

}  // namespace orbavg
