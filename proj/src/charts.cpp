#include "orbavg/charts.hpp"

#include <cmath>
#include <functional>

#include "orbavg/errors.hpp"

namespace orbavg {

namespace {

constexpr Vec3 kAxis1{1.0, 0.0, 0.0};
constexpr Vec3 kAxis3{0.0, 0.0, 1.0};

double safe_acos(double c) { return std::acos(std::min(1.0, std::max(-1.0, c))); }

void check_node(const Vec3& node, double scale, const char* name) {
    if (norm(node) < 1e-10 * scale)
        throw SingularChartError(std::string("vanishing node ") + name);
}

// Frame shared by the K and P reconstructions. Returns F2 (third axis along the
// radial body) and F3 (third axis along the orbital angular momentum).
struct ChartFrames {
    Mat3 f1, f2, f3;
};

ChartFrames build_frames(double Z, double G, double Theta, double Phi,
                         double z, double g, double theta_node) {
    if (G <= 0.0) throw DomainError("chart: G must be positive");
    if (std::fabs(Z) > G) throw DomainError("chart: |Z| > G");
    if (std::fabs(Theta) > std::min(G, Phi))
        throw DomainError("chart: |Theta| > min(G, Phi)");
    double i = safe_acos(Z / G);
    double i1 = safe_acos(Theta / G);
    double i2 = safe_acos(Theta / Phi);
    ChartFrames fr;
    fr.f1 = rot3(z) * rot1(i);
    fr.f2 = fr.f1 * rot3(g) * rot1(i1);
    fr.f3 = fr.f2 * rot3(theta_node) * rot1(i2);
    return fr;
}

// The in-plane leg: the chart angle phi is measured from the node to the
// 90-degree-rotated position (x.x0 = -r0 r sqrt(1-Theta^2/Phi^2) cos phi),
// so the polar angle from the node axis is phi - pi/2.
void place_orbit_leg(const ChartFrames& fr, double R, double Phi, double r, double phi,
                     Vec3& x, Vec3& y) {
    double cp = std::cos(phi), sp = std::sin(phi);
    x = fr.f3 * Vec3{r * sp, -r * cp, 0.0};
    y = fr.f3 * Vec3{R * sp + (Phi / r) * cp, -R * cp + (Phi / r) * sp, 0.0};
}

}  // namespace

CartesianPair k_forward(const KPoint& p, const MassParams& m) {
    double L2 = p.lambda2, G2 = p.gamma2_action;
    if (L2 <= 0.0) throw DomainError("k_forward: Lambda2 must be positive");
    if (G2 <= 0.0 || G2 > L2) throw DomainError("k_forward: need 0 < Gamma2 <= Lambda2");
    if (p.r1 <= 0.0) throw DomainError("k_forward: r1 must be positive");

    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double a2 = L2 * L2 / (fM2 * fm2 * fm2);
    double e2 = std::sqrt(std::max(0.0, 1.0 - (G2 / L2) * (G2 / L2)));

    double zeta = solve_kepler(e2, p.ell2);
    auto [nu, rho] = anomalies(e2, zeta);
    double r2 = a2 * rho;
    double R2 = (L2 / a2) * e2 * std::sin(zeta) / rho;
    double phi2 = p.gamma2 + nu;

    ChartFrames fr = build_frames(p.Z, p.G, p.theta_action, G2, p.z, p.g, p.theta_node);
    CartesianPair c;
    c.x1 = fr.f2 * Vec3{0.0, 0.0, p.r1};
    Vec3 c_tot = fr.f1 * Vec3{0.0, 0.0, p.G};
    Vec3 c2 = fr.f3 * Vec3{0.0, 0.0, G2};
    Vec3 c1 = c_tot - c2;
    place_orbit_leg(fr, R2, G2, r2, phi2, c.x2, c.y2);
    c.y1 = (p.R1 / p.r1) * c.x1 + cross(c1, c.x1) / (p.r1 * p.r1);
    return c;
}

KPoint k_inverse(const CartesianPair& c, const MassParams& m) {
    double fm2 = m.frak_m(2), fM2 = m.frak_M(2);
    double r1 = norm(c.x1), r2 = norm(c.x2);
    if (r1 <= 0.0 || r2 <= 0.0) throw DomainError("k_inverse: vanishing position");

    double h2 = norm2(c.y2) / (2.0 * fm2) - fm2 * fM2 / r2;
    if (h2 >= 0.0) throw DomainError("k_inverse: outer two-body energy not negative");
    double a2 = -fm2 * fM2 / (2.0 * h2);
    double L2 = fm2 * std::sqrt(fM2 * a2);

    Vec3 c1 = cross(c.x1, c.y1), c2 = cross(c.x2, c.y2);
    Vec3 c_tot = c1 + c2;
    double scale = std::max({norm(c_tot), norm(c2), 1e-30});
    Vec3 n0 = cross(kAxis3, c_tot);
    Vec3 n1 = cross(c_tot, c.x1);
    Vec3 n2 = cross(c.x1, c2);
    check_node(n0, scale * 1.0, "nu0");
    check_node(n1, scale * r1, "nu1");
    check_node(n2, scale * r1, "nu2");

    double G2 = norm(c2);
    double e2 = std::sqrt(std::max(0.0, 1.0 - (G2 / L2) * (G2 / L2)));
    if (e2 < 1e-12) throw SingularChartError("k_inverse: e2 = 0, perihelion undefined");

    double e_sin = dot(c.x2, c.y2) / L2;
    double e_cos = 1.0 - r2 / a2;
    double zeta = std::atan2(e_sin, e_cos);
    double ell2 = zeta - e_sin;

    Vec3 lenz = cross(c.y2, c2) - fM2 * fm2 * fm2 * c.x2 / r2;
    Vec3 perih = lenz / (fM2 * fm2 * fm2 * e2);
    Vec3 n3 = cross(c2, perih);

    KPoint p;
    p.lambda2 = L2;
    p.ell2 = ell2;
    p.Z = dot(c_tot, kAxis3);
    p.G = norm(c_tot);
    p.R1 = dot(c.y1, c.x1) / r1;
    p.gamma2_action = G2;
    p.theta_action = dot(c2, c.x1) / r1;
    p.z = oriented_angle(kAxis3, kAxis1, n0);
    p.g = oriented_angle(c_tot, n0, n1);
    p.r1 = r1;
    p.gamma2 = oriented_angle(c2, n2, n3);
    p.theta_node = oriented_angle(c.x1, n1, n2);
    return p;
}

PCartesian p_forward(const PPoint& p) {
    if (p.r0 <= 0.0 || p.r <= 0.0) throw DomainError("p_forward: radii must be positive");
    ChartFrames fr = build_frames(p.Z, p.G, p.theta_action, p.Phi, p.z, p.g, p.theta_node);
    PCartesian c;
    c.x0 = fr.f2 * Vec3{0.0, 0.0, p.r0};
    Vec3 c_tot = fr.f1 * Vec3{0.0, 0.0, p.G};
    Vec3 cv = fr.f3 * Vec3{0.0, 0.0, p.Phi};
    Vec3 c0 = c_tot - cv;
    place_orbit_leg(fr, p.R, p.Phi, p.r, p.phi, c.x, c.y);
    c.y0 = (p.R0 / p.r0) * c.x0 + cross(c0, c.x0) / (p.r0 * p.r0);
    return c;
}

PPoint p_inverse(const PCartesian& c) {
    double r0 = norm(c.x0), r = norm(c.x);
    if (r0 <= 0.0 || r <= 0.0) throw DomainError("p_inverse: vanishing position");
    Vec3 c0 = cross(c.x0, c.y0), cv = cross(c.x, c.y);
    Vec3 c_tot = c0 + cv;
    double scale = std::max({norm(c_tot), norm(cv), 1e-30});
    Vec3 n0 = cross(kAxis3, c_tot);
    Vec3 n1 = cross(c_tot, c.x0);
    Vec3 n2 = cross(c.x0, cv);
    check_node(n0, scale, "nu0");
    check_node(n1, scale * r0, "nu1");
    check_node(n2, scale * r0, "nu2");

    PPoint p;
    p.Z = dot(c_tot, kAxis3);
    p.G = norm(c_tot);
    p.theta_action = dot(cv, c.x0) / r0;
    p.R0 = dot(c.y0, c.x0) / r0;
    p.R = dot(c.y, c.x) / r;
    p.Phi = norm(cv);
    p.z = oriented_angle(kAxis3, kAxis1, n0);
    p.g = oriented_angle(c_tot, n0, n1);
    p.theta_node = oriented_angle(c.x0, n1, n2);
    p.r0 = r0;
    p.r = r;
    p.phi = oriented_angle(cv, n2, cross(cv, c.x));
    return p;
}

LiouvillePoint liouville_from_p(const PPoint& p) {
    double s2 = 1.0 - (p.theta_action / p.Phi) * (p.theta_action / p.Phi);
    double s = std::sqrt(std::max(0.0, s2));
    double rp2 = p.r0 * p.r0 - 2.0 * p.r0 * p.r * s * std::cos(p.phi) + p.r * p.r;
    double rm2 = p.r0 * p.r0 + 2.0 * p.r0 * p.r * s * std::cos(p.phi) + p.r * p.r;
    double rp = std::sqrt(rp2), rm = std::sqrt(rm2);
    double lam = (rp + rm) / (2.0 * p.r0);
    double mu = (rp - rm) / (2.0 * p.r0);
    if (lam <= 1.0 + 1e-14 || std::fabs(mu) >= 1.0 - 1e-14)
        throw DegenerateGeometryError("liouville_from_p: lambda <= 1 or |mu| >= 1");

    double q = lam * lam + mu * mu - 1.0;
    double sq = std::sqrt(q);
    double karg = (1.0 - mu * mu) * (lam * lam - 1.0) * p.Phi * p.Phi - q * p.theta_action * p.theta_action;
    double kv = std::copysign(std::sqrt(std::max(0.0, karg)), std::sin(p.phi));

    LiouvillePoint l;
    l.lambda = lam;
    l.mu = mu;
    l.p_lambda = p.r0 * lam * p.R / sq - mu * kv / (q * (lam * lam - 1.0));
    l.p_mu = p.r0 * mu * p.R / sq + lam * kv / (q * (1.0 - mu * mu));
    l.theta_action = p.theta_action;
    l.r0 = p.r0;
    return l;
}

namespace {

// J^T Omega J - Omega in max norm, Omega = [[0,-I],[I,0]] for (P, Q) ordering.
double defect_from_map(const std::function<std::array<double, 12>(const std::array<double, 12>&)>& fwd,
                       const std::array<double, 12>& at, double h) {
    if (h < 1e-7 || h > 1e-4) throw DomainError("symplectic_defect: h_fd outside [1e-7, 1e-4]");
    double jac[12][12];
    for (int j = 0; j < 12; ++j) {
        std::array<double, 12> lo = at, hi = at;
        lo[j] -= h;
        hi[j] += h;
        auto flo = fwd(lo), fhi = fwd(hi);
        for (int i = 0; i < 12; ++i) jac[i][j] = (fhi[i] - flo[i]) / (2.0 * h);
    }
    auto omega = [](int i, int j) -> double {
        if (i < 6 && j == i + 6) return -1.0;
        if (i >= 6 && j == i - 6) return 1.0;
        return 0.0;
    };
    double worst = 0.0;
    for (int a = 0; a < 12; ++a)
        for (int b = 0; b < 12; ++b) {
            double s = 0.0;
            for (int i = 0; i < 12; ++i) {
                // (J^T Omega J)_{ab} = sum_{i,j} J_{ia} Omega_{ij} J_{jb}; Omega sparse
                int j = (i < 6) ? i + 6 : i - 6;
                double w = (i < 6) ? -1.0 : 1.0;
                s += jac[i][a] * w * jac[j][b];
            }
            worst = std::max(worst, std::fabs(s - omega(a, b)));
        }
    return worst;
}

std::array<double, 12> cart_array(const CartesianPair& c) {
    return {c.y1.x, c.y1.y, c.y1.z, c.y2.x, c.y2.y, c.y2.z,
            c.x1.x, c.x1.y, c.x1.z, c.x2.x, c.x2.y, c.x2.z};
}

std::array<double, 12> cart_array(const PCartesian& c) {
    return {c.y0.x, c.y0.y, c.y0.z, c.y.x, c.y.y, c.y.z,
            c.x0.x, c.x0.y, c.x0.z, c.x.x, c.x.y, c.x.z};
}

}  // namespace

double symplectic_defect_k(const KPoint& p, const MassParams& m, double h_fd) {
    auto fwd = [&m](const std::array<double, 12>& v) {
        return cart_array(k_forward(KPoint::from_array(v), m));
    };
    return defect_from_map(fwd, p.as_array(), h_fd);
}

double symplectic_defect_p(const PPoint& p, double h_fd) {
    auto fwd = [](const std::array<double, 12>& v) {
        return cart_array(p_forward(PPoint::from_array(v)));
    };
    return defect_from_map(fwd, p.as_array(), h_fd);
}

double symplectic_defect_identity(double h_fd) {
    auto fwd = [](const std::array<double, 12>& v) { return v; };
    std::array<double, 12> at{};
    for (int i = 0; i < 12; ++i) at[i] = 0.3 + 0.1 * i;
    return defect_from_map(fwd, at, h_fd);
}

}  // namespace orbavg
