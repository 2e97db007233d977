#include "orbavg/series.hpp"

#include <cmath>

#include "orbavg/errors.hpp"
#include "orbavg/integrals.hpp"
#include "orbavg/legendre.hpp"

namespace orbavg {

double TaylorFourierSeries::eval(double eps, double gamma2) const {
    double v = 0.0;
    for (int n = order_eps; n >= 0; --n) {
        double row = 0.0;
        for (int m = 0; m <= order_fourier; ++m) row += c[n][m] * std::cos(m * gamma2);
        v = v * eps + row;
    }
    return v;
}

double TaylorFourierSeries::row_max_abs(int n) const {
    double v = 0.0;
    for (double x : c[n]) v = std::max(v, std::fabs(x));
    return v;
}

TaylorFourierSeries expand_h1(const SeriesParams& p, int order_eps, int order_fourier,
                              int nodes) {
    if (order_eps < 0 || order_eps > 12) throw DomainError("expand_h1: N outside [0, 12]");
    if (order_fourier < 0 || order_fourier > order_eps)
        throw DomainError("expand_h1: need 0 <= M <= N");
    if (!(p.gamma2_action > 0.0) || p.gamma2_action > p.lambda2 ||
        std::fabs(p.theta) > p.gamma2_action)
        throw DomainError("expand_h1: need |Theta| <= Gamma2 <= Lambda2");

    double rl = p.gamma2_action / p.lambda2;
    double e2 = std::sqrt(std::max(0.0, 1.0 - rl * rl));
    double rt = p.theta / p.gamma2_action;
    double s = std::sqrt(std::max(0.0, 1.0 - rt * rt));

    // cosine grid large enough to resolve every row exactly (row n has harmonics <= n)
    int grid = std::max(order_eps, 1);
    std::vector<std::vector<double>> rows(order_eps + 1, std::vector<double>(grid + 1, 0.0));
    for (int k = 0; k <= grid; ++k) {
        double g = M_PI * k / grid;
        for (int j = 0; j < nodes; ++j) {
            double zeta = kTwoPi * j / nodes;
            auto [nu, rho] = anomalies(e2, zeta);
            double t = -s * std::cos(g + nu);
            std::vector<double> pn = legendre_all(order_eps, t);
            double rp = 1.0;
            for (int n = 0; n <= order_eps; ++n) {
                rows[n][k] += rp * pn[n];
                rp /= rho;
            }
        }
        for (int n = 0; n <= order_eps; ++n) rows[n][k] /= nodes;
    }

    TaylorFourierSeries out;
    out.params = p;
    out.order_eps = order_eps;
    out.order_fourier = order_fourier;
    out.c.assign(order_eps + 1, std::vector<double>(order_fourier + 1, 0.0));
    // DCT-I: b_m = (2/M) w_m sum_k w_k f(k pi/M) cos(pi m k / M), w = 1/2 at the ends
    for (int n = 0; n <= order_eps; ++n) {
        for (int m = 0; m <= order_fourier; ++m) {
            double sum = 0.0;
            for (int k = 0; k <= grid; ++k) {
                double wk = (k == 0 || k == grid) ? 0.5 : 1.0;
                sum += wk * rows[n][k] * std::cos(M_PI * m * k / grid);
            }
            double wm = (m == 0 || m == grid) ? 0.5 : 1.0;
            out.c[n][m] = (2.0 / grid) * wm * sum / p.a2;
        }
    }
    return out;
}

CoefficientReport harrington_report(const SeriesParams& p, int order_eps, int nodes) {
    TaylorFourierSeries s1 = expand_h1(p, order_eps, order_eps, nodes);
    TaylorFourierSeries s2 = expand_h1(p, order_eps, order_eps, 2 * nodes);

    CoefficientReport rep;
    rep.max_abs = 0.0;
    for (int n = 0; n <= order_eps; ++n) rep.max_abs = std::max(rep.max_abs, s2.row_max_abs(n));

    for (int n = 0; n <= order_eps; ++n) {
        double row_scale = std::max(s2.row_max_abs(n), 1e-30);
        for (int m = std::max(1, n); m <= order_eps; ++m) {
            double v = s2.at(n, m);
            double err = std::fabs(s2.at(n, m) - s1.at(n, m)) + 1e-14 * row_scale;
            rep.entries.push_back({n, m, v, err, std::fabs(v) < 10.0 * err});
        }
    }
    double pd = 0.0;
    for (int n = 0; n <= order_eps; ++n)
        for (int m = 0; m <= order_eps; ++m)
            if ((n - m) % 2 != 0) pd = std::max(pd, std::fabs(s2.at(n, m)));
    rep.parity_defect = pd / std::max(rep.max_abs, 1e-30);
    return rep;
}

double commutation_recursion_defect(
    const SeriesParams& p, int order_eps, int order_fourier, int nodes, double dGamma,
    const std::function<double(double)>& a, const std::function<double(double)>& b,
    const std::function<void(TaylorFourierSeries&)>& mutate) {
    SeriesParams pm = p, pp = p;
    pm.gamma2_action -= dGamma;
    pp.gamma2_action += dGamma;
    // the recursion holds for the dimensionless f_nm = a2 c[n][m]
    TaylorFourierSeries sm = expand_h1(pm, order_eps, order_fourier, nodes);
    TaylorFourierSeries sc = expand_h1(p, order_eps, order_fourier, nodes);
    TaylorFourierSeries sp = expand_h1(pp, order_eps, order_fourier, nodes);
    if (mutate) mutate(sc);

    double gam = p.gamma2_action;
    double ha = 1e-6 * p.lambda2;
    double da = (a(gam + ha) - a(gam - ha)) / (2.0 * ha);
    double db = (b(gam + ha) - b(gam - ha)) / (2.0 * ha);
    double bv = b(gam);

    auto h = [&](int n, int m) { return p.a2 * sc.at(n, m); };
    auto dh = [&](int n, int m) {
        return p.a2 * (sp.at(n, m) - sm.at(n, m)) / (2.0 * dGamma);
    };

    double worst = 0.0;
    for (int n = 0; n <= order_eps; ++n) {
        for (int m = 1; m <= order_fourier; ++m) {
            double lhs = m * h(n, m) * da
                       + 0.5 * ((m - 1) * h(n - 1, m - 1) + (m + 1) * h(n - 1, m + 1)) * db;
            double rhs = 0.5 * (dh(n - 1, m - 1) - dh(n - 1, m + 1)
                              + (m == 1 ? dh(n - 1, 0) : 0.0)) * bv;
            worst = std::max(worst, std::fabs(lhs - rhs));
        }
    }
    return worst;
}

double commutation_recursion_defect(const SeriesParams& p, int order_eps, int order_fourier,
                                    int nodes, double dGamma) {
    double L2 = p.lambda2, Th = p.theta;
    auto a = [L2](double g) { return g * g / (L2 * L2); };
    auto b = [L2, Th](double g) {
        return std::sqrt(std::max(0.0, 1.0 - g * g / (L2 * L2)))
             * std::sqrt(std::max(0.0, 1.0 - Th * Th / (g * g)));
    };
    return commutation_recursion_defect(p, order_eps, order_fourier, nodes, dGamma, a, b);
}

namespace {

double g_p_integral(double p_exp, double r1, double a2, double calE, double calI, int nodes) {
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k) {
        double zeta = kTwoPi * k / nodes;
        double c = std::cos(zeta), s = std::sin(zeta);
        double den2 = r1 * r1 + a2 * a2 - 2.0 * a2 * (r1 * calI * s + a2 * calE * c)
                    + a2 * a2 * calE * calE * c * c;
        acc += (1.0 - calE * c) / std::pow(den2, p_exp);
    }
    return acc / nodes;
}

// even central stencils for d^{2h} at 0
const std::vector<std::vector<double>> kStencils = {
    {1.0},                                     // h = 0
    {1.0, -2.0, 1.0},                          // d^2
    {1.0, -4.0, 6.0, -4.0, 1.0},               // d^4
    {1.0, -6.0, 15.0, -20.0, 15.0, -6.0, 1.0}  // d^6
};

double fd_even(double p_exp, double r1, double a2, int h, int k, double step, int nodes) {
    const auto& sh = kStencils[h];
    const auto& sk = kStencils[k];
    int ch = h, ck = k;  // stencil centers
    double sum = 0.0;
    for (int i = 0; i < static_cast<int>(sh.size()); ++i)
        for (int j = 0; j < static_cast<int>(sk.size()); ++j)
            sum += sh[i] * sk[j]
                 * g_p_integral(p_exp, r1, a2, (i - ch) * step, (j - ck) * step, nodes);
    return sum / std::pow(step, 2.0 * (h + k));
}

}  // namespace

GhkResult g_hk_with_error(double p_exponent, double r1, double a2, int h, int k, int nodes) {
    if (h < 0 || k < 0 || h + k > 3) throw DomainError("g_hk: need 0 <= h + k <= 3");
    if (h == 0 && k == 0) return {g_p_integral(p_exponent, r1, a2, 0.0, 0.0, nodes), 1e-15};
    double step = 1e-2 / (h + k + 1.0);
    double d1 = fd_even(p_exponent, r1, a2, h, k, step, nodes);
    double d2 = fd_even(p_exponent, r1, a2, h, k, 0.5 * step, nodes);
    double rich = (4.0 * d2 - d1) / 3.0;  // O(step^2) -> O(step^4)
    double fact = std::tgamma(2.0 * h + 1.0) * std::tgamma(2.0 * k + 1.0);
    double err = (std::fabs(rich - d2) + 1e-15 * std::fabs(g_p_integral(p_exponent, r1, a2, 0, 0, nodes))
                      / std::pow(0.5 * step, 2.0 * (h + k))) / fact;
    double scale = std::fabs(rich / fact) + std::fabs(g_p_integral(p_exponent, r1, a2, 0, 0, nodes));
    if (err > 0.05 * scale)
        throw PrecisionError("g_hk: finite differences unstable at the requested order");
    return {rich / fact, err};
}

double g_hk_coefficients(double p_exponent, double r1, double a2, int h, int k, int nodes) {
    return g_hk_with_error(p_exponent, r1, a2, h, k, nodes).value;
}

HermanConstants herman_constants(double r1, double a2, int nodes) {
    double cE = g_hk_coefficients(0.5, r1, a2, 1, 0, nodes);
    double cI = g_hk_coefficients(0.5, r1, a2, 0, 1, nodes);
    double b1 = r1 * r1 * a2 * a2 / std::pow(r1 * r1 + a2 * a2, 2.5);
    return {cE / b1, cI / b1, cI / 0.75, b1};
}

namespace {

// Taylor series of (1 + x)^alpha up to x^order, x = eps^2
std::vector<double> binomial_series(double alpha, int order) {
    std::vector<double> c(order + 1);
    c[0] = 1.0;
    for (int m = 1; m <= order; ++m) c[m] = c[m - 1] * (alpha - m + 1) / m;
    return c;
}

double projected_beta(int which, double eps, int order) {
    // b0(eps^2, 1) = (1+eps^2)^{-1/2}; b1(eps^2, 1) = eps^2 (1+eps^2)^{-5/2}
    PowerSeries s;
    s.a.assign(2 * order + 3, 0.0);
    if (which == 0) {
        auto c = binomial_series(-0.5, order);
        for (int m = 0; m <= order; ++m) s.a[2 * m] = c[m];
    } else {
        auto c = binomial_series(-2.5, order);
        for (int m = 0; m <= order; ++m) s.a[2 * m + 2] = c[m];
    }
    return epsilon_project(s).eval(eps);
}

double h3_at(double r1, double a2, double e2, double iota, double azimuth, int nodes) {
    Vec3 n1{std::sin(iota) * std::cos(azimuth), std::sin(iota) * std::sin(azimuth),
            std::cos(iota)};
    OrbitGeometry orbit{a2, e2, std::sqrt(a2)};  // lambda2 irrelevant for the quadrature
    return mixed_average(r1, n1, orbit, nodes / 2, nodes);
}

}  // namespace

MixedCoeffs mixed_average_coeffs(double r1, double a2, double e2, double iota,
                                 double azimuth, int nodes) {
    if (e2 < 0.0 || e2 > 0.5 || std::fabs(iota) > 0.5)
        throw DomainError("mixed_average_coeffs: quadratic regime needs small e2, iota");
    double eps = r1 / a2;
    const double rho = -0.75, sigma = 0.75;
    MixedCoeffs out;
    out.beta0 = projected_beta(0, eps, 40);
    out.beta1 = projected_beta(1, eps, 40);
    auto model = [&](double e, double io) {
        double g2_ratio2 = 1.0 - e * e;  // (G2/Lambda2)^2
        return (out.beta0 + rho * out.beta1 * e * e
                + sigma * out.beta1 * g2_ratio2 * std::sin(io) * std::sin(io)) / a2;
    };
    out.h3 = h3_at(r1, a2, e2, iota, azimuth, nodes);
    out.model = model(e2, iota);
    out.residual = out.h3 - out.model;
    double res_half = h3_at(r1, a2, 0.5 * e2, 0.5 * iota, azimuth, nodes)
                    - model(0.5 * e2, 0.5 * iota);
    if (res_half == 0.0) {
        out.order_estimate = 4.0;
    } else {
        out.order_estimate = std::log(std::fabs(out.residual / res_half)) / std::log(2.0);
    }
    if (std::fabs(out.residual) > 1e-12 && out.order_estimate < 3.0)
        throw RegimeError("mixed_average_coeffs: residual not fourth order",
                          out.order_estimate);
    return out;
}

}  // namespace orbavg
