#pragma once

#include <functional>
#include <vector>

#include "orbavg/averaging.hpp"

namespace orbavg {

/// Frozen parameters of an h1 expansion.
struct SeriesParams {
    double lambda2;
    double gamma2_action;  // Gamma2
    double theta;
    double a2;
};

/// Truncated double series sum_n sum_m c[n][m] eps^n cos(m gamma2), eps = r1/a2.
struct TaylorFourierSeries {
    SeriesParams params;
    int order_eps;      // N
    int order_fourier;  // M
    std::vector<std::vector<double>> c;  // c[n][m], 0 <= n <= N, 0 <= m <= M

    double at(int n, int m) const {
        if (n < 0 || m < 0 || n > order_eps || m > order_fourier) return 0.0;
        return c[n][m];
    }
    double eval(double eps, double gamma2) const;
    double row_max_abs(int n) const;
};

/// Taylor coefficients in eps by the term-wise Legendre identity
/// (1/2pi) int rho^{-n} P_n(-sqrt(1-Theta^2/Gamma2^2) cos(gamma2+nu2)) dzeta2,
/// cosine-analysed in gamma2. Exact in the Fourier direction for M >= N.
TaylorFourierSeries expand_h1(const SeriesParams& p, int order_eps, int order_fourier,
                              int nodes = kDefaultNodes);

struct CoefficientVerdict {
    int n, m;
    double value;
    double err_estimate;
    bool vanishes;  // |value| < 10 x err_estimate
};

struct CoefficientReport {
    std::vector<CoefficientVerdict> entries;  // all (n, m) with m >= max(1, n)
    double parity_defect;   // max |c[n][m]| over n-m odd, relative to the row scale
    double max_abs;         // overall coefficient scale
};

/// Vanishing verdicts for the Harrington set m >= max(1, n) plus the parity check.
/// The error estimate per row is the node-doubling difference of the quadrature.
CoefficientReport harrington_report(const SeriesParams& p, int order_eps, int nodes = kDefaultNodes);

/// Residual of the commutation recursion for h against g = a(Gamma) + eps b(Gamma) cos gamma.
/// Series are expanded at Gamma2 and Gamma2 +/- dGamma for the central-difference
/// derivatives of the coefficients. mutate lets a test corrupt the centre series.
double commutation_recursion_defect(
    const SeriesParams& p, int order_eps, int order_fourier, int nodes, double dGamma,
    const std::function<double(double)>& a, const std::function<double(double)>& b,
    const std::function<void(TaylorFourierSeries&)>& mutate = nullptr);

/// Default a, b of the pair (h1, calG^2/Lambda2^2).
double commutation_recursion_defect(const SeriesParams& p, int order_eps, int order_fourier,
                                    int nodes = kDefaultNodes, double dGamma = 1e-4);

/// Taylor coefficient g_hk = d^2h_E d^2k_I g_p / ((2h)! (2k)!) at (calE, calI) = 0
/// of the generalized integrand with exponent p, by central differences with one
/// Richardson refinement.
struct GhkResult {
    double value;
    double err_estimate;
};
GhkResult g_hk_with_error(double p_exponent, double r1, double a2, int h, int k,
                          int nodes = kDefaultNodes);
double g_hk_coefficients(double p_exponent, double r1, double a2, int h, int k,
                         int nodes = kDefaultNodes);

struct HermanConstants {
    double rho;          // coeff of calE^2 divided by b1
    double sigma;        // coeff of calI^2 divided by b1
    double b1_measured;  // calI^2 coefficient divided by the reference sigma = 3/4
    double b1_formula;   // r1^2 a2^2 / (r1^2 + a2^2)^{5/2}
};

/// rho, sigma are toolkit-derived reference rationals (-3/4, +3/4); the paper
/// states only their existence in Q.
HermanConstants herman_constants(double r1, double a2, int nodes = kDefaultNodes);

struct MixedCoeffs {
    double beta0, beta1;      // P_eps-projected b0, b1 evaluated at eps
    double h3;                // mixed average at the tilted geometry
    double model;             // (1/a2)(beta0 + rho beta1 e2^2 + sigma beta1 (G2/L2)^2 sin^2 iota)
    double residual;          // h3 - model
    double order_estimate;    // from the (e2, iota) -> (e2/2, iota/2) residual ratio
};

/// Quadratic-form check of the mixed average in the small (e2, iota) regime.
/// Throws RegimeError when the residual fails to be fourth order.
MixedCoeffs mixed_average_coeffs(double r1, double a2, double e2, double iota,
                                 double azimuth = 0.0, int nodes = kDefaultNodes);

}  // namespace orbavg
