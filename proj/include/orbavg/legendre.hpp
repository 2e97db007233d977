#pragma once

#include <vector>

namespace orbavg {

/// (2k-1)!! style double factorial with (-1)!! = 0!! = 1.
double double_factorial(int k);

/// delta_n: (-1)^m (2m-1)!!/(2m)!! for n = 2m, 0 for odd n.
double legendre_delta(int n);

/// P_n(t) by the three-term recurrence, |t| <= 1, 0 <= n <= 64.
double legendre_eval(int n, double t);

/// P_0..P_n at t (same preconditions).
std::vector<double> legendre_all(int n, double t);

struct LegendreTable {
    int max_degree;
    std::vector<double> delta;  // delta_0..delta_N

    explicit LegendreTable(int n);
    double eval(int degree, double t) const { return legendre_eval(degree, t); }
};

struct AveragingIdentity {
    double lhs;     // (1/2pi) int P_n(sqrt(1-t^2) cos th) dth
    double rhs;     // delta_n P_n(t)
    double defect;  // |lhs - rhs|
};

/// Torus average of P_n(sqrt(1-t^2) cos th) against delta_n P_n(t).
AveragingIdentity averaging_identity_defect(int n, double t, int nodes);

enum class EvalPoint { Zero, One };

/// D_tau^h P_2m at tau = t^2 in {0, 1} by the closed double-factorial formulas.
double even_derivative(int m, int h, EvalPoint at);

/// Triangular coefficient table c[h][j], j <= h <= H.
struct CoeffRecursion {
    int max_order;
    std::vector<std::vector<double>> c;

    double at(int h, int j) const {
        if (h < 0 || j < 0 || h > max_order || j > h) return 0.0;
        return c[h][j];
    }
};

CoeffRecursion cbar_table(int max_order);
CoeffRecursion chat_table(int max_order);

/// D_z^h P_2m(sqrt(1-2z)) at z = 0 evaluated through a coefficient table:
/// sum_j C_{2m,j} c[h][j].
double derivative_via_table(const CoeffRecursion& table, int m, int h);

}  // namespace orbavg
