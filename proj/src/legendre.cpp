#include "orbavg/legendre.hpp"

#include <cmath>

#include "orbavg/errors.hpp"
#include "orbavg/vec.hpp"

namespace orbavg {

double double_factorial(int k) {
    double r = 1.0;
    while (k > 1) { r *= k; k -= 2; }
    return r;
}

double legendre_delta(int n) {
    if (n % 2) return 0.0;
    int m = n / 2;
    double v = double_factorial(2 * m - 1) / double_factorial(2 * m);
    return (m % 2) ? -v : v;
}

static void check_legendre_args(int n, double t) {
    if (n < 0 || n > 64) throw DomainError("legendre: degree outside [0, 64]");
    if (std::fabs(t) > 1.0 + 1e-15) throw DomainError("legendre: |t| > 1");
}

double legendre_eval(int n, double t) {
    check_legendre_args(n, t);
    double pm1 = 1.0, p = t;
    if (n == 0) return 1.0;
    for (int k = 1; k < n; ++k) {
        double next = ((2 * k + 1) * t * p - k * pm1) / (k + 1);
        pm1 = p;
        p = next;
    }
    return p;
}

std::vector<double> legendre_all(int n, double t) {
    check_legendre_args(n, t);
    std::vector<double> out(n + 1);
    out[0] = 1.0;
    if (n >= 1) out[1] = t;
    for (int k = 1; k < n; ++k)
        out[k + 1] = ((2 * k + 1) * t * out[k] - k * out[k - 1]) / (k + 1);
    return out;
}

LegendreTable::LegendreTable(int n) : max_degree(n), delta(n + 1) {
    for (int k = 0; k <= n; ++k) delta[k] = legendre_delta(k);
}

AveragingIdentity averaging_identity_defect(int n, double t, int nodes) {
    check_legendre_args(n, t);
    double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    double acc = 0.0;
    for (int k = 0; k < nodes; ++k)
        acc += legendre_eval(n, s * std::cos(kTwoPi * k / nodes));
    double lhs = acc / nodes;
    double rhs = legendre_delta(n) * legendre_eval(n, t);
    return {lhs, rhs, std::fabs(lhs - rhs)};
}

double even_derivative(int m, int h, EvalPoint at) {
    if (m < 0 || h < 0 || h > m) throw DomainError("even_derivative: need 0 <= h <= m");
    if (at == EvalPoint::Zero) {
        double v = std::tgamma(h + 1.0) / std::tgamma(2.0 * h + 1.0)
                 * double_factorial(2 * m + 2 * h - 1) / double_factorial(2 * m - 2 * h);
        return ((m - h) % 2) ? -v : v;
    }
    return std::pow(0.5, h) * double_factorial(2 * m + 2 * h - 1) / double_factorial(2 * m - 1)
         * double_factorial(2 * m) / (double_factorial(2 * h) * double_factorial(2 * m - 2 * h));
}

static CoeffRecursion alloc_table(int max_order) {
    CoeffRecursion t;
    t.max_order = max_order;
    t.c.resize(max_order + 1);
    for (int h = 0; h <= max_order; ++h) t.c[h].assign(h + 1, 0.0);
    return t;
}

CoeffRecursion cbar_table(int max_order) {
    CoeffRecursion t = alloc_table(max_order);
    t.c[0][0] = 1.0;
    for (int h = 0; h < max_order; ++h)
        for (int j = 0; j <= h + 1; ++j)
            t.c[h + 1][j] = -t.at(h, j - 1) * (2.0 * j - 1.0) + (2.0 * h - j) * t.at(h, j);
    return t;
}

CoeffRecursion chat_table(int max_order) {
    CoeffRecursion t = alloc_table(max_order);
    t.c[0][0] = 1.0;
    for (int h = 0; h < max_order; ++h)
        for (int j = 0; j <= h + 1; ++j)
            t.c[h + 1][j] = -(j * (2.0 * j - 1.0) / (h + 1.0)) * t.at(h, j - 1)
                          + ((4.0 * h * h - j * j + 2.0 * h - j) / (2.0 * h + 2.0)) * t.at(h, j);
    return t;
}

double derivative_via_table(const CoeffRecursion& table, int m, int h) {
    if (h > table.max_order) throw DomainError("derivative_via_table: h beyond table");
    double sum = 0.0;
    for (int j = 0; j <= h; ++j) {
        // C_{2m,j} = (2m-j+1)(2m-j+2)...(2m+j) / (2j)!
        double num = 1.0;
        for (int i = 2 * m - j + 1; i <= 2 * m + j; ++i) num *= i;
        sum += table.at(h, j) * num / std::tgamma(2.0 * j + 1.0);
    }
    return sum;
}

}  // namespace orbavg
