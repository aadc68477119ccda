#pragma once

// One-sided binomial confidence bounds for the Monte Carlo reports.

#include <cmath>
#include <stdexcept>

namespace flexcol {

// Regularized incomplete beta I_x(a, b) via the Lentz continued fraction.
inline double reg_inc_beta(double x, double a, double b) {
    if (x < 0.0 || x > 1.0) throw std::invalid_argument("reg_inc_beta: x outside [0,1]");
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    // symmetry keeps the continued fraction in its fast-converging region
    if (x > (a + 1.0) / (a + b + 2.0)) return 1.0 - reg_inc_beta(1.0 - x, b, a);
    double log_front = a * std::log(x) + b * std::log1p(-x) + std::lgamma(a + b) -
                       std::lgamma(a) - std::lgamma(b);
    const double tiny = 1e-300;
    double f = 1.0, c = 1.0, d = 0.0;
    for (int i = 0; i <= 400; ++i) {
        int m = i / 2;
        double numerator;
        if (i == 0)
            numerator = 1.0;
        else if (i % 2 == 0)
            numerator = m * (b - m) * x / ((a + 2.0 * m - 1.0) * (a + 2.0 * m));
        else
            numerator = -(a + m) * (a + b + m) * x / ((a + 2.0 * m) * (a + 2.0 * m + 1.0));
        d = 1.0 + numerator * d;
        if (std::fabs(d) < tiny) d = tiny;
        d = 1.0 / d;
        c = 1.0 + numerator / c;
        if (std::fabs(c) < tiny) c = tiny;
        f *= c * d;
        if (std::fabs(1.0 - c * d) < 1e-15) break;
    }
    return std::exp(log_front) * (f - 1.0) / a;
}

// Smallest p with P[Bin(n, p) >= s] >= 1 - confidence; 0 when s = 0.
// This is the one-sided Clopper-Pearson lower bound.
inline double clopper_pearson_lower(long long s, long long n, double confidence) {
    if (n <= 0) throw std::invalid_argument("clopper_pearson_lower: need n >= 1");
    if (s < 0 || s > n) throw std::invalid_argument("clopper_pearson_lower: s outside [0, n]");
    if (confidence <= 0.0 || confidence >= 1.0)
        throw std::invalid_argument("clopper_pearson_lower: confidence outside (0,1)");
    if (s == 0) return 0.0;
    // solve I_p(s, n - s + 1) = 1 - confidence by bisection
    double target = 1.0 - confidence;
    double lo = 0.0, hi = static_cast<double>(s) / static_cast<double>(n);
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (reg_inc_beta(mid, static_cast<double>(s), static_cast<double>(n - s + 1)) < target)
            lo = mid;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace flexcol
