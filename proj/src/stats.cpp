#include "xsom/stats.hpp"

#include <cmath>
#include <limits>

namespace xsom {
namespace stats {

double mean(std::span<const double> xs) {
    if (xs.empty()) return 0.0;
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_variance(std::span<const double> xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / static_cast<double>(xs.size() - 1);
}

namespace {

double log_beta(double a, double b) {
    return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

// Continued fraction for the incomplete beta, modified Lentz algorithm.
double incbeta_cf(double x, double a, double b) {
    const double tiny = 1e-300;
    const double eps = 1e-15;
    double c = 1.0;
    double d = 1.0 - (a + b) * x / (a + 1.0);
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double result = d;
    for (int m = 1; m <= 300; ++m) {
        const double dm = static_cast<double>(m);
        // even term
        double num = dm * (b - dm) * x / ((a + 2.0 * dm - 1.0) * (a + 2.0 * dm));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        result *= d * c;
        // odd term
        num = -(a + dm) * (a + b + dm) * x / ((a + 2.0 * dm) * (a + 2.0 * dm + 1.0));
        d = 1.0 + num * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + num / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double mult = d * c;
        result *= mult;
        if (std::fabs(mult - 1.0) < eps) break;
    }
    return result;
}

} // namespace

double reg_incomplete_beta(double x, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0) || std::isnan(x)) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double front =
        std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
    // symmetry keeps the continued fraction in its fast-converging region
    if (x < (a + 1.0) / (a + b + 2.0)) {
        return front / a * incbeta_cf(x, a, b);
    }
    const double front2 =
        std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(a, b));
    return 1.0 - front2 / b * incbeta_cf(1.0 - x, b, a);
}

double student_t_cdf(double x, double df) {
    if (!(df > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
    const double ib = reg_incomplete_beta(df / (x * x + df), df / 2.0, 0.5);
    return x >= 0.0 ? 1.0 - ib / 2.0 : ib / 2.0;
}

double f_cdf(double x, double d1, double d2) {
    if (!(d1 > 0.0) || !(d2 > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    if (x <= 0.0) return 0.0;
    if (std::isinf(x)) return 1.0;
    return reg_incomplete_beta(d1 * x / (d1 * x + d2), d1 / 2.0, d2 / 2.0);
}

double welch_p_value(double mean1, double var1, std::size_t n1,
                     double mean2, double var2, std::size_t n2) {
    if (n1 < 2 || n2 < 2 || (var1 <= 0.0 && var2 <= 0.0)) {
        return mean1 == mean2 ? 1.0 : 0.0;
    }
    const double se1 = var1 / static_cast<double>(n1);
    const double se2 = var2 / static_cast<double>(n2);
    const double se = se1 + se2;
    const double t = (mean1 - mean2) / std::sqrt(se);
    const double df =
        se * se / (se1 * se1 / static_cast<double>(n1 - 1) +
                   se2 * se2 / static_cast<double>(n2 - 1));
    return 2.0 * (1.0 - student_t_cdf(std::fabs(t), df));
}

double f_test_p_value(double var1, std::size_t n1, double var2, std::size_t n2) {
    if (n1 < 2 || n2 < 2) return var1 == var2 ? 1.0 : 0.0;
    if (var1 <= 0.0 && var2 <= 0.0) return 1.0;
    if (var1 <= 0.0 || var2 <= 0.0) return 0.0;
    const double f = var1 / var2;
    const double c = f_cdf(f, static_cast<double>(n1 - 1), static_cast<double>(n2 - 1));
    const double p = 2.0 * std::min(c, 1.0 - c);
    return std::min(p, 1.0);
}

} // namespace stats
} // namespace xsom
