#pragma once

#include <cstddef>
#include <span>

namespace xsom {
namespace stats {

double mean(std::span<const double> xs);
// unbiased (n-1) sample variance; 0 for fewer than 2 values
double sample_variance(std::span<const double> xs);

// Regularized incomplete beta I_x(a,b), continued-fraction evaluation.
double reg_incomplete_beta(double x, double a, double b);

// CDF of Student's t with df degrees of freedom.
double student_t_cdf(double x, double df);

// CDF of the F distribution with (d1, d2) degrees of freedom.
double f_cdf(double x, double d1, double d2);

// Two-sided Welch t-test p-value from summary statistics. Degenerate inputs
// (both variances zero) give p = 1 when the means are equal, else p = 0.
double welch_p_value(double mean1, double var1, std::size_t n1,
                     double mean2, double var2, std::size_t n2);

// Two-sided F-test p-value for variance equality, p = 2*min(cdf, 1-cdf).
double f_test_p_value(double var1, std::size_t n1, double var2, std::size_t n2);

} // namespace stats
} // namespace xsom
