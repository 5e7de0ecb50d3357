#pragma once

#include <vector>

#include "peer/types.hpp"

namespace peer {

// two-sided 95% normal quantile used by Greenwood bands
inline constexpr double kZ975 = 1.959963984540054;

double mean(const std::vector<double>& x);
// sample standard deviation, n-1 denominator
double sample_sd(const std::vector<double>& x);

// type-7 (linear interpolation) quantile of an unsorted sample, p in [0,1]
double quantile(std::vector<double> x, double p);

// nearest-rank percentile: the ceil(p*n)-th order statistic (1-indexed)
double nearest_rank_percentile(std::vector<double> x, double p);

double pearson_correlation(const Eigen::Ref<const Vector>& a,
                           const Eigen::Ref<const Vector>& b);

// regularized incomplete beta I_x(a, b)
double regularized_incomplete_beta(double a, double b, double x);

// two-sided p-value for a t statistic with df degrees of freedom
double student_t_two_sided_p(double t, double df);

}  // namespace peer
