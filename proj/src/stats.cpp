#include "peer/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>

namespace peer {

void warn(const std::string& msg) { std::cerr << "warning: " << msg << "\n"; }

double mean(const std::vector<double>& x) {
  if (x.empty()) throw ValidationError("mean of empty sample");
  double s = 0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

double sample_sd(const std::vector<double>& x) {
  if (x.size() < 2) throw ValidationError("sample sd needs at least 2 values");
  double m = mean(x);
  double ss = 0;
  for (double v : x) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(x.size() - 1));
}

double quantile(std::vector<double> x, double p) {
  if (x.empty()) throw ValidationError("quantile of empty sample");
  if (p < 0 || p > 1) throw ValidationError("quantile level outside [0,1]");
  std::sort(x.begin(), x.end());
  const double h = p * static_cast<double>(x.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const auto hi = static_cast<std::size_t>(std::ceil(h));
  return x[lo] + (h - std::floor(h)) * (x[hi] - x[lo]);
}

double nearest_rank_percentile(std::vector<double> x, double p) {
  if (x.empty()) throw ValidationError("percentile of empty sample");
  if (p <= 0 || p > 1) throw ValidationError("percentile level outside (0,1]");
  std::sort(x.begin(), x.end());
  auto rank = static_cast<std::size_t>(std::ceil(p * static_cast<double>(x.size())));
  if (rank == 0) rank = 1;
  return x[rank - 1];
}

double pearson_correlation(const Eigen::Ref<const Vector>& a,
                           const Eigen::Ref<const Vector>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw ValidationError("correlation needs two equal-length samples, n >= 2");
  const double ma = a.mean(), mb = b.mean();
  const Vector da = a.array() - ma, db = b.array() - mb;
  const double denom = std::sqrt(da.squaredNorm() * db.squaredNorm());
  if (denom == 0) return 0.0;
  return da.dot(db) / denom;
}

namespace {

// Continued fraction for the incomplete beta (Lentz's algorithm).
double incbeta_cf(double a, double b, double x) {
  const double tiny = 1e-30;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::fabs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double f = d;
  for (int m = 1; m <= 300; ++m) {
    const double dm = static_cast<double>(m);
    // even step
    double num = dm * (b - dm) * x / ((a + 2 * dm - 1) * (a + 2 * dm));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    f *= c * d;
    // odd step
    num = -(a + dm) * (a + b + dm) * x / ((a + 2 * dm) * (a + 2 * dm + 1));
    d = 1.0 + num * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < 1e-15) break;
  }
  return f;
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0) || !(b > 0)) throw ValidationError("incomplete beta needs a, b > 0");
  if (x <= 0) return 0.0;
  if (x >= 1) return 1.0;
  if (x > (a + 1.0) / (a + b + 2.0))
    return 1.0 - regularized_incomplete_beta(b, a, 1.0 - x);
  const double lbeta = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  const double front = std::exp(a * std::log(x) + b * std::log1p(-x) + lbeta) / a;
  return front * incbeta_cf(a, b, x);
}

double student_t_two_sided_p(double t, double df) {
  if (df <= 0) throw ValidationError("t distribution needs df > 0");
  const double t2 = t * t;
  return regularized_incomplete_beta(df / 2.0, 0.5, df / (df + t2));
}

}  // namespace peer
