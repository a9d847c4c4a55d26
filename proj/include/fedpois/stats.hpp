#pragma once

// Two-sample statistics used by the stealth analysis: Welch's t-test,
// Brown-Forsythe (median-centered Levene), two-sample Kolmogorov-Smirnov,
// and the 3-sigma outlier rule. p-values use asymptotic formulas.

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fedpois/vec.hpp"

namespace fedpois {

struct InsufficientSamples : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Regularized incomplete beta I_x(a, b) via the continued fraction
// (modified Lentz), with the symmetry switch for convergence.
inline double betacf(double a, double b, double x) {
  const int max_iter = 300;
  const double eps = 3e-14, fpmin = 1e-300;
  double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < fpmin) d = fpmin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= max_iter; ++m) {
    int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < fpmin) d = fpmin;
    c = 1.0 + aa / c;
    if (std::fabs(c) < fpmin) c = fpmin;
    d = 1.0 / d;
    double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < eps) break;
  }
  return h;
}

inline double reg_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                    a * std::log(x) + b * std::log1p(-x);
  double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

}  // namespace detail

// two-sided p-value of Student's t with nu degrees of freedom
inline double student_t_two_sided_p(double t, double nu) {
  double x = nu / (nu + t * t);
  return detail::reg_incomplete_beta(nu / 2.0, 0.5, x);
}

// upper-tail p-value of the F distribution
inline double f_upper_tail_p(double f, double d1, double d2) {
  if (f <= 0.0) return 1.0;
  double x = d2 / (d2 + d1 * f);
  return detail::reg_incomplete_beta(d2 / 2.0, d1 / 2.0, x);
}

// Kolmogorov asymptotic survival function Q_KS(lambda) = 2 sum (-1)^{k-1} e^{-2 k^2 lambda^2}
inline double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) return 1.0;
  double sum = 0.0, sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-12) break;
    sign = -sign;
  }
  double q = 2.0 * sum;
  if (q < 0.0) q = 0.0;
  if (q > 1.0) q = 1.0;
  return q;
}

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  double p = 1.0;
};

inline WelchResult welch_t_test(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2 || y.size() < 2) throw InsufficientSamples("welch_t_test needs >= 2 per sample");
  double nx = double(x.size()), ny = double(y.size());
  double mx = mean(x), my = mean(y);
  double sx = stddev(x), sy = stddev(y);
  double vx = sx * sx / nx, vy = sy * sy / ny;
  WelchResult r;
  if (vx + vy == 0.0) {
    r.t = 0.0;
    r.df = nx + ny - 2.0;
    r.p = mx == my ? 1.0 : 0.0;
    return r;
  }
  r.t = (mx - my) / std::sqrt(vx + vy);
  r.df = (vx + vy) * (vx + vy) /
         (vx * vx / (nx - 1.0) + vy * vy / (ny - 1.0));
  r.p = student_t_two_sided_p(r.t, r.df);
  return r;
}

struct LeveneResult {
  double w = 0.0;
  double p = 1.0;
};

// Brown-Forsythe variant: absolute deviations from the group median,
// one-way ANOVA F statistic over the two groups.
inline LeveneResult levene_test(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() < 2 || y.size() < 2) throw InsufficientSamples("levene_test needs >= 2 per sample");
  double med_x = median_of(x), med_y = median_of(y);
  std::vector<double> zx, zy;
  zx.reserve(x.size());
  zy.reserve(y.size());
  for (double v : x) zx.push_back(std::fabs(v - med_x));
  for (double v : y) zy.push_back(std::fabs(v - med_y));
  double nx = double(zx.size()), ny = double(zy.size()), n = nx + ny;
  double mzx = mean(zx), mzy = mean(zy);
  double mz = (nx * mzx + ny * mzy) / n;
  double between = nx * (mzx - mz) * (mzx - mz) + ny * (mzy - mz) * (mzy - mz);
  double within = 0.0;
  for (double v : zx) within += (v - mzx) * (v - mzx);
  for (double v : zy) within += (v - mzy) * (v - mzy);
  LeveneResult r;
  if (within == 0.0) {
    r.w = between == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
    r.p = between == 0.0 ? 1.0 : 0.0;
    return r;
  }
  r.w = (n - 2.0) * between / within;  // k = 2 groups
  r.p = f_upper_tail_p(r.w, 1.0, n - 2.0);
  return r;
}

struct KsResult {
  double d = 0.0;
  double p = 1.0;
};

inline KsResult ks_two_sample(std::vector<double> x, std::vector<double> y) {
  if (x.size() < 2 || y.size() < 2) throw InsufficientSamples("ks_two_sample needs >= 2 per sample");
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  size_t i = 0, j = 0;
  double d = 0.0;
  double nx = double(x.size()), ny = double(y.size());
  while (i < x.size() && j < y.size()) {
    double xi = x[i], yj = y[j];
    if (xi <= yj) ++i;
    if (yj <= xi) ++j;
    double diff = std::fabs(double(i) / nx - double(j) / ny);
    if (diff > d) d = diff;
  }
  KsResult r;
  r.d = d;
  double ne = nx * ny / (nx + ny);
  double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  r.p = kolmogorov_q(lambda);
  return r;
}

// Share of `candidates` falling outside reference mean +/- 3 * reference std.
inline double three_sigma_outlier_fraction(const std::vector<double>& reference,
                                           const std::vector<double>& candidates) {
  if (reference.size() < 2 || candidates.empty())
    throw InsufficientSamples("three_sigma rule needs >= 2 reference and >= 1 candidate");
  double m = mean(reference), s = stddev(reference);
  double lo = m - 3.0 * s, hi = m + 3.0 * s;
  size_t out = 0;
  for (double v : candidates)
    if (v < lo || v > hi) ++out;
  return double(out) / double(candidates.size());
}

}  // namespace fedpois
