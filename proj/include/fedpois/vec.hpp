#pragma once

// ParamVector algebra. Flat vectors of doubles are the common currency of
// models, updates, attacks and bounds.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace fedpois {

using ParamVector = std::vector<double>;

struct DimensionMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void check_same_size(const ParamVector& a, const ParamVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
}

inline double dot(const ParamVector& a, const ParamVector& b) {
  check_same_size(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double l2_norm(const ParamVector& a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return std::sqrt(s);
}

inline ParamVector sub(const ParamVector& a, const ParamVector& b) {
  check_same_size(a, b);
  ParamVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline ParamVector add(const ParamVector& a, const ParamVector& b) {
  check_same_size(a, b);
  ParamVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline ParamVector scaled(const ParamVector& a, double s) {
  ParamVector out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

// y += s * x
inline void axpy(ParamVector& y, double s, const ParamVector& x) {
  check_same_size(y, x);
  for (size_t i = 0; i < y.size(); ++i) y[i] += s * x[i];
}

inline void scale_in_place(ParamVector& a, double s) {
  for (auto& x : a) x *= s;
}

inline double l2_distance(const ParamVector& a, const ParamVector& b) {
  check_same_size(a, b);
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

inline double cosine_similarity(const ParamVector& a, const ParamVector& b) {
  double na = l2_norm(a), nb = l2_norm(b);
  if (na == 0.0 || nb == 0.0) throw std::domain_error("cosine of zero vector");
  return dot(a, b) / (na * nb);
}

// angle in [0, pi]
inline double angle_between(const ParamVector& a, const ParamVector& b) {
  double c = cosine_similarity(a, b);
  if (c > 1.0) c = 1.0;
  if (c < -1.0) c = -1.0;
  return std::acos(c);
}

inline bool all_finite(const ParamVector& a) {
  for (double x : a)
    if (!std::isfinite(x)) return false;
  return true;
}

// Rescale to the target norm if the current norm exceeds it.
inline void clip_norm(ParamVector& a, double max_norm) {
  double n = l2_norm(a);
  if (n > max_norm && n > 0.0) scale_in_place(a, max_norm / n);
}

inline double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / double(xs.size());
}

// unbiased (n-1) estimator; 0 for fewer than two samples
inline double stddev(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / double(xs.size() - 1));
}

inline double median_of(std::vector<double> xs) {
  if (xs.empty()) throw std::domain_error("median of empty list");
  std::sort(xs.begin(), xs.end());
  size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

}  // namespace fedpois
