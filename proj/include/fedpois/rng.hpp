#pragma once

// Seed derivation and random draws. Every random decision in the simulator
// flows from one root seed through derive_stream(root, purpose, a, b), so
// runs are reproducible and sub-streams are independent of evaluation order.

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace fedpois {

inline uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t fnv1a(std::string_view s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Stream id = mix of the root seed, a purpose tag ("local_train", "psi", ...)
// and up to two integer coordinates (client id, round).
inline uint64_t derive_stream(uint64_t root, std::string_view purpose,
                              uint64_t a = 0, uint64_t b = 0) {
  uint64_t state = root ^ fnv1a(purpose);
  splitmix64(state);
  state ^= 0x9e3779b97f4a7c15ULL * (a + 1);
  splitmix64(state);
  state ^= 0xc2b2ae3d27d4eb4fULL * (b + 1);
  return splitmix64(state);
}

// mt19937_64 carries the state (its sequence is pinned by the standard);
// all floating-point conversions are done here so draws are identical on
// every platform with IEEE doubles.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() { return double(gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive bounds
  int uniform_int(int lo, int hi) {
    uint64_t span = uint64_t(hi - lo) + 1;
    return lo + int(gen_() % span);
  }

  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 0.0, u2 = 0.0;
    do {
      u1 = uniform();
    } while (u1 <= 0.0);
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double theta = 2.0 * 3.14159265358979323846 * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Marsaglia-Tsang; shape < 1 handled via the boost x = g(shape+1)*u^(1/shape).
  double gamma(double shape) {
    if (shape < 1.0) {
      double u = 0.0;
      do {
        u = uniform();
      } while (u <= 0.0);
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    double d = shape - 1.0 / 3.0;
    double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x = 0.0, v = 0.0;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  std::vector<double> dirichlet(double alpha, int k) {
    std::vector<double> p(k);
    double sum = 0.0;
    for (int i = 0; i < k; ++i) {
      p[i] = gamma(alpha);
      sum += p[i];
    }
    if (sum <= 0.0) {
      // all-zero draw is possible only for pathologically small alpha
      for (auto& v : p) v = 1.0 / k;
      return p;
    }
    for (auto& v : p) v /= sum;
    return p;
  }

  // Fisher-Yates
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = gen_() % i;
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 gen_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace fedpois
