// Deterministic RNG with explicit variate algorithms so that draws are pinned
// by this code rather than by the standard library implementation. Substreams
// are derived from (seed, stream indices) with SplitMix64, one independent
// mt19937_64 engine per stream (chains, dataset replicates, MC workers).
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace sparsepk {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : engine_(splitmix64(splitmix64(seed) ^ (stream + 1))) {}
  Rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream)
      : engine_(splitmix64(splitmix64(splitmix64(seed) ^ (stream + 1)) ^ ((substream + 1) << 1))) {}

  std::uint64_t next_u64() { return engine_(); }

  // uniform on (0,1); never returns 0 or 1
  double uniform() {
    const double u = (next_u64() >> 11) * 0x1.0p-53;
    return u > 0.0 ? u : 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // polar Box-Muller with one cached deviate
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u, v, s;
    do {
      u = 2.0 * uniform() - 1.0;
      v = 2.0 * uniform() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = std::sqrt(-2.0 * std::log(s) / s);
    spare_ = v * m;
    has_spare_ = true;
    return u * m;
  }

  double exponential(double rate) { return -std::log(uniform()) / rate; }

  double laplace(double scale) {
    const double u = uniform() - 0.5;
    return -scale * std::copysign(std::log1p(-2.0 * std::abs(u)), u);
  }

  double cauchy() { return std::tan(3.14159265358979323846 * (uniform() - 0.5)); }

  int bernoulli(double p) { return uniform() < p ? 1 : 0; }

  int binomial2(double p) { return bernoulli(p) + bernoulli(p); }

  // Marsaglia-Tsang; shape > 0, unit scale
  double gamma(double shape) {
    if (shape < 1.0) {
      const double u = uniform();
      return gamma(shape + 1.0) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
      if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
  }

  double beta(double a, double b) {
    const double x = gamma(a);
    const double y = gamma(b);
    return x / (x + y);
  }

  double inv_gamma(double shape, double scale) { return scale / gamma(shape); }

  double student_t(double nu) { return normal() / std::sqrt(gamma(nu / 2.0) / (nu / 2.0)); }

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sparsepk
