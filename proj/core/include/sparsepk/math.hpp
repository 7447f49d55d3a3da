// Scalar special functions and log-densities shared across the library.
#pragma once

#include <cmath>
#include <utility>

namespace sparsepk {

inline constexpr double kLogTwoPi = 1.8378770664093454836;
inline constexpr double kLogSqrtTwoOverPi = -0.2257913526447274324;  // log(sqrt(2/pi))

// log(exp(a) + exp(b)) without overflow
inline double log_sum_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

inline double logistic(double x) {
  return x >= 0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

// log(1 + exp(x))
inline double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// Standard normal CDF and its inverse (Wichura's AS241, ~1e-15 accurate).
double norm_cdf(double x);
double norm_quantile(double p);

inline double norm_logpdf(double x, double mu, double sd) {
  const double z = (x - mu) / sd;
  return -0.5 * kLogTwoPi - std::log(sd) - 0.5 * z * z;
}

inline double norm_pdf(double x, double mu, double sd) { return std::exp(norm_logpdf(x, mu, sd)); }

// Half-normal on x >= 0 with scale s: sqrt(2/pi)/s * exp(-x^2/(2 s^2))
inline double half_normal_logpdf(double x, double s) {
  return kLogSqrtTwoOverPi - std::log(s) - 0.5 * x * x / (s * s);
}

inline double laplace_logpdf(double x, double b) { return -std::log(2.0 * b) - std::abs(x) / b; }

inline double exponential_logpdf(double x, double rate) { return std::log(rate) - rate * x; }

double lbeta(double a, double b);

inline double beta_logpdf(double x, double a, double b) {
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - lbeta(a, b);
}

inline double inv_gamma_logpdf(double x, double shape, double scale) {
  return shape * std::log(scale) - std::lgamma(shape) - (shape + 1.0) * std::log(x) - scale / x;
}

// Wilson score interval for x successes out of n at the given confidence level.
std::pair<double, double> wilson_interval(int x, int n, double conf = 0.95);

// One-sample Kolmogorov-Smirnov statistic against the standard normal CDF,
// and the asymptotic p-value with Stephens' small-sample correction.
double ks_statistic_normal(const double* x, int n);
double ks_pvalue(double d, int n);

}  // namespace sparsepk
