#pragma once

#include <cmath>
#include <cstdint>

namespace shockratio {

/// log C(n,k) via lgamma; exact enough for n up to ~1e15.
inline double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// C(n,k) as a double, computed by the product form (no lgamma rounding).
inline double binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0.0;
  if (k > n - k) k = n - k;
  double r = 1.0;
  for (int64_t i = 1; i <= k; ++i) r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  return r;
}

double reg_lower_gamma(double a, double x);  ///< P(a,x) = gamma(a,x)/Gamma(a)
double reg_inc_beta(double a, double b, double x);  ///< I_x(a,b)

/// Unregularized incomplete Beta B(x; a, b) = int_0^x t^{a-1}(1-t)^{b-1} dt.
inline double inc_beta(double x, double a, double b) {
  if (x <= 0) return 0.0;
  double logB = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
  return reg_inc_beta(a, b, x) * std::exp(logB);
}

/// Numerically stable log(1 - exp(-x)) for x > 0.
inline double log1mexp(double x) {
  return x > 0.6931471805599453 ? std::log1p(-std::exp(-x)) : std::log(-std::expm1(-x));
}

} // namespace shockratio
