#pragma once

#include <cmath>
#include <functional>

namespace shockratio {

/// Adaptive Simpson on [a,b]. `tol` is absolute; recursion stops once the
/// local Richardson estimate is below the per-interval share of it.
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-12,
                 int max_depth = 60);

/// Integral over [a, +inf) via x = a + t/(1-t), t in [0,1).
double integrate_to_inf(const std::function<double(double)>& f, double a, double tol = 1e-12);

/// Integral over (-inf, b] via x = b - t/(1-t).
double integrate_from_minus_inf(const std::function<double(double)>& f, double b, double tol = 1e-12);

} // namespace shockratio
