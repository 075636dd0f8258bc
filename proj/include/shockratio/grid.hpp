#pragma once

#include <optional>
#include <string>
#include <vector>

namespace shockratio {

/// Local power-law model C * t^(a-1) for the density on the first grid cell.
/// Carries the unbounded-at-zero part (a < 1) that node values cannot.
struct singular_head {
  double coef;      // C
  double exponent;  // a; density ~ C t^{a-1} on (0, step]
  double mass(double step) const;
};

/// Uniform-grid numerical density (or any nonnegative function) on [0, x_max].
/// Node i sits at i*step; values[0] is ignored whenever `head` is present.
struct GridFunction {
  double step = 0.0;
  std::vector<double> values;
  std::optional<singular_head> head;

  double x_max() const { return step * static_cast<double>(values.size() - 1); }
  std::size_t size() const { return values.size(); }

  /// Value by linear interpolation (head model used inside the first cell).
  double at(double t) const;

  /// Trapezoid mass of [0, t] with the head handled analytically.
  double integral_to(double t) const;
  double total_mass() const { return integral_to(x_max()); }

  /// Cumulative trapezoid masses at every node (head included in entry 1..).
  std::vector<double> cumulative() const;

  void scale(double s);
  void check_invariants() const; // nonnegative, finite, mass <= 1 + 1e-9 for densities
};

/// Two-column CSV (t, f(t)) with strictly increasing t starting at 0; values are
/// resampled onto the uniform grid by linear interpolation.
GridFunction grid_from_csv(const std::string& path, double step);
void grid_to_csv(const GridFunction& g, const std::string& path);

} // namespace shockratio
