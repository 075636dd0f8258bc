#include "shockratio/quadrature.hpp"

namespace shockratio {

namespace {

double simpson(double fa, double fm, double fb, double h) { return h / 6.0 * (fa + 4.0 * fm + fb); }

double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  double flm = f(lm), frm = f(rm);
  double left = simpson(fa, flm, fm, m - a);
  double right = simpson(fm, frm, fb, b - m);
  double err = left + right - whole;
  if (depth <= 0 || std::fabs(err) < 15.0 * tol) return left + right + err / 15.0;
  return adapt(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double tol, int max_depth) {
  if (a == b) return 0.0;
  double sign = 1.0;
  if (a > b) {
    std::swap(a, b);
    sign = -1.0;
  }
  // Seed with a few panels so narrow features away from the midpoint are not missed.
  const int panels = 16;
  double h = (b - a) / panels;
  double total = 0.0;
  for (int i = 0; i < panels; ++i) {
    double x0 = a + i * h, x1 = x0 + h, xm = 0.5 * (x0 + x1);
    double f0 = f(x0), f1 = f(x1), fm = f(xm);
    double whole = simpson(f0, fm, f1, h);
    total += adapt(f, x0, x1, f0, fm, f1, whole, tol / panels, max_depth);
  }
  return sign * total;
}

double integrate_to_inf(const std::function<double(double)>& f, double a, double tol) {
  auto g = [&](double t) {
    double u = 1.0 - t;
    double x = a + t / u;
    return f(x) / (u * u);
  };
  return integrate(g, 0.0, 1.0 - 1e-14, tol);
}

double integrate_from_minus_inf(const std::function<double(double)>& f, double b, double tol) {
  auto g = [&](double t) {
    double u = 1.0 - t;
    double x = b - t / u;
    return f(x) / (u * u);
  };
  return integrate(g, 0.0, 1.0 - 1e-14, tol);
}

} // namespace shockratio
