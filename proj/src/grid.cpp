#include "shockratio/grid.hpp"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

#include "shockratio/errors.hpp"

namespace shockratio {

double singular_head::mass(double step) const {
  // int_0^step C t^(a-1) dt
  return coef * std::pow(step, exponent) / exponent;
}

double GridFunction::at(double t) const {
  if (t < 0 || values.empty()) return 0.0;
  if (t > x_max()) return 0.0;
  if (head && t <= step) {
    if (t <= 0) return 0.0;
    return head->coef * std::pow(t, head->exponent - 1.0);
  }
  double u = t / step;
  auto i = static_cast<std::size_t>(u);
  if (i + 1 >= values.size()) return values.back();
  double w = u - static_cast<double>(i);
  return values[i] * (1.0 - w) + values[i + 1] * w;
}

double GridFunction::integral_to(double t) const {
  if (t <= 0 || values.empty()) return 0.0;
  t = std::min(t, x_max());
  double total = 0.0;
  std::size_t full = static_cast<std::size_t>(t / step + 1e-9);
  if (full >= 1) {
    total += head ? head->mass(step) : 0.5 * step * (values[0] + values[1]);
    for (std::size_t i = 1; i < full && i + 1 < values.size(); ++i)
      total += 0.5 * step * (values[i] + values[i + 1]);
  } else {
    // inside the first cell
    if (head) return head->coef * std::pow(t, head->exponent) / head->exponent;
    double ft = at(t);
    return 0.5 * t * (values[0] + ft);
  }
  double rem = t - static_cast<double>(full) * step;
  if (rem > 1e-12 * step && full + 1 < values.size()) {
    double ft = at(t);
    total += 0.5 * rem * (values[full] + ft);
  }
  return total;
}

std::vector<double> GridFunction::cumulative() const {
  std::vector<double> cum(values.size(), 0.0);
  if (values.size() < 2) return cum;
  cum[1] = head ? head->mass(step) : 0.5 * step * (values[0] + values[1]);
  for (std::size_t i = 1; i + 1 < values.size(); ++i)
    cum[i + 1] = cum[i] + 0.5 * step * (values[i] + values[i + 1]);
  return cum;
}

void GridFunction::scale(double s) {
  for (auto& v : values) v *= s;
  if (head) head->coef *= s;
}

void GridFunction::check_invariants() const {
  require(step > 0, errc::invalid_distribution, "grid step must be positive");
  require(values.size() >= 2, errc::invalid_distribution, "grid needs at least two nodes");
  for (double v : values)
    require(std::isfinite(v) && v >= -1e-12, errc::invalid_distribution, "grid values must be finite and nonnegative");
  if (head) {
    require(head->exponent > 0 && head->coef >= 0, errc::invalid_distribution, "bad singular head");
  }
}

GridFunction grid_from_csv(const std::string& path, double step) {
  std::ifstream in(path, std::ios::binary);
  require(in.good(), errc::parse_error, "cannot open " + path);
  std::vector<double> ts, fs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r')
      fail(errc::parse_error, path + ": CRLF line ending at line " + std::to_string(lineno) + " (LF required)");
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string a, b;
    if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
      fail(errc::parse_error, path + ": expected two comma-separated columns at line " + std::to_string(lineno));
    if (lineno == 1 && (a.find_first_not_of("-+.0123456789eE") != std::string::npos)) continue; // header row
    try {
      ts.push_back(std::stod(a));
      fs.push_back(std::stod(b));
    } catch (const std::exception&) {
      fail(errc::parse_error, path + ": bad number at line " + std::to_string(lineno));
    }
  }
  require(ts.size() >= 2, errc::parse_error, path + ": need at least two samples");
  for (std::size_t i = 1; i < ts.size(); ++i)
    require(ts[i] > ts[i - 1], errc::parse_error, path + ": t column must be strictly increasing");
  require(ts.front() >= 0, errc::parse_error, path + ": negative abscissa");

  double xmax = ts.back();
  auto m = static_cast<std::size_t>(std::ceil(xmax / step));
  GridFunction g;
  g.step = step;
  g.values.assign(m + 1, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i <= m; ++i) {
    double t = static_cast<double>(i) * step;
    while (k + 1 < ts.size() && ts[k + 1] < t) ++k;
    if (t <= ts.front()) {
      g.values[i] = fs.front();
    } else if (t >= ts.back()) {
      g.values[i] = fs.back();
    } else {
      double w = (t - ts[k]) / (ts[k + 1] - ts[k]);
      g.values[i] = fs[k] * (1.0 - w) + fs[k + 1] * w;
    }
  }
  g.check_invariants();
  return g;
}

void grid_to_csv(const GridFunction& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require(out.good(), errc::engine_error, "cannot write " + path);
  out << "t,f\n";
  char buf[32];
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    double t = static_cast<double>(i) * g.step;
    auto r1 = std::to_chars(buf, buf + sizeof buf, t);
    out.write(buf, r1.ptr - buf);
    out.put(',');
    auto r2 = std::to_chars(buf, buf + sizeof buf, g.values[i]);
    out.write(buf, r2.ptr - buf);
    out.put('\n');
  }
}

} // namespace shockratio
