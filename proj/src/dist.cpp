#include "shockratio/dist.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "shockratio/quadrature.hpp"
#include "shockratio/special.hpp"

namespace shockratio {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

int64_t gcd64(int64_t a, int64_t b) {
  while (b) {
    int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// lcm(1..n), or 0 on overflow
int64_t lcm_upto(int n) {
  int64_t l = 1;
  for (int k = 2; k <= n; ++k) {
    int64_t g = gcd64(l, k);
    if (l > std::numeric_limits<int64_t>::max() / (k / g)) return 0;
    l *= k / g;
  }
  return l;
}
} // namespace

double TailSpec::tail_mass_beyond(int k) const {
  switch (kind) {
    case kind_t::dyadic: {
      // probs positive_mass * (ratio-1) * ratio^-j summed over j > k
      return positive_mass * std::pow(ratio, -static_cast<double>(k));
    }
    case kind_t::harmonic_ladder: {
      // family 1: 2^-(j+2) beyond k; family 2: 2^-j beyond k
      double f1 = std::pow(2.0, -(k + 2));
      double f2 = std::pow(2.0, -k);
      return f1 + f2;
    }
  }
  return 0.0;
}

double DiscreteSpec::x_min() const {
  double lo = atoms.empty() ? kInf : atoms.front().value;
  if (tail) lo = std::min(lo, tail->x_inf);
  return lo;
}

bool DiscreteSpec::x_min_attained() const {
  if (tail && tail->x_inf < (atoms.empty() ? kInf : atoms.front().value)) return tail->inf_attained;
  return !atoms.empty();
}

double DiscreteSpec::mass() const {
  double s = p0 + tail_mass_bound;
  for (const auto& a : atoms) s += a.prob;
  return s;
}

void DiscreteSpec::check_invariants() const {
  require(p0 >= 0 && p0 <= 1, errc::invalid_distribution, "p0 out of [0,1]");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    require(atoms[i].value > 0, errc::invalid_distribution, "atom values must be strictly positive");
    require(atoms[i].prob > 0, errc::invalid_distribution, "atom probs must be strictly positive");
    if (i) require(atoms[i].value > atoms[i - 1].value, errc::invalid_distribution, "atom values must be strictly increasing");
  }
  require(std::fabs(mass() - 1.0) <= 1e-12, errc::invalid_distribution, "discrete mass must sum to 1 within 1e-12");
  if (lattice) require(lattice->nums.size() == atoms.size(), errc::invalid_distribution, "lattice size mismatch");
}

// ---------------------------------------------------------------------------
// Density families
// ---------------------------------------------------------------------------

namespace {
double const_ramp_end(double c, double eps) {
  double plateau = c * eps;
  require(plateau <= 1.0 + 1e-15, errc::invalid_distribution, "constant_near_zero: c*eps > 1");
  double rem = std::max(0.0, 1.0 - plateau);
  if (rem <= 1e-15) return eps;
  return eps + 2.0 * rem / c;
}
} // namespace

double DensitySpec::pdf(double t) const {
  switch (family) {
    case DensityFamily::power_law_on_interval:
      if (t <= 0 || t > upper) return 0.0;
      return alpha * std::pow(t, alpha - 1.0) / std::pow(upper, alpha);
    case DensityFamily::gamma_like:
      if (t <= 0) return 0.0;
      return std::exp((shape_k - 1.0) * std::log(t) - t / scale_theta - std::lgamma(shape_k) -
                      shape_k * std::log(scale_theta));
    case DensityFamily::constant_near_zero: {
      if (t < 0) return 0.0;
      if (t <= eps) return c;
      double b = const_ramp_end(c, eps);
      if (t >= b) return 0.0;
      return c * (b - t) / (b - eps);
    }
    case DensityFamily::shifted_two_sided_exponential:
      return 0.5 * std::exp(-std::fabs(t - 1.0));
    case DensityFamily::shifted_damped_exponential: {
      double u = t - 1.0;
      return f2_norm * std::exp(-std::fabs(u)) / (1.0 + u * u * u * u);
    }
    case DensityFamily::tabulated:
      return table.at(t);
  }
  return 0.0;
}

double DensitySpec::dpdf(double t) const {
  switch (family) {
    case DensityFamily::power_law_on_interval:
      if (t <= 0 || t > upper) return 0.0;
      return alpha * (alpha - 1.0) * std::pow(t, alpha - 2.0) / std::pow(upper, alpha);
    case DensityFamily::gamma_like:
      return pdf(t) * ((shape_k - 1.0) / t - 1.0 / scale_theta);
    case DensityFamily::constant_near_zero: {
      if (t < 0 || t <= eps) return 0.0;
      double b = const_ramp_end(c, eps);
      if (t >= b) return 0.0;
      return -c / (b - eps);
    }
    case DensityFamily::shifted_two_sided_exponential:
      return (t < 1.0 ? 1.0 : -1.0) * pdf(t);
    case DensityFamily::shifted_damped_exponential: {
      double u = t - 1.0;
      double sgn = u < 0 ? 1.0 : -1.0;
      return pdf(t) * (sgn - 4.0 * u * u * u / (1.0 + u * u * u * u));
    }
    case DensityFamily::tabulated: {
      double h = table.step;
      require(t >= h && t + h <= table.x_max(), errc::non_differentiable,
              "tabulated density: derivative undefined at boundary cells");
      return (table.at(t + h) - table.at(t - h)) / (2.0 * h);
    }
  }
  return 0.0;
}

double DensitySpec::cdf(double t) const {
  switch (family) {
    case DensityFamily::power_law_on_interval:
      if (t <= 0) return 0.0;
      if (t >= upper) return 1.0;
      return std::pow(t / upper, alpha);
    case DensityFamily::gamma_like:
      if (t <= 0) return 0.0;
      return reg_lower_gamma(shape_k, t / scale_theta);
    case DensityFamily::constant_near_zero: {
      if (t <= 0) return 0.0;
      if (t <= eps) return c * t;
      double b = const_ramp_end(c, eps);
      if (t >= b) return 1.0;
      double u = t - eps;
      return c * eps + c * (u - 0.5 * u * u / (b - eps));
    }
    case DensityFamily::shifted_two_sided_exponential:
      return t < 1.0 ? 0.5 * std::exp(t - 1.0) : 1.0 - 0.5 * std::exp(1.0 - t);
    case DensityFamily::shifted_damped_exponential: {
      auto f = [this](double y) { return pdf(y); };
      if (t <= 1.0) return integrate_from_minus_inf(f, t, 1e-13);
      return integrate_from_minus_inf(f, 1.0, 1e-13) + integrate(f, 1.0, t, 1e-13);
    }
    case DensityFamily::tabulated:
      return table.integral_to(t);
  }
  return 0.0;
}

double DensitySpec::mean() const {
  switch (family) {
    case DensityFamily::power_law_on_interval:
      return alpha * upper / (alpha + 1.0);
    case DensityFamily::gamma_like:
      return shape_k * scale_theta;
    case DensityFamily::constant_near_zero: {
      double b = const_ramp_end(c, eps);
      double m = 0.5 * c * eps * eps;
      if (b > eps) {
        double w = b - eps;
        // int_eps^b t * c (b-t)/w dt
        m += c / w * (b * 0.5 * (b * b - eps * eps) - (b * b * b - eps * eps * eps) / 3.0);
      }
      return m;
    }
    case DensityFamily::shifted_two_sided_exponential:
    case DensityFamily::shifted_damped_exponential:
      return 1.0; // symmetric about 1
    case DensityFamily::tabulated: {
      double s = 0.0;
      for (std::size_t i = 1; i < table.values.size(); ++i) {
        double t0 = (i - 1) * table.step, t1 = i * table.step;
        s += 0.5 * table.step * (t0 * table.values[i - 1] + t1 * table.values[i]);
      }
      return s;
    }
  }
  return 0.0;
}

double DensitySpec::support_upper() const {
  switch (family) {
    case DensityFamily::power_law_on_interval: return upper;
    case DensityFamily::gamma_like: return kInf;
    case DensityFamily::constant_near_zero: return const_ramp_end(c, eps);
    case DensityFamily::shifted_two_sided_exponential:
    case DensityFamily::shifted_damped_exponential: return kInf;
    case DensityFamily::tabulated: return table.x_max();
  }
  return kInf;
}

std::optional<singular_head> DensitySpec::head() const {
  switch (family) {
    case DensityFamily::power_law_on_interval:
      return singular_head{alpha / std::pow(upper, alpha), alpha};
    case DensityFamily::gamma_like:
      return singular_head{std::exp(-std::lgamma(shape_k) - shape_k * std::log(scale_theta)), shape_k};
    case DensityFamily::constant_near_zero:
      return singular_head{c, 1.0};
    case DensityFamily::tabulated:
      return table.head;
    default:
      return std::nullopt;
  }
}

void DensitySpec::check_invariants() const {
  double mass;
  if (support_lower == 0.0) {
    auto h = head();
    double lo = 0.0;
    double start = 0.0;
    if (h) {
      start = 1e-7 * std::min(1.0, std::isfinite(support_upper()) ? support_upper() : 1.0);
      lo = h->coef * std::pow(start, h->exponent) / h->exponent;
    }
    double hi = std::isfinite(support_upper()) ? support_upper() : 0.0;
    auto f = [this](double t) { return pdf(t); };
    mass = std::isfinite(support_upper()) ? lo + integrate(f, start, hi, 1e-12)
                                          : lo + integrate(f, start, 1.0, 1e-12) + integrate_to_inf(f, 1.0, 1e-12);
  } else {
    auto f = [this](double t) { return pdf(t); };
    mass = integrate_from_minus_inf(f, 1.0, 1e-12) + integrate_to_inf(f, 1.0, 1e-12);
  }
  require(std::fabs(mass - 1.0) <= 1e-10, errc::invalid_distribution,
          "density mass " + std::to_string(mass) + " not 1 within 1e-10");
  if (rv_index_alpha) {
    // declared index consistency: t f'(t)/f(t) -> alpha-1
    double probe = rv_index_probe(*this, 1e-8);
    require(std::fabs(probe - (*rv_index_alpha - 1.0)) <= 1e-3, errc::invalid_distribution,
            "declared rv index inconsistent with density derivative at 1e-8");
  }
}

DensitySpec make_power_law(double alpha, double upper) {
  require(alpha > 0 && upper > 0, errc::invalid_distribution, "power law needs alpha>0, upper>0");
  DensitySpec d;
  d.family = DensityFamily::power_law_on_interval;
  d.alpha = alpha;
  d.upper = upper;
  d.rv_index_alpha = alpha;
  d.c1_near_zero = true;
  d.deriv_monotone_near_zero = true;
  return d;
}

DensitySpec make_gamma_like(double shape_k, double scale_theta) {
  require(shape_k > 0 && scale_theta > 0, errc::invalid_distribution, "gamma needs k>0, theta>0");
  DensitySpec d;
  d.family = DensityFamily::gamma_like;
  d.shape_k = shape_k;
  d.scale_theta = scale_theta;
  d.rv_index_alpha = shape_k;
  return d;
}

DensitySpec make_constant_near_zero(double c, double eps) {
  require(c > 0 && eps > 0, errc::invalid_distribution, "constant_near_zero needs c>0, eps>0");
  DensitySpec d;
  d.family = DensityFamily::constant_near_zero;
  d.c = c;
  d.eps = eps;
  const_ramp_end(c, eps); // validates c*eps <= 1
  d.rv_index_alpha = 1.0;
  return d;
}

DensitySpec make_f1() {
  DensitySpec d;
  d.family = DensityFamily::shifted_two_sided_exponential;
  d.support_lower = -kInf;
  d.rv_index_alpha = std::nullopt;
  return d;
}

DensitySpec make_f2() {
  DensitySpec d;
  d.family = DensityFamily::shifted_damped_exponential;
  d.support_lower = -kInf;
  d.rv_index_alpha = std::nullopt;
  // normalizer: 1 / (2 int_0^inf e^-u/(1+u^4) du), to 1e-12
  auto g = [](double u) { return std::exp(-u) / (1.0 + u * u * u * u); };
  double half = integrate(g, 0.0, 20.0, 1e-14) + integrate_to_inf(g, 20.0, 1e-14);
  d.f2_norm = 1.0 / (2.0 * half);
  return d;
}

DensitySpec make_tabulated(GridFunction g) {
  g.check_invariants();
  DensitySpec d;
  d.family = DensityFamily::tabulated;
  d.table = std::move(g);
  d.c1_near_zero = false;
  d.deriv_monotone_near_zero = false;
  return d;
}

// ---------------------------------------------------------------------------
// Distributions
// ---------------------------------------------------------------------------

void ShockDistribution::check_invariants() const {
  switch (kind) {
    case Kind::discrete:
      require(discrete_part && !continuous_part, errc::invalid_distribution, "discrete kind needs exactly the discrete part");
      discrete_part->check_invariants();
      break;
    case Kind::continuous:
      require(continuous_part && !discrete_part, errc::invalid_distribution, "continuous kind needs exactly the continuous part");
      continuous_part->check_invariants();
      break;
    case Kind::mixed:
      require(continuous_part && discrete_part, errc::invalid_distribution, "mixed kind needs both parts");
      require(mix_weight_cont > 0 && mix_weight_cont < 1, errc::invalid_distribution, "mix weight must be in (0,1)");
      continuous_part->check_invariants();
      discrete_part->check_invariants();
      break;
  }
}

ShockDistribution make_discrete(DiscreteSpec spec) {
  ShockDistribution d;
  d.kind = Kind::discrete;
  d.discrete_part = std::move(spec);
  d.check_invariants();
  return d;
}

ShockDistribution make_continuous(DensitySpec spec) {
  ShockDistribution d;
  d.kind = Kind::continuous;
  d.continuous_part = std::move(spec);
  d.check_invariants();
  return d;
}

ShockDistribution make_mixed(DensitySpec cont, DiscreteSpec disc, double weight_cont) {
  ShockDistribution d;
  d.kind = Kind::mixed;
  d.continuous_part = std::move(cont);
  d.discrete_part = std::move(disc);
  d.mix_weight_cont = weight_cont;
  d.check_invariants();
  return d;
}

DiscreteSpec make_two_point(double p0, double v) { return make_atomic(p0, {{v, 1.0 - p0}}); }

DiscreteSpec make_atomic(double p0, std::vector<Atom> atoms) {
  DiscreteSpec s;
  s.p0 = p0;
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
  s.atoms = std::move(atoms);
  // exact lattice when the values are small-denominator rationals
  int64_t den = 1;
  bool exact = true;
  for (const auto& a : s.atoms) {
    double v = a.value;
    int64_t best_d = 0;
    for (int64_t d : {1LL, 2LL, 4LL, 5LL, 8LL, 10LL, 16LL, 20LL, 25LL, 50LL, 100LL, 1000LL, 10000LL}) {
      double n = v * static_cast<double>(d);
      if (std::fabs(n - std::round(n)) < 1e-12 && std::fabs(n) < 9e15) {
        best_d = d;
        break;
      }
    }
    if (!best_d) {
      exact = false;
      break;
    }
    int64_t g = gcd64(den, best_d);
    den = den / g * best_d;
  }
  if (exact) {
    ExactLattice lat;
    lat.den = den;
    for (const auto& a : s.atoms) lat.nums.push_back(static_cast<int64_t>(std::llround(a.value * static_cast<double>(den))));
    s.lattice = std::move(lat);
  }
  s.check_invariants();
  return s;
}

DiscreteSpec make_dyadic(double p0, double ratio, int truncate_k) {
  require(ratio > 1.0, errc::invalid_distribution, "dyadic tail ratio must exceed 1");
  require(truncate_k >= 1 && truncate_k <= 62, errc::invalid_distribution, "dyadic truncation depth out of range");
  DiscreteSpec s;
  s.p0 = p0;
  double pos = 1.0 - p0;
  // prob(2^-k) = pos * (ratio-1) * ratio^-k  (geometric, sums to pos)
  for (int k = truncate_k; k >= 1; --k)
    s.atoms.push_back({std::pow(2.0, -k), pos * (ratio - 1.0) * std::pow(ratio, -k)});
  TailSpec tail;
  tail.kind = TailSpec::kind_t::dyadic;
  tail.ratio = ratio;
  tail.positive_mass = pos;
  tail.truncate_k = truncate_k;
  tail.x_inf = 0.0;
  tail.inf_attained = false;
  tail.small_cdf_alpha = std::log(ratio) / std::log(2.0); // cdf near 0 behaves like t^{log2 ratio}
  s.tail = tail;
  s.tail_mass_bound = pos * std::pow(ratio, -truncate_k);
  ExactLattice lat;
  lat.den = int64_t(1) << truncate_k;
  for (const auto& a : s.atoms) lat.nums.push_back(static_cast<int64_t>(std::llround(a.value * static_cast<double>(lat.den))));
  s.lattice = std::move(lat);
  s.check_invariants();
  return s;
}

DiscreteSpec make_harmonic_ladder(int truncate_k) {
  require(truncate_k >= 4 && truncate_k <= 45, errc::invalid_distribution, "ladder truncation depth out of range");
  DiscreteSpec s;
  s.p0 = 0.5;
  // 1 + 1/k for k >= 1 with prob 2^-(k+2); 2 - 1/k for k >= 3 with prob 2^-k.
  // Total positive mass: 1/4 + 1/4 = 1/2.
  std::vector<Atom> atoms;
  for (int k = 1; k <= truncate_k; ++k) atoms.push_back({1.0 + 1.0 / k, std::pow(2.0, -(k + 2))});
  for (int k = 3; k <= truncate_k; ++k) atoms.push_back({2.0 - 1.0 / k, std::pow(2.0, -k)});
  std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
  s.atoms = std::move(atoms);
  TailSpec tail;
  tail.kind = TailSpec::kind_t::harmonic_ladder;
  tail.truncate_k = truncate_k;
  tail.x_inf = 1.0;
  tail.inf_attained = false;
  s.tail = tail;
  s.tail_mass_bound = tail.tail_mass_beyond(truncate_k);
  int64_t den = lcm_upto(truncate_k);
  require(den > 0, errc::invalid_distribution, "ladder lattice denominator overflow");
  ExactLattice lat;
  lat.den = den;
  for (const auto& a : s.atoms) lat.nums.push_back(static_cast<int64_t>(std::llround(a.value * static_cast<double>(den))));
  s.lattice = std::move(lat);
  s.check_invariants();
  return s;
}

// ---------------------------------------------------------------------------
// Operations
// ---------------------------------------------------------------------------

const char* class_name(ClassId c) {
  switch (c) {
    case ClassId::C1: return "C1";
    case ClassId::C2: return "C2";
    case ClassId::C3: return "C3";
    case ClassId::C4: return "C4";
    case ClassId::C5: return "C5";
    case ClassId::Unclassified: return "Unclassified";
  }
  return "?";
}

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_distribution: return "InvalidDistribution";
    case errc::non_differentiable: return "NonDifferentiable";
    case errc::tail_bound_too_loose: return "TailBoundTooLoose";
    case errc::not_class_c2: return "NotClassC2";
    case errc::combinatorial_blowup: return "CombinatorialBlowup";
    case errc::hypothesis_violated: return "HypothesisViolated";
    case errc::not_an_atom: return "NotAnAtom";
    case errc::resolution_too_coarse: return "ResolutionTooCoarse";
    case errc::window_invalid: return "WindowInvalid";
    case errc::mgf_undefined: return "MgfUndefined";
    case errc::target_out_of_range: return "TargetOutOfRange";
    case errc::condition_failed: return "ConditionFailed";
    case errc::n_too_small: return "NTooSmall";
    case errc::constants_out_of_order: return "ConstantsOutOfOrder";
    case errc::eps_not_valid: return "EpsNotValid";
    case errc::tilt_not_samplable: return "TiltNotSamplable";
    case errc::parse_error: return "ParseError";
    case errc::unsupported_combination: return "UnsupportedCombination";
    case errc::engine_error: return "EngineError";
  }
  return "Error";
}

namespace {
bool density_c4_eligible(const DensitySpec& f, std::vector<std::string>& ev) {
  if (f.support_lower != 0.0) {
    ev.push_back("support not [0,inf): outside C4");
    return false;
  }
  if (!f.rv_index_alpha) {
    ev.push_back("no declared regular-variation index");
    return false;
  }
  if (!f.c1_near_zero || !f.deriv_monotone_near_zero) {
    ev.push_back("family metadata lacks C1 smoothness / monotone derivative near 0");
    return false;
  }
  std::ostringstream os;
  os << "declared rv index alpha=" << *f.rv_index_alpha << ", C1 with monotone f' near 0";
  ev.push_back(os.str());
  double probe = rv_index_probe(f, 1e-8);
  std::ostringstream os2;
  os2 << "probe t f'/f at 1e-8 = " << probe << " vs alpha-1 = " << (*f.rv_index_alpha - 1.0);
  ev.push_back(os2.str());
  return true;
}
} // namespace

ClassLabel classify(const ShockDistribution& d) {
  d.check_invariants();
  ClassLabel out;
  switch (d.kind) {
    case Kind::discrete: {
      const auto& s = *d.discrete_part;
      // canonical sort is enforced by the type invariant
      double xm = s.x_min();
      if (s.p0 == 0.0 && xm > 0) {
        out.label = ClassId::C1;
        out.evidence.push_back("support bounded away from zero (no zero atom, x_min=" + std::to_string(xm) + ")");
      } else if (s.p0 > 0 && xm > 0) {
        out.label = ClassId::C2;
        out.evidence.push_back("zero atom present (p0=" + std::to_string(s.p0) + ")");
        out.evidence.push_back("x_min=" + std::to_string(xm) + ">0" + (s.x_min_attained() ? " (attained)" : " (not attained)"));
      } else if (xm == 0.0 && s.tail && s.tail->small_cdf_alpha) {
        double alpha = *s.tail->small_cdf_alpha;
        // O(t^alpha) probe on a dyadic grid of thresholds
        double worst = 0.0;
        double base = 0.0;
        for (int j = 2; j <= 16; ++j) {
          double t = std::pow(2.0, -j);
          double r = cdf_small(d, t, 1e-9) / std::pow(t, alpha);
          if (j == 2) base = r;
          worst = std::max(worst, r);
        }
        if (base > 0 && worst <= 64.0 * base) {
          out.label = ClassId::C3;
          out.evidence.push_back("x_min = 0 (atoms accumulate at the origin)");
          std::ostringstream os;
          os << "F(t)-F(0) = O(t^" << alpha << ") verified on a dyadic grid (sup ratio " << worst << ")";
          out.evidence.push_back(os.str());
          out.evidence.push_back(s.p0 > 0 ? "sub-case: origin is an atom (p0>0)" : "sub-case: origin is not an atom (p0=0)");
        } else {
          out.evidence.push_back("x_min = 0 but the declared O(t^alpha) bound failed the numeric probe");
        }
      } else {
        out.evidence.push_back("x_min = 0 without a certified small-cdf exponent");
      }
      break;
    }
    case Kind::continuous: {
      const auto& f = *d.continuous_part;
      if (f.support_lower != 0.0) {
        out.evidence.push_back("real-supported density: outside the nonnegative-shock classes (large-deviation regime)");
        break;
      }
      if (density_c4_eligible(f, out.evidence)) out.label = ClassId::C4;
      break;
    }
    case Kind::mixed: {
      const auto& f = *d.continuous_part;
      const auto& s = *d.discrete_part;
      bool cont_ok = density_c4_eligible(f, out.evidence);
      double xm = s.x_min();
      if (cont_ok && xm > 0 && s.p0 == 0.0) {
        out.label = ClassId::C5;
        out.evidence.push_back("atoms bounded away from zero (x_min=" + std::to_string(xm) + ")");
      } else if (s.p0 > 0) {
        out.evidence.push_back("zero atom present: mixed law outside C5");
      } else {
        out.evidence.push_back("atoms not bounded away from zero");
      }
      break;
    }
  }
  return out;
}

double rv_index_probe(const DensitySpec& f, double t) {
  require(t > 0, errc::invalid_distribution, "probe point must be positive");
  double p = f.pdf(t);
  require(p > 0, errc::invalid_distribution, "probe point outside support");
  return t * f.dpdf(t) / p;
}

MonotoneCheckResult power_monotone_check(const DensitySpec& f, double theta, double eps, int grid_points) {
  require(grid_points >= 2, errc::invalid_distribution, "grid_points must be >= 2");
  require(eps > 0, errc::invalid_distribution, "eps must be positive");
  double beta = f.rv_index_alpha ? *f.rv_index_alpha - 1.0 : 0.0;
  bool non_decreasing = theta + beta >= 0;
  MonotoneCheckResult res;
  res.non_decreasing = non_decreasing;
  // geometric grid biased toward 0 where the power behavior lives
  double lo = eps * 1e-6;
  double r = std::pow(eps / lo, 1.0 / (grid_points - 1));
  double prev_t = lo;
  double prev_v = std::pow(lo, theta) * f.pdf(lo);
  for (int i = 1; i < grid_points; ++i) {
    double t = lo * std::pow(r, i);
    double v = std::pow(t, theta) * f.pdf(t);
    double diff = v - prev_v;
    if ((non_decreasing && diff < -1e-12 * std::max(std::fabs(v), std::fabs(prev_v))) ||
        (!non_decreasing && diff > 1e-12 * std::max(std::fabs(v), std::fabs(prev_v)))) {
      res.passed = false;
      res.first_violation_t = t;
      res.violation_magnitude = std::fabs(diff);
      return res;
    }
    prev_t = t;
    prev_v = v;
  }
  (void)prev_t;
  res.passed = true;
  return res;
}

namespace {
// closed-form mass of generated atoms with value <= t (beyond the explicit list)
double tail_cdf_exact(const TailSpec& tail, int from_k, double t) {
  switch (tail.kind) {
    case TailSpec::kind_t::dyadic: {
      // values 2^-k for k > from_k are all < 2^-from_k
      if (t <= 0) return 0.0;
      int jmin = std::max(from_k + 1, static_cast<int>(std::ceil(-std::log2(t) - 1e-12)));
      // sum_{k >= jmin} pos*(ratio-1)*ratio^-k = pos*ratio^{-(jmin-1)}
      return tail.positive_mass * std::pow(tail.ratio, -(jmin - 1));
    }
    case TailSpec::kind_t::harmonic_ladder: {
      // beyond k=K: values 1+1/k (<= 1 + 1/(K+1)) and 2-1/k (in [2-1/(K+1), 2))
      double m = 0.0;
      int K = from_k;
      if (t >= 1.0) {
        // 1+1/k <= t  <=>  k >= 1/(t-1)
        int kmin = t >= 2.0 ? 1 : static_cast<int>(std::ceil(1.0 / (t - 1.0) - 1e-12));
        kmin = std::max(kmin, K + 1);
        m += std::pow(2.0, -(kmin + 1)); // sum_{k>=kmin} 2^-(k+2)
      }
      if (t >= 2.0) {
        m += std::pow(2.0, -K); // all 2-1/k atoms beyond K
      } else if (t > 2.0 - 1.0 / (K + 1)) {
        // 2-1/k <= t  <=>  k <= 1/(2-t)
        int kmax = static_cast<int>(std::floor(1.0 / (2.0 - t) + 1e-12));
        if (kmax > K) m += std::pow(2.0, -K) - std::pow(2.0, -kmax); // sum_{K<k<=kmax} 2^-k
      }
      return m;
    }
  }
  return 0.0;
}
} // namespace

double cdf_small(const ShockDistribution& d, double t, double tol) {
  require(t >= 0, errc::invalid_distribution, "t must be nonnegative");
  switch (d.kind) {
    case Kind::discrete: {
      const auto& s = *d.discrete_part;
      double m = 0.0;
      for (const auto& a : s.atoms) {
        if (a.value <= t) m += a.prob;
        else break;
      }
      if (s.tail) {
        m += tail_cdf_exact(*s.tail, s.tail->truncate_k, t);
      } else if (s.tail_mass_bound > 0) {
        require(s.tail_mass_bound <= tol, errc::tail_bound_too_loose,
                "unstructured tail mass exceeds the requested tolerance");
      }
      return m;
    }
    case Kind::continuous:
      return d.continuous_part->cdf(t) - d.continuous_part->cdf(0.0);
    case Kind::mixed: {
      double w = d.mix_weight_cont;
      ShockDistribution disc = ShockDistribution{Kind::discrete, d.discrete_part, std::nullopt, 0.0};
      return w * (d.continuous_part->cdf(t) - d.continuous_part->cdf(0.0)) + (1.0 - w) * cdf_small(disc, t, tol);
    }
  }
  return 0.0;
}

} // namespace shockratio
