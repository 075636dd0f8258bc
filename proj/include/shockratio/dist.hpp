#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shockratio/errors.hpp"
#include "shockratio/grid.hpp"

namespace shockratio {

struct Atom {
  double value;
  double prob;
};

/// Rule generating the countable part of an atom set beyond the explicit head
/// list, with a closed-form bound on the mass it leaves out at any truncation.
struct TailSpec {
  enum class kind_t {
    dyadic,          ///< values 2^-k, probs proportional to ratio^-k (k >= 1)
    harmonic_ladder, ///< values 1+1/k and 2-1/k, probs 2^-(k+2); edge terms merged
  };
  kind_t kind = kind_t::dyadic;
  double ratio = 4.0;        // dyadic only: prob(2^-k) ~ ratio^-k
  double positive_mass = 0.5;// total mass carried by the generated atoms
  int truncate_k = 40;       // explicit expansion depth
  double x_inf = 0.0;        // infimum of generated values
  bool inf_attained = false; // whether x_inf is itself an atom
  std::optional<double> small_cdf_alpha; // declared alpha with F(t)-F(0) = O(t^alpha)

  double tail_mass_beyond(int k) const;
};

/// Exact integer-lattice representation of the atom values: value_i = num_i / den.
struct ExactLattice {
  int64_t den = 1;
  std::vector<int64_t> nums; // parallel to the explicit atom list
};

struct DiscreteSpec {
  double p0 = 0.0;
  std::vector<Atom> atoms;  // strictly increasing positive values
  std::optional<TailSpec> tail;
  double tail_mass_bound = 0.0; // mass beyond the explicit list (0 when closed)
  std::optional<ExactLattice> lattice;

  double x_min() const;      // infimum of positive atom values
  bool x_min_attained() const;
  double mass() const;       // p0 + sum probs + tail_mass_bound
  void check_invariants() const;
};

enum class DensityFamily {
  power_law_on_interval,
  gamma_like,
  constant_near_zero,
  shifted_two_sided_exponential, // f1: 0.5 e^{-|t-1|} on R
  shifted_damped_exponential,    // f2: c e^{-|t-1|}/(1+(t-1)^4) on R
  tabulated,
};

struct DensitySpec {
  DensityFamily family = DensityFamily::constant_near_zero;
  // power_law_on_interval
  double alpha = 1.0;
  double upper = 1.0;
  // gamma_like
  double shape_k = 1.0;
  double scale_theta = 1.0;
  // constant_near_zero: plateau c on [0, eps], then a linear ramp carrying the
  // remaining mass (absent when c*eps == 1).
  double c = 1.0;
  double eps = 1.0;
  // shifted_damped_exponential: normalizer, computed once by quadrature
  double f2_norm = 0.0;
  // tabulated
  GridFunction table;

  std::optional<double> rv_index_alpha; // density regularly varying of index alpha-1 at 0
  double support_lower = 0.0;           // -inf for the real-supported families
  bool c1_near_zero = true;
  bool deriv_monotone_near_zero = true;

  double pdf(double t) const;
  double dpdf(double t) const;  // exact derivative for analytic families
  double cdf(double t) const;
  double mean() const;
  double support_upper() const; // +inf when unbounded
  std::optional<singular_head> head() const;
  void check_invariants() const; // mass 1 within 1e-10 (quadrature check)
};

DensitySpec make_power_law(double alpha, double upper);
DensitySpec make_gamma_like(double shape_k, double scale_theta);
DensitySpec make_constant_near_zero(double c, double eps);
DensitySpec make_f1();
DensitySpec make_f2();
DensitySpec make_tabulated(GridFunction g);

enum class Kind { discrete, continuous, mixed };

struct ShockDistribution {
  Kind kind = Kind::discrete;
  std::optional<DiscreteSpec> discrete_part;
  std::optional<DensitySpec> continuous_part;
  double mix_weight_cont = 0.0; // Mixed only; parts are individually normalized

  void check_invariants() const;
};

ShockDistribution make_discrete(DiscreteSpec spec);
ShockDistribution make_continuous(DensitySpec spec);
ShockDistribution make_mixed(DensitySpec cont, DiscreteSpec disc, double weight_cont);

/// Two-point law {0: p0, v: 1-p0}; the running example throughout the tests.
DiscreteSpec make_two_point(double p0, double v);
/// p0 plus explicit atoms (values strictly increasing).
DiscreteSpec make_atomic(double p0, std::vector<Atom> atoms);
/// Atoms 2^-k accumulating at zero; probs ~ ratio^-k normalized to 1-p0.
DiscreteSpec make_dyadic(double p0, double ratio = 4.0, int truncate_k = 18);
/// The two-ladder law with atoms 1+1/k and 2-1/k (probs 2^-(k+2)), p0 = 1/2.
/// The k=1,2 edge terms are merged so that x_min = 1 is not attained.
DiscreteSpec make_harmonic_ladder(int truncate_k = 40);

enum class ClassId { C1, C2, C3, C4, C5, Unclassified };

struct ClassLabel {
  ClassId label = ClassId::Unclassified;
  std::vector<std::string> evidence;
};

const char* class_name(ClassId c);

/// Class membership per the C1..C5 taxonomy; `evidence` lists the decisive tests.
ClassLabel classify(const ShockDistribution& d);

/// t f'(t)/f(t); converges to alpha-1 as t->0+ for the regularly varying families.
double rv_index_probe(const DensitySpec& f, double t);

struct MonotoneCheckResult {
  bool passed = false;
  bool non_decreasing = false; // asserted direction
  double first_violation_t = 0.0;
  double violation_magnitude = 0.0;
  explicit operator bool() const { return passed; }
};

/// Checks that t -> t^theta f(t) is monotone on a geometric grid in (0, eps];
/// direction chosen by the sign of theta + (alpha - 1).
MonotoneCheckResult power_monotone_check(const DensitySpec& f, double theta, double eps, int grid_points);

/// F(t) - F(0): mass of (0, t]. Atoms at exactly t are included. For
/// generator-backed specs the certified tail contribution is added; fails with
/// tail_bound_too_loose when the bound exceeds `tol`.
double cdf_small(const ShockDistribution& d, double t, double tol = 1e-12);

} // namespace shockratio
