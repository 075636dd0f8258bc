#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "shockratio/dist.hpp"

namespace shockratio {

enum class SurvMethod { exact_enumeration, grid, monte_carlo, mixed_conditioning };

/// c_{0,x} .. c_{n_max,x} with logs. Underflow-prone products live in
/// log_values; values[] may flush to zero for large n and is derived from them.
struct SurvivalTable {
  double x = 0.0;
  std::vector<double> values;
  std::vector<double> log_values; // -inf allowed where c_n = 0
  SurvMethod method = SurvMethod::exact_enumeration;
  double truncation_error_bound = 0.0; // absolute bound per entry
  void check_invariants(double p0 = -1.0) const;
};

struct AtomTuple {
  std::vector<double> values; // non-decreasing
  double weight;              // total probability over all orderings
};

/// Finite positive-atom tuples with sum <= x, grouped by length.
struct AtomTupleIndex {
  double x = 0.0;
  std::vector<std::vector<AtomTuple>> by_length; // by_length[k-1] holds length-k tuples
};

/// Maximum number of strictly positive jumps a path can make while staying at
/// or below x: x/x_min - 1 when x/x_min is an integer not attained as an atom,
/// floor(x/x_min) otherwise.
int64_t m_x(const DiscreteSpec& spec, double x);

struct ExactOptions {
  uint64_t node_budget = 10'000'000; // enumeration guard
  double tail_tolerance = 1e-12;     // certified truncation for generator-backed specs
  std::size_t lattice_cap = 1u << 23; // max lattice cells for accumulating-atom specs
};

/// Exact survival probabilities for discrete shock laws.
/// Class C2/C1: binomial-weighted positive-tuple decomposition (exact).
/// Class C3 on an exact lattice: measure iteration with certified truncation.
SurvivalTable survival_exact(const DiscreteSpec& spec, double x, int n_max, const ExactOptions& opt = {});

/// Enumerates the positive-atom tuples behind survival_exact (C2-scale specs).
AtomTupleIndex enumerate_tuples(const DiscreteSpec& spec, double x, const ExactOptions& opt = {});

/// r[n] = values[n+1]/values[n]; entries with zero denominator are NaN and
/// flagged in `undefined`.
struct RatioSequence {
  std::vector<double> r;
  std::vector<bool> undefined;
};
RatioSequence ratio_sequence(const SurvivalTable& table);

/// d[n] = n (r[n] - p0) / (p0 m_x); converges to 1 for class C2.
std::vector<double> rate_law_deviation(const SurvivalTable& table, double p0, int64_t m_x);

/// (c_{n+1,x} - sum_{x_i < y1} c_{n,x-x_i} P[X=x_i]) / c_{n,x-y1}; the zero atom
/// participates in the subtracted sum. Converges to P[X = y1] at rate O(1/n).
double atom_mass_recover(const DiscreteSpec& spec, double x, double y1, int n, const ExactOptions& opt = {});

struct C3Report {
  std::vector<int> ns;
  std::vector<double> ratio_minus_p0;
  bool trend_decreasing = false; // |r_n - p0| decreasing across the sampled grid
  double truncation_error_bound = 0.0;
};

/// Ratio convergence report for accumulating-atom specs. No rate is asserted.
C3Report c3_ratio_limit_check(const DiscreteSpec& spec, double x, int n_max, const ExactOptions& opt = {});

} // namespace shockratio
