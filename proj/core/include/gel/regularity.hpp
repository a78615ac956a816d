#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gel/graph.hpp"
#include "gel/rational.hpp"

namespace gel {

struct PairDensity {
  int a_size = 0;
  int b_size = 0;
  std::int64_t edges_across = 0;
  Rational density;
};

// A and B are vertex bitmasks; they must be nonempty and disjoint.
PairDensity density(const Graph& g, std::uint64_t a, std::uint64_t b);

struct RegularityWitness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  Rational d_xy;
  Rational d_ab;
};

struct RegularityResult {
  bool regular = true;
  std::optional<RegularityWitness> witness;  // first violating pair found
};

// Exhaustive check of |d(X,Y) - d(A,B)| < eps over all X of A, Y of B with
// |X| > eps|A| and |Y| > eps|B| (strict thresholds; X = A qualifies whenever
// eps|A| < |A|). Exact rational comparisons throughout. |A|, |B| <= 16.
RegularityResult is_epsilon_regular(const Graph& g, std::uint64_t a,
                                    std::uint64_t b, const Rational& eps);

struct Equipartition {
  std::vector<int> exceptional;
  std::vector<std::vector<int>> clusters;  // equal sizes
};

// Uniform random equipartition: shuffled vertices, first n mod ell go to the
// exceptional set, the rest split into ell chunks.
Equipartition sample_equipartition(int n, int ell, std::uint64_t seed);

// Throws unless clusters are disjoint and equal-sized and, with eps given,
// the exceptional set has fewer than eps*n vertices.
void validate_equipartition(const Equipartition& eq, int n,
                            const std::optional<Rational>& eps = std::nullopt);

struct ConcentrationResult {
  int trials = 0;
  int passes = 0;
  double pass_fraction = 0.0;
  // per trial: least and greatest cluster-pair density observed
  std::vector<std::pair<double, double>> per_trial_min_max;
};

// Samples `trials` pairs (G(n,1/2), random equipartition into ell clusters);
// a trial passes iff every cluster-pair density lies strictly inside
// (1/2 - f, 1/2 + f), decided in exact integer arithmetic. Requires ell >= 2,
// n >= ell, 0 < f <= 1/2. Deterministic given seed.
ConcentrationResult concentration_experiment(int n, int ell, const Rational& f,
                                             int trials, std::uint64_t seed);

// Union bound 2 * 4^n * exp(-2 * (f * |S| * |T|)^2 / (|S| * |T|)) at
// |S| = |T| = eps_prime * n; reported as a formula value only.
double chernoff_bound_value(int n, double eps_prime, double f);

}  // namespace gel
