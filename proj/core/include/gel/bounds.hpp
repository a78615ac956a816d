#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gel/errors.hpp"
#include "gel/graph.hpp"
#include "gel/rational.hpp"

namespace gel {

// ex(n, K_r): edge count of the balanced complete (r-1)-partite graph.
// r >= 2, n >= 1.
std::int64_t turan_number(int n, int r);

// (1 - 1/(chi-1)) * C(n,2). Estimate only: the o(n^2) term is dropped.
// chi == 2 throws std::domain_error (bipartite case degenerates to o(n^2)).
double erdos_stone_estimate(int n, int chi);

// n^2/(4k), the asymptotic leading term; carries no finite-n guarantee.
Rational lower_bound_thm13(int n, int k);

enum class UbCase { ub1, ub2 };

struct UpperBound {
  double value = 0.0;
  UbCase which = UbCase::ub1;
  int c0 = -1;       // the endpoint used by the ub2 case
  Rational exact;    // exact rational form, present for ub1
  bool has_exact = false;
};

// C(n,2)/(2k) when c_min <= k/2 <= c_max; otherwise the density-adapted
// bound (1/(1+2*sqrt((c0/k)(1-c0/k)))) * C(n,2)/k at the endpoint c0 of
// {c_min, c_max} closest to k/2 (ties to the smaller).
UpperBound upper_bound_thm14(int n, int k, int c_min, int c_max);

// Expected-edit bound of the editor: d(1-d)/(dc+(1-d)(k-c)) * C(n,2);
// the degenerate inputs (d=0,c=k) and (d=1,c=0) give C(n,2)/k.
Rational lub_value(const Rational& d, int n, int k, int c);
double lub_value_real(double d, int n, int k, int c);

// argmax over d of lub_value: (k-c-sqrt(c(k-c)))/(k-2c), with the continuous
// limit 1/2 at k = 2c.
double ub2_worst_density(int k, int c);

struct LubPoint {
  Rational d;
  Rational value;
};
std::vector<LubPoint> lub_curve(int n, int k, int c, int steps = 100);

// C(ceil(n/2),2) + C(floor(n/2),2); n >= 3.
std::int64_t thm51_value(int n);

// (floor((n^2-5n)/4), floor((n^2-n)/4)); n >= 5.
std::pair<std::int64_t, std::int64_t> thm52_bounds(int n);

struct BoundsReport {
  int n = 0;
  std::string h_name;
  std::optional<int> chi_b;
  std::optional<int> k;
  std::optional<int> c_min;
  std::optional<int> c_max;
  std::optional<std::int64_t> turan_eq1;  // C(n,2) - ex(n, K_r), complete h
  std::optional<Rational> lb_thm13;       // labeled asymptotic
  std::optional<UpperBound> ub_thm14;
  std::vector<LubPoint> curve;  // at the c the upper bound uses
  std::optional<std::int64_t> thm51;  // 3-vertex h
  std::optional<std::pair<std::int64_t, std::int64_t>> thm52;  // Q family
  std::optional<int> exact;  // dist_n_forb when it fits the budget
  std::string exact_status;  // "ok", "timeout" or "skipped"
};

// Assembles every applicable quantity for forbidden graph h at order n.
// h must have chi_b >= 2 (throws std::domain_error otherwise, e.g. K_1).
BoundsReport bounds_report(int n, const Graph& h, const std::string& h_name,
                           const SearchLimits& limits = {},
                           bool with_exact = true, int jobs = 1);

// The 4-vertex/3-edge family variant: sandwich bounds plus the exact value.
BoundsReport bounds_report_q(int n, const SearchLimits& limits = {},
                             bool with_exact = true, int jobs = 1);

}  // namespace gel
