#include "gel/bounds.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "gel/chib.hpp"
#include "gel/editdist.hpp"
#include "gel/genspec.hpp"

namespace gel {

namespace {

std::int64_t choose2(std::int64_t x) { return x * (x - 1) / 2; }

void check_kc_range(int k, int c) {
  if (k < 1) throw std::invalid_argument("bounds need k >= 1");
  if (c < 0 || c > k) throw std::invalid_argument("bounds need 0 <= c <= k");
}

}  // namespace

std::int64_t turan_number(int n, int r) {
  if (n < 1) throw std::invalid_argument("turan_number needs n >= 1");
  if (r < 2) throw std::invalid_argument("turan_number needs r >= 2");
  int parts = r - 1;
  std::int64_t q = n / parts, rem = n % parts;
  return choose2(n) - rem * choose2(q + 1) - (parts - rem) * choose2(q);
}

double erdos_stone_estimate(int n, int chi) {
  if (n < 1) throw std::invalid_argument("erdos_stone_estimate needs n >= 1");
  if (chi == 2)
    throw std::domain_error(
        "bipartite case: the estimate degenerates to o(n^2)");
  if (chi < 2) throw std::invalid_argument("chromatic number must be >= 2");
  return (1.0 - 1.0 / (chi - 1)) * static_cast<double>(choose2(n));
}

Rational lower_bound_thm13(int n, int k) {
  if (k < 1) throw std::invalid_argument("lower_bound_thm13 needs k >= 1");
  return Rational(std::int64_t{n} * n, 4 * std::int64_t{k});
}

UpperBound upper_bound_thm14(int n, int k, int c_min, int c_max) {
  if (k < 1 || c_min < 0 || c_min > c_max || c_max > k)
    throw std::invalid_argument(
        "upper_bound_thm14 needs 0 <= c_min <= c_max <= k");
  std::int64_t pairs = choose2(n);
  UpperBound out;
  if (2 * c_min <= k && k <= 2 * c_max) {
    out.which = UbCase::ub1;
    out.exact = Rational(pairs, 2 * std::int64_t{k});
    out.has_exact = true;
    out.value = out.exact.to_double();
    return out;
  }
  out.which = UbCase::ub2;
  out.c0 = std::abs(2 * c_min - k) <= std::abs(2 * c_max - k) ? c_min : c_max;
  double x = static_cast<double>(out.c0) / k;
  out.value = 1.0 / (1.0 + 2.0 * std::sqrt(x * (1.0 - x))) *
              static_cast<double>(pairs) / k;
  return out;
}

Rational lub_value(const Rational& d, int n, int k, int c) {
  check_kc_range(k, c);
  if (d < Rational(0) || Rational(1) < d)
    throw std::invalid_argument("density must lie in [0, 1]");
  Rational pairs(choose2(n));
  Rational denom = d * Rational(c) + (Rational(1) - d) * Rational(k - c);
  if (denom == Rational(0)) return pairs / Rational(k);
  return d * (Rational(1) - d) / denom * pairs;
}

double lub_value_real(double d, int n, int k, int c) {
  check_kc_range(k, c);
  double pairs = static_cast<double>(choose2(n));
  double denom = d * c + (1.0 - d) * (k - c);
  if (denom == 0.0) return pairs / k;
  return d * (1.0 - d) / denom * pairs;
}

double ub2_worst_density(int k, int c) {
  check_kc_range(k, c);
  if (2 * c == k) return 0.5;
  return (k - c - std::sqrt(static_cast<double>(c) * (k - c))) / (k - 2 * c) +
         0.0;
}

std::vector<LubPoint> lub_curve(int n, int k, int c, int steps) {
  if (steps < 1) throw std::invalid_argument("lub_curve needs steps >= 1");
  std::vector<LubPoint> out;
  out.reserve(steps + 1);
  for (int i = 0; i <= steps; ++i) {
    Rational d(i, steps);
    out.push_back({d, lub_value(d, n, k, c)});
  }
  return out;
}

std::int64_t thm51_value(int n) {
  if (n < 3) throw std::invalid_argument("thm51_value needs n >= 3");
  return choose2((n + 1) / 2) + choose2(n / 2);
}

std::pair<std::int64_t, std::int64_t> thm52_bounds(int n) {
  if (n < 5) throw std::invalid_argument("thm52_bounds needs n >= 5");
  std::int64_t nn = std::int64_t{n} * n;
  return {(nn - 5 * n) / 4, (nn - n) / 4};
}

namespace {

void fill_exact(BoundsReport& rep, int n, const ForbiddenFamily& fam,
                const SearchLimits& limits, bool with_exact, int jobs) {
  if (!with_exact || n > 7) {
    rep.exact_status = "skipped";
    return;
  }
  try {
    rep.exact = dist_n_forb(n, fam, jobs, false, limits).distance;
    rep.exact_status = "ok";
  } catch (const budget_exceeded&) {
    rep.exact_status = "timeout";
  }
}

}  // namespace

BoundsReport bounds_report(int n, const Graph& h, const std::string& h_name,
                           const SearchLimits& limits, bool with_exact,
                           int jobs) {
  BoundsReport rep;
  rep.n = n;
  rep.h_name = h_name;
  int chi_b = binary_chromatic(h, limits);
  if (chi_b < 2)
    throw std::domain_error(
        "bounds are undefined when the forbidden graph has binary chromatic "
        "number 1");
  CMinMax cm = c_min_c_max(h, limits);
  rep.chi_b = chi_b;
  rep.k = cm.k;
  rep.c_min = cm.c_min;
  rep.c_max = cm.c_max;
  if (h.n() >= 2 && h.m() == choose2(h.n()))
    rep.turan_eq1 = choose2(n) - turan_number(n, h.n());
  rep.lb_thm13 = lower_bound_thm13(n, cm.k);
  rep.ub_thm14 = upper_bound_thm14(n, cm.k, cm.c_min, cm.c_max);
  int curve_c = rep.ub_thm14->which == UbCase::ub2 ? rep.ub_thm14->c0
                                                   : cm.c_min;
  rep.curve = lub_curve(n, cm.k, curve_c);
  if (h.n() == 3 && n >= 3) rep.thm51 = thm51_value(n);
  if (h.n() <= 5)
    fill_exact(rep, n, make_family({h}, FamilyMode::induced), limits,
               with_exact, jobs);
  else
    rep.exact_status = "skipped";
  return rep;
}

BoundsReport bounds_report_q(int n, const SearchLimits& limits,
                             bool with_exact, int jobs) {
  BoundsReport rep;
  rep.n = n;
  rep.h_name = "Q";
  if (n >= 5) rep.thm52 = thm52_bounds(n);
  fill_exact(rep, n, q_family(), limits, with_exact, jobs);
  return rep;
}

}  // namespace gel
