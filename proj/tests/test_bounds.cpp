#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <stdexcept>

#include "gel/bounds.hpp"
#include "gel/editdist.hpp"
#include "gel/graph.hpp"

using namespace gel;

TEST_CASE("extremal edge counts") {
  for (int n = 1; n <= 12; ++n) CHECK(turan_number(n, 2) == 0);
  for (int n = 1; n <= 12; ++n)
    CHECK(turan_number(n, 3) == static_cast<std::int64_t>(n) * n / 4);
  CHECK(turan_number(7, 4) == 16);
  CHECK(turan_number(6, 4) == 12);
  CHECK(turan_number(3, 4) == 3);
  CHECK_THROWS_AS(turan_number(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(turan_number(0, 3), std::invalid_argument);
}

TEST_CASE("complete host deletion distance meets the extremal count") {
  for (int r : {3, 4})
    for (int n = 4; n <= 7; ++n) {
      ForbiddenFamily f =
          make_family({complete_graph(r)}, FamilyMode::subgraph);
      std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
      CHECK(deletion_only_dist(complete_graph(n), f) ==
            pairs - turan_number(n, r));
    }
}

TEST_CASE("dense family estimate") {
  CHECK(erdos_stone_estimate(10, 3) == doctest::Approx(0.5 * 45));
  CHECK(erdos_stone_estimate(8, 5) == doctest::Approx(0.75 * 28));
  CHECK_THROWS_AS(erdos_stone_estimate(10, 2), std::domain_error);
  CHECK_THROWS_AS(erdos_stone_estimate(10, 1), std::invalid_argument);
}

TEST_CASE("asymptotic lower bound") {
  CHECK(lower_bound_thm13(6, 1) == Rational(9));
  CHECK(lower_bound_thm13(7, 2) == Rational(49, 8));
  CHECK_THROWS_AS(lower_bound_thm13(6, 0), std::invalid_argument);
}

TEST_CASE("upper bound selects its case from the feasible range") {
  UpperBound flat = upper_bound_thm14(6, 1, 0, 1);
  CHECK(flat.which == UbCase::ub1);
  REQUIRE(flat.has_exact);
  CHECK(flat.exact == Rational(15, 2));
  CHECK(flat.value == doctest::Approx(7.5));

  // range pinned at c = 0: bound degrades to C(n,2)/2 at density 1/2
  UpperBound low = upper_bound_thm14(6, 2, 0, 0);
  CHECK(low.which == UbCase::ub2);
  CHECK(low.c0 == 0);
  CHECK(low.value == doctest::Approx(15.0 / 2));

  UpperBound skew = upper_bound_thm14(8, 3, 2, 3);
  CHECK(skew.which == UbCase::ub2);
  CHECK(skew.c0 == 2);
  CHECK(skew.value == doctest::Approx(28.0 / (3 + 2 * std::sqrt(2.0))));

  // never worse than pairs/k on any feasible configuration
  for (int k = 1; k <= 5; ++k)
    for (int cmin = 0; cmin <= k; ++cmin)
      for (int cmax = cmin; cmax <= k; ++cmax) {
        UpperBound ub = upper_bound_thm14(9, k, cmin, cmax);
        CHECK(ub.value <= 36.0 / k + 1e-9);
        if (2 * cmin <= k && k <= 2 * cmax)
          CHECK(ub.which == UbCase::ub1);
        else
          CHECK(ub.which == UbCase::ub2);
      }
  CHECK_THROWS_AS(upper_bound_thm14(6, 2, 2, 1), std::invalid_argument);
}

TEST_CASE("editor bound curve") {
  // exact and floating evaluations agree
  for (int num = 0; num <= 20; ++num) {
    Rational d(num, 20);
    double exact = lub_value(d, 9, 3, 1).to_double();
    CHECK(std::abs(exact - lub_value_real(num / 20.0, 9, 3, 1)) < 1e-9);
  }
  // worst densities, with their closed forms
  CHECK(ub2_worst_density(2, 1) == doctest::Approx(0.5));
  CHECK(ub2_worst_density(1, 0) == doctest::Approx(1.0));
  CHECK(ub2_worst_density(3, 3) == doctest::Approx(0.0));
  CHECK(ub2_worst_density(3, 1) == doctest::Approx(2.0 - std::sqrt(2.0)));

  for (int k = 1; k <= 4; ++k)
    for (int c = 0; c <= k; ++c) {
      double dstar = ub2_worst_density(k, c);
      double peak = lub_value_real(dstar, 8, k, c);
      for (double d = 0.0; d <= 1.0; d += 0.01)
        CHECK(lub_value_real(d, 8, k, c) <= peak + 1e-9);
      if (2 * c != k) {
        double cc = c, kk = k;
        double closed =
            (kk - 2 * std::sqrt(cc * (kk - cc))) / ((kk - 2 * cc) * (kk - 2 * cc)) * 28;
        CHECK(peak == doctest::Approx(closed));
      }
    }

  auto curve = lub_curve(6, 1, 0);
  REQUIRE(curve.size() == 101);
  CHECK(curve.front().d == Rational(0));
  CHECK(curve.back().d == Rational(1));
  CHECK(curve.front().value == Rational(0));
  CHECK(curve[50].value == Rational(15, 2));
  CHECK(curve.back().value == Rational(15));
  for (std::size_t i = 1; i < curve.size(); ++i)
    CHECK(curve[i - 1].d < curve[i].d);
}

TEST_CASE("half pairs threshold for the flat bound") {
  // with c <= k/2 the editor bound stays within pairs/(2k) exactly on
  // [0, 1/2] and [1 - c/k, 1], and exceeds it strictly in between
  for (int k = 1; k <= 4; ++k)
    for (int c = 0; 2 * c <= k; ++c) {
      Rational cap = Rational(std::int64_t{8} * 7 / 2) / Rational(2 * k);
      for (int num = 0; num <= 200; ++num) {
        Rational d(num, 200);
        if (c == 0 && num == 200) {
          // degenerate input, defined as pairs/k by convention
          CHECK(lub_value(d, 8, k, c) == Rational(28, k));
          continue;
        }
        bool inside = d <= Rational(1, 2) ||
                      Rational(1) - Rational(c, k) <= d;
        CHECK((lub_value(d, 8, k, c) <= cap) == inside);
      }
    }
}

TEST_CASE("three vertex targets") {
  const std::int64_t want[] = {1, 2, 4, 6, 9, 12};
  for (int n = 3; n <= 8; ++n) CHECK(thm51_value(n) == want[n - 3]);
  CHECK_THROWS_AS(thm51_value(2), std::invalid_argument);
}

TEST_CASE("four vertex family sandwich") {
  CHECK(thm52_bounds(5) == std::pair<std::int64_t, std::int64_t>{0, 5});
  CHECK(thm52_bounds(6) == std::pair<std::int64_t, std::int64_t>{1, 7});
  CHECK(thm52_bounds(7) == std::pair<std::int64_t, std::int64_t>{3, 10});
  CHECK_THROWS_AS(thm52_bounds(4), std::invalid_argument);
}

TEST_CASE("report for a path target") {
  BoundsReport r = bounds_report(6, path_graph(4), "P4");
  CHECK(r.n == 6);
  CHECK(r.h_name == "P4");
  REQUIRE(r.chi_b.has_value());
  CHECK(*r.chi_b == 2);
  CHECK(*r.k == 1);
  CHECK(*r.c_min == 0);
  CHECK(*r.c_max == 1);
  CHECK_FALSE(r.turan_eq1.has_value());
  CHECK(*r.lb_thm13 == Rational(9));
  REQUIRE(r.ub_thm14.has_value());
  CHECK(r.ub_thm14->exact == Rational(15, 2));
  CHECK(r.curve.size() == 101);
  CHECK_FALSE(r.thm51.has_value());
  REQUIRE(r.exact.has_value());
  CHECK(*r.exact == 2);
  CHECK(r.exact_status == "ok");
}

TEST_CASE("report for a complete target") {
  BoundsReport r = bounds_report(5, complete_graph(3), "K3");
  REQUIRE(r.turan_eq1.has_value());
  CHECK(*r.turan_eq1 == 4);
  REQUIRE(r.thm51.has_value());
  CHECK(*r.thm51 == 4);
  CHECK(*r.exact == 4);
  CHECK_FALSE(r.thm52.has_value());
}

TEST_CASE("report edge cases") {
  CHECK_THROWS_AS(bounds_report(5, Graph(1), "K1"), std::domain_error);

  BoundsReport skipped = bounds_report(6, path_graph(4), "P4", {}, false);
  CHECK_FALSE(skipped.exact.has_value());
  CHECK(skipped.exact_status == "skipped");

  SearchLimits strangled;
  strangled.node_budget = 10;
  BoundsReport q = bounds_report_q(7, strangled);
  CHECK(q.exact_status == "timeout");
  CHECK_FALSE(q.exact.has_value());
  REQUIRE(q.thm52.has_value());
  CHECK(q.thm52->first == 3);
  CHECK(q.thm52->second == 10);

  BoundsReport q6 = bounds_report_q(6);
  REQUIRE(q6.exact.has_value());
  CHECK(*q6.exact == 4);
  CHECK(q6.exact_status == "ok");
}
