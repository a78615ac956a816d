#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <stdexcept>
#include <string>

#include "gel/graph.hpp"
#include "gel/regularity.hpp"

using namespace gel;

namespace {

std::uint64_t mask_of(std::initializer_list<int> vs) {
  std::uint64_t m = 0;
  for (int v : vs) m |= 1ull << v;
  return m;
}

// every subset pair verdict recomputed naively
bool regular_brute(const Graph& g, std::uint64_t a, std::uint64_t b,
                   const Rational& eps) {
  PairDensity base = density(g, a, b);
  int na = __builtin_popcountll(a), nb = __builtin_popcountll(b);
  for (std::uint64_t x = a;; x = (x - 1) & a) {
    if (x == 0) break;
    for (std::uint64_t y = b;; y = (y - 1) & b) {
      if (y == 0) break;
      Rational xs(__builtin_popcountll(x)), ys(__builtin_popcountll(y));
      if (xs <= eps * Rational(na) || ys <= eps * Rational(nb)) continue;
      Rational diff = density(g, x, y).density - base.density;
      if (diff < Rational(0)) diff = Rational(0) - diff;
      if (!(diff < eps)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("pair density") {
  Graph c4 = cycle_graph(4);
  PairDensity d = density(c4, mask_of({0, 2}), mask_of({1, 3}));
  CHECK(d.a_size == 2);
  CHECK(d.b_size == 2);
  CHECK(d.edges_across == 4);
  CHECK(d.density == Rational(1));

  PairDensity e = density(c4, mask_of({0, 1}), mask_of({2, 3}));
  CHECK(e.edges_across == 2);
  CHECK(e.density == Rational(1, 2));

  CHECK_THROWS_AS(density(c4, 0, mask_of({1})), std::invalid_argument);
  CHECK_THROWS_AS(density(c4, mask_of({0, 1}), mask_of({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(density(c4, mask_of({0}), mask_of({4})),
                  std::invalid_argument);
}

TEST_CASE("regular and irregular pairs") {
  // complete bipartite between the sides: every subset pair has density 1
  Graph kb(16);
  for (int u = 0; u < 8; ++u)
    for (int v = 8; v < 16; ++v) kb.add_edge(u, v);
  std::uint64_t left = 0xff, right = 0xff00;
  CHECK(is_epsilon_regular(kb, left, right, Rational(1, 100)).regular);

  // the C4 split with density 1/2 has single-vertex subsets at 0 and 1
  Graph c4 = cycle_graph(4);
  RegularityResult r =
      is_epsilon_regular(c4, mask_of({0, 1}), mask_of({2, 3}), Rational(1, 4));
  CHECK_FALSE(r.regular);
  REQUIRE(r.witness.has_value());
  PairDensity wd = density(c4, r.witness->x, r.witness->y);
  CHECK(wd.density == r.witness->d_xy);
  Rational diff = r.witness->d_xy - r.witness->d_ab;
  if (diff < Rational(0)) diff = Rational(0) - diff;
  CHECK(diff >= Rational(1, 4));

  // half graph: edge from left i to right j iff i <= j
  Graph half(16);
  for (int i = 0; i < 8; ++i)
    for (int j = i; j < 8; ++j) half.add_edge(i, 8 + j);
  CHECK_FALSE(is_epsilon_regular(half, 0xff, 0xff00, Rational(1, 10)).regular);
}

TEST_CASE("verdicts match brute force on small pairs") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    Graph g = gnp(10, 0.5, 900 + seed);
    std::uint64_t a = 0x1f, b = 0x3e0;
    for (const Rational& eps :
         {Rational(1, 10), Rational(1, 4), Rational(1, 2), Rational(9, 10)}) {
      bool brute = regular_brute(g, a, b, eps);
      RegularityResult fast = is_epsilon_regular(g, a, b, eps);
      CHECK(fast.regular == brute);
      if (fast.witness) {
        Rational diff =
            density(g, fast.witness->x, fast.witness->y).density -
            fast.witness->d_ab;
        if (diff < Rational(0)) diff = Rational(0) - diff;
        CHECK(diff >= eps);
      }
    }
  }
}

TEST_CASE("regularity is monotone in epsilon") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    Graph g = gnp(12, 0.4, 70 + seed);
    std::uint64_t a = 0x3f, b = 0xfc0;
    bool prev = false;
    for (int num = 1; num <= 10; ++num) {
      bool now = is_epsilon_regular(g, a, b, Rational(num, 10)).regular;
      if (prev) CHECK(now);
      prev = now;
    }
  }
}

TEST_CASE("regularity input guards") {
  Graph g = gnp(40, 0.5, 5);
  std::uint64_t big = (1ull << 17) - 1, other = 1ull << 20;
  CHECK_THROWS_AS(is_epsilon_regular(g, big, other, Rational(1, 4)),
                  std::invalid_argument);
  try {
    is_epsilon_regular(g, big, other, Rational(1, 4));
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("sampling") != std::string::npos);
  }
  CHECK_THROWS_AS(is_epsilon_regular(g, 1, 2, Rational(0)),
                  std::invalid_argument);
}

TEST_CASE("equipartition sampling") {
  Equipartition eq = sample_equipartition(22, 4, 9);
  Equipartition eq2 = sample_equipartition(22, 4, 9);
  CHECK(eq.exceptional == eq2.exceptional);
  CHECK(eq.clusters == eq2.clusters);
  CHECK(eq.exceptional.size() == 2);
  REQUIRE(eq.clusters.size() == 4);
  std::set<int> seen(eq.exceptional.begin(), eq.exceptional.end());
  for (const auto& cl : eq.clusters) {
    CHECK(cl.size() == 5);
    seen.insert(cl.begin(), cl.end());
  }
  CHECK(seen.size() == 22);
  CHECK_NOTHROW(validate_equipartition(eq, 22));
  CHECK_NOTHROW(validate_equipartition(eq, 22, Rational(1, 10)));
  // 2 exceptional vertices are not fewer than 2 = n/11
  CHECK_THROWS_AS(validate_equipartition(eq, 22, Rational(1, 11)),
                  std::invalid_argument);

  Equipartition bad = eq;
  bad.clusters[0][0] = bad.clusters[1][0];
  CHECK_THROWS_AS(validate_equipartition(bad, 22), std::invalid_argument);
  Equipartition uneven = eq;
  uneven.clusters[0].pop_back();
  CHECK_THROWS_AS(validate_equipartition(uneven, 22), std::invalid_argument);
  Equipartition missing = eq;
  missing.exceptional.clear();
  CHECK_THROWS_AS(validate_equipartition(missing, 22), std::invalid_argument);
}

TEST_CASE("density concentration experiment") {
  ConcentrationResult r = concentration_experiment(32, 4, Rational(1, 5), 50, 11);
  ConcentrationResult r2 =
      concentration_experiment(32, 4, Rational(1, 5), 50, 11);
  CHECK(r.trials == 50);
  CHECK(r.passes == r2.passes);
  REQUIRE(r.per_trial_min_max.size() == 50);
  CHECK(r.pass_fraction == doctest::Approx(r.passes / 50.0));
  for (auto [lo, hi] : r.per_trial_min_max) {
    CHECK(lo <= hi);
    CHECK(lo >= 0.0);
    CHECK(hi <= 1.0);
  }

  // widening the band with the same seed never loses a pass
  ConcentrationResult narrow =
      concentration_experiment(32, 4, Rational(1, 20), 50, 11);
  ConcentrationResult mid =
      concentration_experiment(32, 4, Rational(1, 10), 50, 11);
  CHECK(narrow.passes <= mid.passes);
  CHECK(mid.passes <= r.passes);

  CHECK_NOTHROW(concentration_experiment(8, 2, Rational(1, 2), 3, 1));
  CHECK_THROWS_AS(concentration_experiment(8, 2, Rational(0), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(8, 2, Rational(3, 5), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(3, 4, Rational(1, 5), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(8, 1, Rational(1, 5), 3, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(concentration_experiment(8, 2, Rational(1, 5), 0, 1),
                  std::invalid_argument);
}

TEST_CASE("tail bound formula") {
  double v = chernoff_bound_value(128, 0.25, 0.1);
  CHECK(v == doctest::Approx(2.95364e68).epsilon(1e-3));
  CHECK(chernoff_bound_value(128, 0.25, 0.2) < v);
  CHECK_THROWS_AS(chernoff_bound_value(0, 0.25, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_bound_value(128, 0.0, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(chernoff_bound_value(128, 0.25, 0.0), std::invalid_argument);
}
