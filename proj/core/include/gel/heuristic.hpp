#pragma once

#include <cstdint>
#include <vector>

#include "gel/editdist.hpp"
#include "gel/graph.hpp"
#include "gel/partition.hpp"
#include "gel/rational.hpp"

namespace gel {

// Color assignment scheme: colors 1..c are clique colors drawn with
// probability p each, colors c+1..k coclique colors with probability q each,
// so that c*p + (k-c)*q = 1 exactly.
struct EditorPlan {
  int k = 1;
  int c = 0;
  Rational p;
  Rational q;
  Rational d;  // input density m / C(n,2)
  bool degenerate = false;
};

// Two-sided case (c_min <= k/2 <= c_max): c_min for d <= 1/2, else c_max.
// One-sided: whichever of c_min/c_max is closest to k/2, ties to the smaller.
int choose_c(const Rational& d, int k, int c_min, int c_max);

struct Probabilities {
  Rational p;
  Rational q;
  bool degenerate = false;
};

// p = d/(dc+(1-d)(k-c)), q = (1-d)/(dc+(1-d)(k-c)). The denominator vanishes
// exactly for (d=0, c=k) and (d=1, c=0); those signal degenerate and fall
// back to the uniform weight 1/k on the existing colors (the other
// probability is 0 since no color of that kind exists).
Probabilities optimal_probabilities(const Rational& d, int k, int c);

// Expected toggles of the randomized editor: d(1-d)/(dc+(1-d)(k-c)) * C(n,2),
// and C(n,2)/k in the degenerate cases.
Rational expected_edits(const Rational& d, int n, int k, int c);

EditorPlan make_plan(const Graph& g, int k, int c);

struct EditorRun {
  Graph edited{1};
  EditSet edits;
  Partition partition;  // nonempty color classes in color order
  std::vector<int> colors;  // 1..k per vertex
  EditorPlan plan;
};

// Colors vertices independently at random (vertex-index order, one 64-bit
// draw each), then toggles every same-color pair that contradicts the color's
// designation. Deterministic given seed.
EditorRun randomized_edit(const Graph& g, int k, int c, std::uint64_t seed);

// Method of conditional expectations over the same distribution with exact
// integer arithmetic; the result never exceeds expected_edits. Ties go to the
// smallest color.
EditorRun derandomized_edit(const Graph& g, int k, int c);

}  // namespace gel
