#pragma once

#include <optional>
#include <vector>

#include "gel/errors.hpp"
#include "gel/graph.hpp"
#include "gel/partition.hpp"

namespace gel {

// Feasibility of designated partitions with k+1 blocks total: feasible[c] is
// true iff the graph splits into at most c cliques and at most k+1-c
// cocliques, for c = 0..k+1.
struct FeasibilityTable {
  int k = 0;
  std::vector<bool> feasible;
};

struct BinaryChromatic {
  int chi_b = 0;
  FeasibilityTable table;  // at k+1 == chi_b, where every entry is true
};

// Level k = chi_b - 1 summary: feasible[c] for partitions into at most c
// cliques and at most k-c cocliques, with the least and greatest failing c.
struct CMinMax {
  int k = 0;
  int c_min = 0;
  int c_max = 0;
  std::vector<bool> feasible;
};

// Partition into at most `cliques` clique blocks and at most `cocliques`
// coclique blocks, or nullopt. Blocks of the result are all nonempty.
std::optional<Partition> exists_partition(const Graph& g, int cliques,
                                          int cocliques,
                                          const SearchLimits& limits = {},
                                          SearchStats* stats = nullptr);

// Least t such that for every c in 0..t the graph splits into at most c
// cliques and at most t-c cocliques. Requires n <= 30.
BinaryChromatic binary_chromatic_full(const Graph& g,
                                      const SearchLimits& limits = {},
                                      SearchStats* stats = nullptr);
int binary_chromatic(const Graph& g, const SearchLimits& limits = {},
                     SearchStats* stats = nullptr);

// Throws std::domain_error when binary_chromatic(g) < 2 (no level below the
// top exists).
CMinMax c_min_c_max(const Graph& g, const SearchLimits& limits = {},
                    SearchStats* stats = nullptr);

// Exact, by branch and bound between a greedy clique lower bound and a greedy
// coloring upper bound. Requires n <= 30.
int chromatic_number(const Graph& g, const SearchLimits& limits = {},
                     SearchStats* stats = nullptr);
int clique_cover_number(const Graph& g, const SearchLimits& limits = {},
                        SearchStats* stats = nullptr);

}  // namespace gel
