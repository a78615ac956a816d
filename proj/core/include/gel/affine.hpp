#pragma once

#include <vector>

#include "gel/graph.hpp"
#include "gel/partition.hpp"

namespace gel {

// Grid labelling is 1-based in both coordinates; (i, j) sits at bit
// (j - 1) * k + (i - 1).
int affine_vertex_index(int k, int i, int j);

// A k*k-vertex graph packaged with k+1 vertex partitions, one per parallel
// class of lines (slopes 0..k-1 plus the rows).  Every vertex pair lies in
// exactly one class across all partitions, and the pair is an edge exactly
// when that class is designated a clique, so each partition splits the graph
// into designated cliques and cocliques simultaneously.
struct AffineConstruction {
  int k = 0;
  Graph graph{1};
  std::vector<Partition> partitions;
};

// Requires k prime with k*k <= 64, i.e. k in {2, 3, 5, 7}.
AffineConstruction affine_construction(int k);

// Throws std::logic_error if any partition fails validation or some vertex
// pair is not covered by exactly one class.
void audit_affine(const AffineConstruction& a);

}  // namespace gel
