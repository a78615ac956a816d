#include "gel/affine.hpp"

#include <stdexcept>
#include <string>

namespace gel {

int affine_vertex_index(int k, int i, int j) {
  if (i < 1 || i > k || j < 1 || j > k)
    throw std::invalid_argument("grid coordinates must lie in 1..k");
  return (j - 1) * k + (i - 1);
}

AffineConstruction affine_construction(int k) {
  if (k != 2 && k != 3 && k != 5 && k != 7)
    throw std::invalid_argument(
        "construction needs a prime k with k*k <= 64; k = " +
        std::to_string(k));
  AffineConstruction out;
  out.k = k;
  out.graph = Graph(k * k);

  // Slope-i partitions: class j collects one vertex per row, stepping the
  // column by i each row.  Class j of slope i is a clique exactly when i < j,
  // so slope i carries i cocliques and k - i cliques.
  for (int i = 0; i < k; ++i) {
    Partition p;
    for (int j = 1; j <= k; ++j) {
      Block b;
      b.kind = i < j ? BlockKind::clique : BlockKind::coclique;
      for (int l = 0; l < k; ++l) {
        int col = ((j - 1 + l * i) % k) + 1;
        b.members |= 1ull << affine_vertex_index(k, col, l + 1);
      }
      p.blocks.push_back(b);
    }
    out.partitions.push_back(std::move(p));
  }

  // Row partition: all cocliques.
  Partition rows;
  for (int j = 1; j <= k; ++j) {
    Block b;
    b.kind = BlockKind::coclique;
    for (int i = 1; i <= k; ++i)
      b.members |= 1ull << affine_vertex_index(k, i, j);
    rows.blocks.push_back(b);
  }
  out.partitions.push_back(std::move(rows));

  // Each cross-row pair lies in exactly one slope class (k is prime), each
  // same-row pair only in its row class; the edge set is the union of the
  // clique classes.
  for (int i = 0; i < k; ++i)
    for (const Block& b : out.partitions[i].blocks) {
      if (b.kind != BlockKind::clique) continue;
      auto verts = b.vertices();
      for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t c = a + 1; c < verts.size(); ++c)
          out.graph.add_edge(verts[a], verts[c]);
    }
  return out;
}

void audit_affine(const AffineConstruction& a) {
  if (static_cast<int>(a.partitions.size()) != a.k + 1)
    throw std::logic_error("expected k+1 partitions");
  for (const Partition& p : a.partitions) {
    try {
      validate_partition(a.graph, p);
    } catch (const std::invalid_argument& e) {
      throw std::logic_error(std::string("partition invalid: ") + e.what());
    }
  }
  int n = a.graph.n();
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      int cover = 0;
      for (const Partition& p : a.partitions)
        for (const Block& b : p.blocks)
          if (((b.members >> u) & 1) && ((b.members >> v) & 1)) ++cover;
      if (cover != 1)
        throw std::logic_error("pair covered " + std::to_string(cover) +
                               " times");
    }
}

}  // namespace gel
