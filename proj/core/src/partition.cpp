#include "gel/partition.hpp"

#include <stdexcept>

namespace gel {

std::string to_string(BlockKind kind) {
  return kind == BlockKind::clique ? "clique" : "coclique";
}

std::vector<int> Block::vertices() const {
  std::vector<int> out;
  for (std::uint64_t m = members; m;) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

int Partition::clique_blocks() const {
  int c = 0;
  for (const Block& b : blocks) c += b.kind == BlockKind::clique;
  return c;
}

int Partition::coclique_blocks() const {
  return static_cast<int>(blocks.size()) - clique_blocks();
}

std::uint64_t Partition::covered() const {
  std::uint64_t m = 0;
  for (const Block& b : blocks) m |= b.members;
  return m;
}

bool block_respected(const Graph& g, const Block& b) {
  for (std::uint64_t m = b.members; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    std::uint64_t inside = g.neighbors(v) & b.members;
    std::uint64_t want =
        b.kind == BlockKind::clique ? b.members & ~(1ull << v) : 0;
    if (inside != want) return false;
  }
  return true;
}

int partition_violations(const Graph& g, const Partition& p) {
  int total = 0;
  for (const Block& b : p.blocks) {
    int edges = 0;
    for (std::uint64_t m = b.members; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      edges += __builtin_popcountll(g.neighbors(v) & m);
    }
    int pairs = b.size() * (b.size() - 1) / 2;
    total += b.kind == BlockKind::clique ? pairs - edges : edges;
  }
  return total;
}

std::vector<VertexPair> partition_violating_pairs(const Graph& g,
                                                  const Partition& p) {
  std::vector<VertexPair> out;
  for (const Block& b : p.blocks) {
    auto verts = b.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        bool edge = g.has_edge(verts[i], verts[j]);
        bool want = b.kind == BlockKind::clique;
        if (edge != want) out.push_back(VertexPair::of(verts[i], verts[j]));
      }
  }
  return out;
}

void validate_partition(const Graph& g, const Partition& p) {
  std::uint64_t seen = 0;
  for (const Block& b : p.blocks) {
    if (b.members == 0) throw std::invalid_argument("empty block");
    if (b.members & ~g.vertices_mask())
      throw std::invalid_argument("block mentions a vertex outside the graph");
    if (b.members & seen) throw std::invalid_argument("blocks overlap");
    seen |= b.members;
    if (!block_respected(g, b))
      throw std::invalid_argument("block does not induce a " +
                                  to_string(b.kind));
  }
  if (seen != g.vertices_mask())
    throw std::invalid_argument("partition does not cover every vertex");
}

}  // namespace gel
