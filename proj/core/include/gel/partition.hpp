#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

enum class BlockKind { clique, coclique };

std::string to_string(BlockKind kind);

// One part of a vertex partition together with the structure it is meant to
// induce.
struct Block {
  std::uint64_t members = 0;
  BlockKind kind = BlockKind::clique;

  int size() const { return __builtin_popcountll(members); }
  std::vector<int> vertices() const;
};

struct Partition {
  std::vector<Block> blocks;

  int clique_blocks() const;
  int coclique_blocks() const;
  std::uint64_t covered() const;
};

// True when the subgraph induced by the block matches its designation.
bool block_respected(const Graph& g, const Block& b);

// Pairs inside a common block whose adjacency contradicts the block kind.
// These are exactly the pair toggles needed to realize the designations.
int partition_violations(const Graph& g, const Partition& p);
std::vector<VertexPair> partition_violating_pairs(const Graph& g,
                                                  const Partition& p);

// Throws std::invalid_argument unless blocks are disjoint, cover every
// vertex, and each induces its designated structure.
void validate_partition(const Graph& g, const Partition& p);

}  // namespace gel
