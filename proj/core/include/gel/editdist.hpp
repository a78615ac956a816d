#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gel/errors.hpp"
#include "gel/graph.hpp"

namespace gel {

enum class FamilyMode { induced, subgraph };

// Members are pairwise nonisomorphic, each on 1..5 vertices.
struct ForbiddenFamily {
  std::vector<Graph> members;
  FamilyMode mode = FamilyMode::induced;
};

// Dedups members up to isomorphism and orders them by (order, canonical
// form). Throws on an empty list or a member above 5 vertices.
ForbiddenFamily make_family(std::vector<Graph> members, FamilyMode mode);

struct EditSet {
  std::vector<VertexPair> toggles;
};

Graph apply_edits(const Graph& g, const EditSet& edits);

// True iff no member occurs in g, as induced subgraph or subgraph per mode.
bool is_family_free(const Graph& g, const ForbiddenFamily& f);

struct DistWitness {
  int distance = 0;
  std::vector<int> mapping;  // mapping[v of g] = vertex of h
};

// Minimum |E(g) xor E(pi(h))| over all bijections pi: V(g) -> V(h) by
// permutation branch and bound with running mismatch pruning. Equal orders
// required, n <= 9. The witness is the lexicographically least optimal map.
DistWitness dist_graphs(const Graph& g, const Graph& h,
                        const SearchLimits& limits = {},
                        SearchStats* stats = nullptr);

struct EditResult {
  int distance = 0;
  EditSet edits;  // lexicographically least optimal toggle set
};

// Fewest pair toggles after which g is family-free: bounded search tree
// branching on the pairs of one located forbidden copy (its edges, in
// subgraph mode), with progressive pair freezing and a disjoint-copy packing
// lower bound, iterative deepening on the edit budget. n <= 16. Throws
// std::domain_error when no graph on n vertices avoids the family.
EditResult dist_to_forb(const Graph& g, const ForbiddenFamily& f,
                        const SearchLimits& limits = {},
                        SearchStats* stats = nullptr);

// Distance only, skipping the witness pass.
int dist_to_forb_value(const Graph& g, const ForbiddenFamily& f,
                       const SearchLimits& limits = {},
                       SearchStats* stats = nullptr);

// Minimum deletions after which no member occurs as a subgraph; the family
// must be in subgraph mode (deleting the additions of any edit set never
// reintroduces a subgraph copy, so deletions alone are optimal there).
int deletion_only_dist(const Graph& g, const ForbiddenFamily& f,
                       const SearchLimits& limits = {},
                       SearchStats* stats = nullptr);

struct MaxDistResult {
  int distance = 0;
  Graph extremal{1};
  std::string extremal_g6;
  std::uint64_t graphs_examined = 0;
};

// Maximum of dist_to_forb over all nonisomorphic n-vertex graphs, with the
// extremal graph of least canonical form among the maximizers. n <= 7 unless
// allow_large, then n <= 8. Distances for distinct graphs run on `jobs`
// worker threads; the node budget applies to each graph's search.
MaxDistResult dist_n_forb(int n, const ForbiddenFamily& f, int jobs = 1,
                          bool allow_large = false,
                          const SearchLimits& limits = {},
                          SearchStats* stats = nullptr);

}  // namespace gel
