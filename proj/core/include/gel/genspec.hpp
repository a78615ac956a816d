#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gel/editdist.hpp"
#include "gel/graph.hpp"

namespace gel {

// Generator specs contain a colon: complete:n, empty:n, path:n, cycle:n,
// kpq:p,q, gnp:n,p[,seed=S], affine:k. Anything without a colon is tried as
// a named small graph, then as graph6.
Graph parse_graph_arg(const std::string& arg, std::uint64_t default_seed = 0);

// K<n>, E<n>, P<n>, C<n>, K<a>,<b> (complete bipartite), claw; a trailing
// 'c' complements. Falls back to graph6.
Graph parse_member_name(const std::string& name);

// Each entry is a member name, "forb:NAME", or "forbset:4v3e" (shorthand for
// the three graphs on 4 vertices with 3 edges).
ForbiddenFamily parse_family_arg(const std::vector<std::string>& args,
                                 FamilyMode mode);

// The 4-vertex 3-edge graphs, forbidden as induced subgraphs.
ForbiddenFamily q_family();

}  // namespace gel
