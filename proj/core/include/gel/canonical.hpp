#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// Canonical labeling by pruned search for the lexicographically least
// upper-triangle bit string over all vertex orderings. Exact for any order the
// Graph type allows, fast up to n = 10 (the guarantee the solvers rely on).
Graph canonical_representative(const Graph& g);

// graph6 string of the canonical representative; equal strings iff isomorphic.
std::string canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

// One representative per isomorphism class, sorted by canonical graph6 key.
// Built by extending each (m-1)-vertex class with every attachment mask and
// deduplicating on canonical forms. n > 8 needs allow_large; n > 10 rejected.
std::vector<Graph> enumerate_nonisomorphic(int n, bool allow_large = false);

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& fn,
                            bool allow_large = false);

}  // namespace gel
