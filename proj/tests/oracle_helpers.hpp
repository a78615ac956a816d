#pragma once

// Brute-force reference implementations for cross-checking the solvers.
// Deliberately written against the raw definitions, sharing no code with the
// library internals beyond the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "gel/editdist.hpp"
#include "gel/graph.hpp"

namespace oracle {

inline int pidx(int u, int v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

inline std::uint32_t code_of(const gel::Graph& g) {
  std::uint32_t code = 0;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u)
      if (g.has_edge(u, v)) code |= 1u << pidx(u, v);
  return code;
}

inline gel::Graph graph_of(std::uint32_t code, int n) {
  gel::Graph g(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      if ((code >> pidx(u, v)) & 1u) g.add_edge(u, v);
  return g;
}

// Injection search; induced wants exact adjacency agreement, otherwise only
// the edges of h are demanded.
inline bool code_contains(std::uint32_t code, int n, const gel::Graph& h,
                          bool induced) {
  int hn = h.n();
  if (hn > n) return false;
  std::vector<int> map(hn);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int i) -> bool {
    if (i == hn) return true;
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool fit = true;
      for (int j = 0; j < i && fit; ++j) {
        bool ge = ((code >> pidx(map[j], v)) & 1u) != 0;
        fit = induced ? h.has_edge(j, i) == ge : !h.has_edge(j, i) || ge;
      }
      if (!fit) continue;
      used[v] = true;
      map[i] = v;
      if (rec(i + 1)) return true;
      used[v] = false;
    }
    return false;
  };
  return rec(0);
}

inline bool family_free_brute(std::uint32_t code, int n,
                              const gel::ForbiddenFamily& f) {
  for (const gel::Graph& h : f.members)
    if (code_contains(code, n, h, f.mode == gel::FamilyMode::induced))
      return false;
  return true;
}

// Minimum symmetric difference to any family-free graph on the same
// vertices, by scanning all 2^C(n,2) edge sets.
inline int dist_to_forb_brute(const gel::Graph& g,
                              const gel::ForbiddenFamily& f) {
  int n = g.n();
  std::uint32_t code = code_of(g), total = 1u << (n * (n - 1) / 2);
  int best = 64;
  for (std::uint32_t cand = 0; cand < total; ++cand)
    if (family_free_brute(cand, n, f))
      best = std::min(best, __builtin_popcount(code ^ cand));
  return best;
}

// Does g split into at most `cliques` cliques and `cocliques` cocliques?
// Exhaustive over all block assignments.
inline bool partition_exists_brute(const gel::Graph& g, int cliques,
                                   int cocliques) {
  int n = g.n(), blocks = cliques + cocliques;
  if (blocks == 0) return n == 0;
  std::vector<int> at(n, 0);
  while (true) {
    bool good = true;
    for (int v = 1; v < n && good; ++v)
      for (int u = 0; u < v && good; ++u) {
        if (at[u] != at[v]) continue;
        bool want_edge = at[u] < cliques;
        good = g.has_edge(u, v) == want_edge;
      }
    if (good) return true;
    int i = 0;
    while (i < n && at[i] == blocks - 1) at[i++] = 0;
    if (i == n) return false;
    ++at[i];
  }
}

inline int binary_chromatic_brute(const gel::Graph& g) {
  for (int t = 1;; ++t) {
    bool all = true;
    for (int c = 0; c <= t && all; ++c)
      all = partition_exists_brute(g, c, t - c);
    if (all) return t;
  }
}

inline int chromatic_brute(const gel::Graph& g) {
  for (int t = 1;; ++t)
    if (partition_exists_brute(g, 0, t)) return t;
}

}  // namespace oracle
