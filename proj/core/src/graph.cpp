#include "gel/graph.hpp"

#include <algorithm>

#include "gel/rng.hpp"

namespace gel {

Graph with_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph complete_multipartite(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("kpq needs p, q >= 1");
  Graph g(p * q);
  for (int u = 0; u < p * q; ++u)
    for (int v = u + 1; v < p * q; ++v)
      if (u / q != v / q) g.add_edge(u, v);
  return g;
}

Graph gnp(int n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0)
    throw std::invalid_argument("edge probability must be in [0, 1]");
  Graph g(n);
  SplitMix64 rng(seed);
  const bool none = p <= 0.0;
  const bool all = p >= 1.0;
  // p * 2^64 truncated; exact for dyadic p like 0.5.
  const std::uint64_t threshold =
      (none || all) ? 0 : static_cast<std::uint64_t>(p * 18446744073709551616.0);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      std::uint64_t word = rng.next();
      if (all || (!none && word < threshold)) g.add_edge(u, v);
    }
  return g;
}

Graph complement(const Graph& g) {
  Graph c(g.n());
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) c.add_edge(u, v);
  return c;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.n() + b.n());
  for (int u = 0; u < a.n(); ++u)
    for (int v = u + 1; v < a.n(); ++v)
      if (a.has_edge(u, v)) g.add_edge(u, v);
  for (int u = 0; u < b.n(); ++u)
    for (int v = u + 1; v < b.n(); ++v)
      if (b.has_edge(u, v)) g.add_edge(a.n() + u, a.n() + v);
  return g;
}

int symmetric_difference_count(const Graph& a, const Graph& b) {
  if (a.n() != b.n())
    throw std::invalid_argument("symmetric difference needs equal orders");
  int total = 0;
  for (int v = 0; v < a.n(); ++v)
    total += __builtin_popcountll(a.neighbors(v) ^ b.neighbors(v));
  return total / 2;
}

std::vector<VertexPair> all_pairs(int n) {
  std::vector<VertexPair> out;
  out.reserve(n * (n - 1) / 2);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) out.push_back(VertexPair{u, v});
  return out;
}

namespace {

// Maps h-vertices in descending degree order; candidate sets are pruned by
// one word op per already-placed vertex.
std::optional<std::vector<int>> find_copy(const Graph& g, const Graph& h,
                                          bool induced) {
  const int hn = h.n();
  if (hn > g.n()) return std::nullopt;

  std::vector<int> order(hn);
  for (int i = 0; i < hn; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
    return a < b;
  });

  std::vector<int> image(hn, -1);
  std::uint64_t used = 0;
  const std::uint64_t full = g.vertices_mask();

  auto rec = [&](auto&& self, int t) -> bool {
    if (t == hn) return true;
    int hv = order[t];
    std::uint64_t cand = full & ~used;
    for (int s = 0; s < t && cand; ++s) {
      int hu = order[s];
      int gu = image[hu];
      if (h.has_edge(hv, hu))
        cand &= g.neighbors(gu);
      else if (induced)
        cand &= ~g.neighbors(gu);
    }
    while (cand) {
      int gv = __builtin_ctzll(cand);
      cand &= cand - 1;
      image[hv] = gv;
      used |= 1ull << gv;
      if (self(self, t + 1)) return true;
      used &= ~(1ull << gv);
      image[hv] = -1;
    }
    return false;
  };

  if (!rec(rec, 0)) return std::nullopt;
  return image;
}

}  // namespace

std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h) {
  return find_copy(g, h, true);
}

std::optional<std::vector<int>> find_subgraph_copy(const Graph& g, const Graph& h) {
  return find_copy(g, h, false);
}

bool contains_induced(const Graph& g, const Graph& h) {
  return find_induced_copy(g, h).has_value();
}

bool contains_subgraph(const Graph& g, const Graph& h) {
  return find_subgraph_copy(g, h).has_value();
}

}  // namespace gel
