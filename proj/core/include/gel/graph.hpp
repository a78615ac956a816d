#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gel/errors.hpp"

namespace gel {

inline constexpr int kMaxVertices = 64;

// Unordered pair of distinct vertices, stored with u < v.
struct VertexPair {
  int u = 0;
  int v = 1;

  static VertexPair of(int a, int b) {
    if (a == b) throw std::invalid_argument("vertex pair needs two distinct vertices");
    if (a > b) std::swap(a, b);
    return VertexPair{a, b};
  }

  friend bool operator==(const VertexPair&, const VertexPair&) = default;
  friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

// Simple undirected graph on 1..64 vertices. One 64-bit adjacency row per
// vertex, so neighborhood operations are single word ops. Value semantics.
class Graph {
 public:
  Graph() : n_(1) {}
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > kMaxVertices)
      throw std::invalid_argument("graph order must be in 1..64");
  }

  int n() const { return n_; }

  int m() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += __builtin_popcountll(adj_[v]);
    return total / 2;
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (adj_[u] >> v) & 1;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= 1ull << v;
    adj_[v] |= 1ull << u;
  }

  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(1ull << v);
    adj_[v] &= ~(1ull << u);
  }

  void toggle_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] ^= 1ull << v;
    adj_[v] ^= 1ull << u;
  }

  std::uint64_t neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  int degree(int v) const { return __builtin_popcountll(neighbors(v)); }

  std::uint64_t vertices_mask() const {
    return n_ == kMaxVertices ? ~0ull : (1ull << n_) - 1;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = __builtin_popcountll(adj_[v]);
    return d;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    if (a.n_ != b.n_) return false;
    for (int v = 0; v < a.n_; ++v)
      if (a.adj_[v] != b.adj_[v]) return false;
    return true;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
  }
  void check_pair(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("no loops in a simple graph");
  }

  int n_;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

// -------- generators --------

Graph with_edges(int n, const std::vector<std::pair<int, int>>& edges);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
// K_p^q: complete multipartite with p parts of size q.
Graph complete_multipartite(int p, int q);
// G(n,p) with a fixed pair order and splitmix64 bits; identical on every
// platform for the same seed.
Graph gnp(int n, double p, std::uint64_t seed);

// -------- basic operations --------

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);
// |E(a) xor E(b)| for labeled graphs on the same vertex set.
int symmetric_difference_count(const Graph& a, const Graph& b);

// All pairs (u < v), column-major: (0,1),(0,2),(1,2),(0,3),... matching the
// graph6 bit order.
std::vector<VertexPair> all_pairs(int n);

// Backtracking injection search. Returns the image of each h-vertex in g, or
// nullopt. Induced: adjacency and non-adjacency both preserved; subgraph:
// edges of h must map to edges of g.
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h);
std::optional<std::vector<int>> find_subgraph_copy(const Graph& g, const Graph& h);
bool contains_induced(const Graph& g, const Graph& h);
bool contains_subgraph(const Graph& g, const Graph& h);

}  // namespace gel
