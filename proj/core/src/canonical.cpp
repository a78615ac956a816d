#include "gel/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

#include "gel/graph6.hpp"

namespace gel {

namespace {

constexpr std::uint64_t kUnset = ~0ull;  // larger than any real column (< 2^63)

struct MinOrderSearch {
  const Graph* g;
  int n;
  std::array<int, kMaxVertices> perm{};
  std::array<std::uint64_t, kMaxVertices> best{};
  std::uint64_t used = 0;

  // Column of v at position pos: adjacency bits against perm[0..pos-1], the
  // earliest placed vertex in the most significant bit, so integer order is
  // lexicographic order.
  std::uint64_t column(int v, int pos) const {
    std::uint64_t col = 0;
    for (int i = 0; i < pos; ++i)
      col = (col << 1) | ((g->neighbors(perm[i]) >> v) & 1);
    return col;
  }

  void run() {
    best.fill(kUnset);
    dfs(0);
  }

  void dfs(int pos) {
    if (pos == n) return;
    struct Cand {
      std::uint64_t col;
      int v;
    };
    std::array<Cand, kMaxVertices> cands;
    int count = 0;
    std::uint64_t remaining = (n == 64 ? ~0ull : (1ull << n) - 1) & ~used;
    for (std::uint64_t m = remaining; m;) {
      int v = __builtin_ctzll(m);
      m &= m - 1;
      cands[count++] = {column(v, pos), v};
    }
    std::sort(cands.begin(), cands.begin() + count,
              [](const Cand& a, const Cand& b) {
                return a.col != b.col ? a.col < b.col : a.v < b.v;
              });
    for (int i = 0; i < count; ++i) {
      auto [col, v] = cands[i];
      if (col > best[pos]) break;
      // Two candidates whose swap is an automorphism of the unplaced part
      // explore identical subtrees; keep the first.
      bool twin = false;
      for (int j = 0; j < i && !twin; ++j) {
        if (cands[j].col != col) continue;
        int w = cands[j].v;
        std::uint64_t diff = (g->neighbors(v) ^ g->neighbors(w)) & remaining &
                             ~(1ull << v) & ~(1ull << w);
        twin = diff == 0;
      }
      if (twin) continue;
      if (col < best[pos]) {
        best[pos] = col;
        for (int j = pos + 1; j < n; ++j) best[j] = kUnset;
      }
      perm[pos] = v;
      used |= 1ull << v;
      dfs(pos + 1);
      used &= ~(1ull << v);
    }
  }
};

}  // namespace

Graph canonical_representative(const Graph& g) {
  MinOrderSearch search;
  search.g = &g;
  search.n = g.n();
  search.run();
  Graph out(g.n());
  // best[pos] holds the winning column of position pos; bit (pos-1-i) pairs
  // position i with position pos.
  for (int pos = 1; pos < g.n(); ++pos)
    for (int i = 0; i < pos; ++i)
      if ((search.best[pos] >> (pos - 1 - i)) & 1) out.add_edge(i, pos);
  return out;
}

std::string canonical_form(const Graph& g) {
  return to_graph6(canonical_representative(g));
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.n() != b.n() || a.m() != b.m()) return false;
  auto da = a.degrees();
  auto db = b.degrees();
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_form(a) == canonical_form(b);
}

std::vector<Graph> enumerate_nonisomorphic(int n, bool allow_large) {
  if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
  if (n > 10)
    throw std::invalid_argument("enumeration beyond n = 10 is unsupported");
  if (n > 8 && !allow_large)
    throw std::invalid_argument(
        "enumeration beyond n = 8 must be requested explicitly");

  std::vector<std::pair<std::string, Graph>> level = {
      {canonical_form(Graph(1)), Graph(1)}};
  for (int m = 2; m <= n; ++m) {
    std::unordered_map<std::string, Graph> next;
    for (const auto& [key, g] : level) {
      for (std::uint64_t mask = 0; mask < (1ull << (m - 1)); ++mask) {
        Graph h(m);
        for (int u = 0; u < m - 1; ++u)
          for (int v = u + 1; v < m - 1; ++v)
            if (g.has_edge(u, v)) h.add_edge(u, v);
        for (std::uint64_t rest = mask; rest;) {
          int u = __builtin_ctzll(rest);
          rest &= rest - 1;
          h.add_edge(u, m - 1);
        }
        Graph rep = canonical_representative(h);
        next.emplace(to_graph6(rep), rep);
      }
    }
    level.assign(next.begin(), next.end());
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (auto& [key, g] : level) out.push_back(g);
  return out;
}

void for_each_nonisomorphic(int n, const std::function<void(const Graph&)>& fn,
                            bool allow_large) {
  for (const Graph& g : enumerate_nonisomorphic(n, allow_large)) fn(g);
}

}  // namespace gel
