#include "gel/chib.hpp"

#include <algorithm>
#include <stdexcept>

#include "node_counter.hpp"

namespace gel {

namespace {

std::vector<int> by_descending_degree(const Graph& g) {
  std::vector<int> order(g.n());
  for (int v = 0; v < g.n(); ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.degree(a) > g.degree(b);
  });
  return order;
}

struct PartitionSearch {
  const Graph* g;
  std::vector<int> order;
  int max_cliques, max_cocliques;
  std::vector<Block> open;
  int open_cliques = 0, open_cocliques = 0;
  internal::NodeCounter* counter;

  bool place(int idx) {
    counter->tick();
    if (idx == static_cast<int>(order.size())) return true;
    int v = order[idx];
    std::uint64_t nb = g->neighbors(v);
    // Existing clique blocks first, then one fresh clique, then cocliques the
    // same way; fresh blocks are interchangeable so a single new block per
    // kind suffices. Index access: recursion grows the vector and would
    // invalidate references held across the call.
    std::size_t present = open.size();
    for (int pass = 0; pass < 2; ++pass) {
      BlockKind kind = pass == 0 ? BlockKind::clique : BlockKind::coclique;
      for (std::size_t i = 0; i < present; ++i) {
        if (open[i].kind != kind) continue;
        std::uint64_t mem = open[i].members;
        bool fits = kind == BlockKind::clique ? (nb & mem) == mem
                                              : (nb & mem) == 0;
        if (!fits) continue;
        open[i].members = mem | 1ull << v;
        if (place(idx + 1)) return true;
        open[i].members = mem;
      }
      int& opened = kind == BlockKind::clique ? open_cliques : open_cocliques;
      int limit = kind == BlockKind::clique ? max_cliques : max_cocliques;
      if (opened < limit) {
        open.push_back({1ull << v, kind});
        ++opened;
        if (place(idx + 1)) return true;
        --opened;
        open.pop_back();
      }
    }
    return false;
  }
};

int greedy_clique_size(const Graph& g) {
  int best = 1;
  for (int start = 0; start < g.n(); ++start) {
    std::uint64_t cand = g.neighbors(start);
    int size = 1;
    while (cand) {
      int pick = -1, pick_score = -1;
      for (std::uint64_t m = cand; m;) {
        int u = __builtin_ctzll(m);
        m &= m - 1;
        int score = __builtin_popcountll(g.neighbors(u) & cand);
        if (score > pick_score) {
          pick_score = score;
          pick = u;
        }
      }
      ++size;
      cand &= g.neighbors(pick);
    }
    best = std::max(best, size);
  }
  return best;
}

int greedy_coloring_size(const Graph& g, const std::vector<int>& order) {
  std::vector<int> color(g.n(), -1);
  int used = 0;
  for (int v : order) {
    std::uint64_t taken = 0;
    for (std::uint64_t m = g.neighbors(v); m;) {
      int u = __builtin_ctzll(m);
      m &= m - 1;
      if (color[u] >= 0) taken |= 1ull << color[u];
    }
    int c = __builtin_ctzll(~taken);
    color[v] = c;
    used = std::max(used, c + 1);
  }
  return used;
}

struct ColorSearch {
  const Graph* g;
  std::vector<int> order;
  int k;
  std::vector<int> color;
  internal::NodeCounter* counter;

  bool dfs(int idx, int max_used) {
    counter->tick();
    if (idx == static_cast<int>(order.size())) return true;
    int v = order[idx];
    std::uint64_t taken = 0;
    for (std::uint64_t m = g->neighbors(v); m;) {
      int u = __builtin_ctzll(m);
      m &= m - 1;
      if (color[u] >= 0) taken |= 1ull << color[u];
    }
    // Fresh colors are interchangeable: allow at most one beyond those used.
    int top = std::min(max_used, k - 1);
    for (int c = 0; c <= top; ++c) {
      if ((taken >> c) & 1) continue;
      color[v] = c;
      if (dfs(idx + 1, std::max(max_used, c + 1))) return true;
      color[v] = -1;
    }
    return false;
  }
};

bool feasible(const Graph& g, int cliques, int cocliques,
              internal::NodeCounter& counter) {
  if (cliques < 0 || cocliques < 0)
    throw std::invalid_argument("block counts must be nonnegative");
  PartitionSearch s{&g, by_descending_degree(g), cliques, cocliques,
                    {},  0,                      0,       &counter};
  return s.place(0);
}

void require_small(const Graph& g, const char* who) {
  if (g.n() > 30)
    throw std::invalid_argument(std::string(who) +
                                " supports at most 30 vertices");
}

int chromatic_number_impl(const Graph& g, internal::NodeCounter& counter) {
  auto order = by_descending_degree(g);
  int lower = greedy_clique_size(g);
  int upper = greedy_coloring_size(g, order);
  for (int k = lower; k < upper; ++k) {
    ColorSearch s{&g, order, k, std::vector<int>(g.n(), -1), &counter};
    if (s.dfs(0, 0)) return k;
  }
  return upper;
}

}  // namespace

std::optional<Partition> exists_partition(const Graph& g, int cliques,
                                          int cocliques,
                                          const SearchLimits& limits,
                                          SearchStats* stats) {
  if (cliques < 0 || cocliques < 0)
    throw std::invalid_argument("block counts must be nonnegative");
  internal::NodeCounter counter(limits, stats);
  PartitionSearch s{&g, by_descending_degree(g), cliques, cocliques,
                    {},  0,                      0,       &counter};
  if (!s.place(0)) return std::nullopt;
  Partition p;
  p.blocks = s.open;
  return p;
}

BinaryChromatic binary_chromatic_full(const Graph& g,
                                      const SearchLimits& limits,
                                      SearchStats* stats) {
  require_small(g, "binary_chromatic");
  internal::NodeCounter counter(limits, stats);
  // No level below max(chromatic, clique cover) can clear c = 0 and c = t
  // simultaneously, so start there.
  int chi = chromatic_number_impl(g, counter);
  int chi_bar = chromatic_number_impl(complement(g), counter);
  for (int t = std::max(chi, chi_bar);; ++t) {
    std::vector<bool> row(t + 1, false);
    bool all = true;
    for (int c = 0; c <= t && all; ++c) {
      row[c] = feasible(g, c, t - c, counter);
      all = row[c];
    }
    if (all) return {t, FeasibilityTable{t - 1, row}};
  }
}

int binary_chromatic(const Graph& g, const SearchLimits& limits,
                     SearchStats* stats) {
  return binary_chromatic_full(g, limits, stats).chi_b;
}

CMinMax c_min_c_max(const Graph& g, const SearchLimits& limits,
                    SearchStats* stats) {
  int chi_b = binary_chromatic(g, limits, stats);
  if (chi_b < 2)
    throw std::domain_error(
        "c_min/c_max are defined only for graphs with binary chromatic "
        "number at least 2");
  internal::NodeCounter counter(limits, stats);
  int k = chi_b - 1;
  CMinMax out;
  out.k = k;
  out.feasible.assign(k + 1, false);
  out.c_min = -1;
  for (int c = 0; c <= k; ++c) {
    out.feasible[c] = feasible(g, c, k - c, counter);
    if (!out.feasible[c]) {
      if (out.c_min < 0) out.c_min = c;
      out.c_max = c;
    }
  }
  return out;
}

int chromatic_number(const Graph& g, const SearchLimits& limits,
                     SearchStats* stats) {
  require_small(g, "chromatic_number");
  internal::NodeCounter counter(limits, stats);
  return chromatic_number_impl(g, counter);
}

int clique_cover_number(const Graph& g, const SearchLimits& limits,
                        SearchStats* stats) {
  return chromatic_number(complement(g), limits, stats);
}

}  // namespace gel
