#include "gel/heuristic.hpp"

#include <cstdlib>
#include <stdexcept>

#include "gel/rng.hpp"

namespace gel {

namespace {

void check_kc(int k, int c) {
  if (k < 1) throw std::invalid_argument("editor needs k >= 1");
  if (c < 0 || c > k) throw std::invalid_argument("editor needs 0 <= c <= k");
}

// Integer color weights over a common denominator: weight e for clique
// colors, N - e for coclique colors, or the uniform 1 each when degenerate.
struct Weights {
  std::int64_t clique = 0, coclique = 0, denom = 0;
  std::int64_t of(int color, int c) const {
    return color <= c ? clique : coclique;
  }
};

Weights weights_for(std::int64_t e, std::int64_t pairs, int k, int c) {
  Weights w;
  w.clique = e;
  w.coclique = pairs - e;
  w.denom = e * c + (pairs - e) * (k - c);
  if (w.denom == 0) {
    w.clique = w.coclique = 1;
    w.denom = k;
  }
  return w;
}

bool violates(bool clique_color, bool edge) { return clique_color != edge; }

EditorRun realize(const Graph& g, std::vector<int> colors,
                  const EditorPlan& plan) {
  EditorRun run;
  run.plan = plan;
  run.colors = std::move(colors);
  run.edited = g;
  for (int v = 1; v < g.n(); ++v)
    for (int u = 0; u < v; ++u) {
      if (run.colors[u] != run.colors[v]) continue;
      if (violates(run.colors[u] <= plan.c, g.has_edge(u, v))) {
        run.edited.toggle_edge(u, v);
        run.edits.toggles.push_back(VertexPair::of(u, v));
      }
    }
  for (int color = 1; color <= plan.k; ++color) {
    Block b;
    b.kind = color <= plan.c ? BlockKind::clique : BlockKind::coclique;
    for (int v = 0; v < g.n(); ++v)
      if (run.colors[v] == color) b.members |= 1ull << v;
    if (b.members) run.partition.blocks.push_back(b);
  }
  return run;
}

Rational graph_density(const Graph& g, std::int64_t& e, std::int64_t& pairs) {
  e = g.m();
  pairs = std::int64_t{g.n()} * (g.n() - 1) / 2;
  return pairs == 0 ? Rational(0) : Rational(e, pairs);
}

}  // namespace

int choose_c(const Rational& d, int k, int c_min, int c_max) {
  if (k < 1 || c_min < 0 || c_min > c_max || c_max > k)
    throw std::invalid_argument("choose_c needs 0 <= c_min <= c_max <= k");
  if (d < Rational(0) || Rational(1) < d)
    throw std::invalid_argument("density must lie in [0, 1]");
  if (2 * c_min <= k && k <= 2 * c_max)
    return d <= Rational(1, 2) ? c_min : c_max;
  int lo = std::abs(2 * c_min - k), hi = std::abs(2 * c_max - k);
  return lo <= hi ? c_min : c_max;
}

Probabilities optimal_probabilities(const Rational& d, int k, int c) {
  check_kc(k, c);
  if (d < Rational(0) || Rational(1) < d)
    throw std::invalid_argument("density must lie in [0, 1]");
  Rational denom = d * Rational(c) + (Rational(1) - d) * Rational(k - c);
  Probabilities out;
  if (denom == Rational(0)) {
    out.degenerate = true;
    out.p = c == k ? Rational(1, k) : Rational(0);
    out.q = c == k ? Rational(0) : Rational(1, k);
    return out;
  }
  out.p = d / denom;
  out.q = (Rational(1) - d) / denom;
  return out;
}

Rational expected_edits(const Rational& d, int n, int k, int c) {
  check_kc(k, c);
  Rational pairs(std::int64_t{n} * (n - 1) / 2);
  Rational denom = d * Rational(c) + (Rational(1) - d) * Rational(k - c);
  if (denom == Rational(0)) return pairs / Rational(k);
  return d * (Rational(1) - d) / denom * pairs;
}

EditorPlan make_plan(const Graph& g, int k, int c) {
  check_kc(k, c);
  std::int64_t e, pairs;
  EditorPlan plan;
  plan.k = k;
  plan.c = c;
  plan.d = graph_density(g, e, pairs);
  Probabilities pr = optimal_probabilities(plan.d, k, c);
  plan.p = pr.p;
  plan.q = pr.q;
  plan.degenerate = pr.degenerate;
  return plan;
}

EditorRun randomized_edit(const Graph& g, int k, int c, std::uint64_t seed) {
  EditorPlan plan = make_plan(g, k, c);
  std::int64_t e, pairs;
  graph_density(g, e, pairs);
  Weights w = weights_for(e, pairs, k, c);

  SplitMix64 rng(seed);
  std::vector<int> colors(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    std::uint64_t u = rng.next();
    std::int64_t cum = 0;
    for (int color = 1; color <= k; ++color) {
      cum += w.of(color, c);
      // u / 2^64 < cum / denom, exactly; zero-weight colors get no interval
      if ((unsigned __int128)u * (unsigned __int128)w.denom <
          ((unsigned __int128)cum << 64)) {
        colors[v] = color;
        break;
      }
    }
  }
  return realize(g, std::move(colors), plan);
}

EditorRun derandomized_edit(const Graph& g, int k, int c) {
  EditorPlan plan = make_plan(g, k, c);
  std::int64_t e, pairs;
  graph_density(g, e, pairs);
  Weights w = weights_for(e, pairs, k, c);
  int n = g.n();

  // Conditional expected toggle count, as an integer numerator over denom^2.
  std::vector<int> colors(n, 0);  // 0 = still random
  auto conditional_numerator = [&]() {
    std::int64_t total = 0;
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        bool edge = g.has_edge(u, v);
        int cu = colors[u], cv = colors[v];
        if (cu && cv) {
          if (cu == cv && violates(cu <= c, edge)) total += w.denom * w.denom;
        } else if (cu || cv) {
          int fixed = cu ? cu : cv;
          if (violates(fixed <= c, edge)) total += w.of(fixed, c) * w.denom;
        } else {
          // sum of squared weights over the violating colors
          total += edge ? (k - c) * w.coclique * w.coclique
                        : c * w.clique * w.clique;
        }
      }
    return total;
  };

  for (int v = 0; v < n; ++v) {
    std::int64_t best = -1;
    int best_color = 0;
    for (int color = 1; color <= k; ++color) {
      if (w.of(color, c) == 0) continue;  // never drawn at random either
      colors[v] = color;
      std::int64_t num = conditional_numerator();
      if (best < 0 || num < best) {
        best = num;
        best_color = color;
      }
    }
    colors[v] = best_color;
  }
  return realize(g, std::move(colors), plan);
}

}  // namespace gel
