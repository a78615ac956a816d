#include "gel/editdist.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "gel/canonical.hpp"
#include "gel/graph6.hpp"
#include "node_counter.hpp"

namespace gel {

namespace {

constexpr int kMaxSearchVertices = 16;  // pair masks below hold C(16,2) bits

int pair_index(int u, int v) { return v * (v - 1) / 2 + u; }  // u < v

std::pair<int, int> pair_of_index(int p) {
  int v = 1;
  while ((v + 1) * v / 2 <= p) ++v;
  return {p - v * (v - 1) / 2, v};
}

struct PairMask {
  std::uint64_t w0 = 0, w1 = 0;

  void set(int i) { (i < 64 ? w0 : w1) |= 1ull << (i & 63); }
  bool test(int i) const { return ((i < 64 ? w0 : w1) >> (i & 63)) & 1; }
  void clear(int i) { (i < 64 ? w0 : w1) &= ~(1ull << (i & 63)); }
  bool intersects(const PairMask& o) const {
    return (w0 & o.w0) | (w1 & o.w1);
  }
  void merge(const PairMask& o) {
    w0 |= o.w0;
    w1 |= o.w1;
  }
};

// Per member size: which adjacency codes of a size-s vertex subset are
// forbidden. Codes index the C(s,2) in-subset pairs in column order. In
// subgraph mode a code is forbidden when it covers some permuted member edge
// set; `bases` keeps those edge sets, first occurrence first, to name one
// concrete embedded copy deterministically.
struct SizeTable {
  int s = 0;
  int pairs = 0;
  std::vector<std::pair<int, int>> local_pairs;
  std::vector<bool> bad;
  std::vector<std::uint16_t> bases;
};

struct Compiled {
  FamilyMode mode;
  std::vector<SizeTable> tables;  // ascending member size
};

std::uint16_t permuted_code(const Graph& m, const std::vector<int>& perm,
                            const std::vector<std::pair<int, int>>& lp) {
  std::uint16_t code = 0;
  for (std::size_t t = 0; t < lp.size(); ++t)
    if (m.has_edge(perm[lp[t].first], perm[lp[t].second])) code |= 1u << t;
  return code;
}

Compiled compile(const ForbiddenFamily& f) {
  Compiled out;
  out.mode = f.mode;
  std::map<int, std::vector<const Graph*>> by_size;
  for (const Graph& m : f.members) by_size[m.n()].push_back(&m);
  for (auto& [s, members] : by_size) {
    SizeTable t;
    t.s = s;
    t.pairs = s * (s - 1) / 2;
    for (int v = 0; v < s; ++v)
      for (int u = 0; u < v; ++u) t.local_pairs.emplace_back(u, v);
    t.bad.assign(std::size_t{1} << t.pairs, false);
    std::vector<int> perm(s);
    std::iota(perm.begin(), perm.end(), 0);
    for (const Graph* m : members) {
      std::vector<int> p = perm;
      do {
        std::uint16_t code = permuted_code(*m, p, t.local_pairs);
        if (f.mode == FamilyMode::induced) {
          t.bad[code] = true;
        } else if (std::find(t.bases.begin(), t.bases.end(), code) ==
                   t.bases.end()) {
          t.bases.push_back(code);
        }
      } while (std::next_permutation(p.begin(), p.end()));
    }
    if (f.mode == FamilyMode::subgraph) {
      for (std::uint16_t base : t.bases) t.bad[base] = true;
      // superset closure, one bit at a time
      for (int b = 0; b < t.pairs; ++b)
        for (std::size_t code = 0; code < t.bad.size(); ++code)
          if ((code >> b) & 1)
            t.bad[code] = t.bad[code] || t.bad[code ^ (1ull << b)];
    }
    out.tables.push_back(std::move(t));
  }
  return out;
}

// What one search node learns from a full scan of vertex subsets, sizes
// ascending and subsets lexicographic within a size.
struct Scan {
  bool any_copy = false;
  bool infeasible = false;       // some copy has every usable pair frozen
  int packing_lb = 0;            // pairwise pair-disjoint copies
  std::vector<int> branch;       // usable pair indices of the first copy
};

template <typename Fn>
void for_each_subset(int n, int s, Fn&& fn) {
  if (s > n) return;
  std::vector<int> sub(s);
  std::iota(sub.begin(), sub.end(), 0);
  while (true) {
    if (!fn(sub)) return;
    int i = s - 1;
    while (i >= 0 && sub[i] == n - s + i) --i;
    if (i < 0) return;
    ++sub[i];
    for (int j = i + 1; j < s; ++j) sub[j] = sub[j - 1] + 1;
  }
}

class Searcher {
 public:
  Searcher(const Graph& g, const Compiled& fam, internal::NodeCounter& counter)
      : g_(g), fam_(&fam), counter_(&counter) {}

  // Scan against the current graph and frozen set. `first_copy_only` serves
  // is_family_free-style questions.
  Scan scan(bool first_copy_only) const {
    Scan r;
    PairMask used;
    for (const SizeTable& t : fam_->tables) {
      bool done = false;
      for_each_subset(g_.n(), t.s, [&](const std::vector<int>& sub) {
        std::uint32_t code = 0;
        for (std::size_t i = 0; i < t.local_pairs.size(); ++i)
          if (g_.has_edge(sub[t.local_pairs[i].first],
                          sub[t.local_pairs[i].second]))
            code |= 1u << i;
        if (!t.bad[code]) return true;
        if (!r.any_copy && first_copy_only) {
          r.any_copy = true;
          done = true;
          return false;
        }
        std::vector<int> usable = copy_pairs(t, sub, code);
        if (usable.empty()) {
          r.infeasible = true;
          done = true;
          return false;
        }
        if (!r.any_copy) {
          r.any_copy = true;
          r.branch = usable;
        }
        PairMask mask;
        for (int p : usable) mask.set(p);
        if (!mask.intersects(used)) {
          ++r.packing_lb;
          used.merge(mask);
        }
        return true;
      });
      if (done) break;
    }
    return r;
  }

  // Iterative deepening; returns the optimum and optionally the
  // lexicographically least optimal toggle set.
  int solve(std::vector<int>* witness) {
    Scan root = scan(false);
    if (root.infeasible)
      throw std::domain_error("no graph on this vertex set avoids the family");
    if (!root.any_copy) {
      if (witness) witness->clear();
      return 0;
    }
    int max_budget = g_.n() * (g_.n() - 1) / 2;
    for (int b = std::max(1, root.packing_lb); b <= max_budget; ++b) {
      budget_ = b;
      collect_ = false;
      found_ = false;
      dfs();
      if (!found_) continue;
      if (witness) {
        collect_ = true;
        best_.clear();
        dfs();
        *witness = best_;
      }
      return b;
    }
    throw std::domain_error("no graph on this vertex set avoids the family");
  }

 private:
  std::vector<int> copy_pairs(const SizeTable& t, const std::vector<int>& sub,
                              std::uint32_t code) const {
    std::vector<int> out;
    if (fam_->mode == FamilyMode::induced) {
      for (const auto& [a, b] : t.local_pairs) {
        int p = pair_index(sub[a], sub[b]);
        if (!frozen_.test(p)) out.push_back(p);
      }
    } else {
      for (std::uint16_t base : t.bases) {
        if ((code & base) != base) continue;
        for (std::size_t i = 0; i < t.local_pairs.size(); ++i)
          if ((base >> i) & 1) {
            int p = pair_index(sub[t.local_pairs[i].first],
                               sub[t.local_pairs[i].second]);
            if (!frozen_.test(p)) out.push_back(p);
          }
        break;  // one deterministic copy per subset
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Returns true when the find-any search may unwind.
  bool dfs() {
    counter_->tick();
    Scan s = scan(false);
    if (s.infeasible) return false;
    if (!s.any_copy) {
      if (!collect_) {
        found_ = true;
        return true;
      }
      std::vector<int> cand = current_;
      std::sort(cand.begin(), cand.end());
      if (best_.empty() || cand.size() < best_.size() ||
          (cand.size() == best_.size() && cand < best_))
        best_ = cand;
      return false;
    }
    int depth = static_cast<int>(current_.size());
    if (depth >= budget_ || depth + s.packing_lb > budget_) return false;
    bool stop = false;
    for (int p : s.branch) {
      frozen_.set(p);  // stays on for later siblings: each set found once
      toggle(p);
      current_.push_back(p);
      stop = dfs();
      current_.pop_back();
      toggle(p);
      if (stop) break;
    }
    for (int p : s.branch) frozen_.clear(p);
    return stop;
  }

  void toggle(int p) {
    auto [u, v] = pair_of_index(p);
    g_.toggle_edge(u, v);
  }

  Graph g_;
  const Compiled* fam_;
  internal::NodeCounter* counter_;
  PairMask frozen_;
  int budget_ = 0;
  bool collect_ = false;
  bool found_ = false;
  std::vector<int> current_;
  std::vector<int> best_;
};

void check_search_order(const Graph& g) {
  if (g.n() > kMaxSearchVertices)
    throw std::invalid_argument("edit search supports at most 16 vertices");
}

EditSet to_edit_set(const std::vector<int>& pair_indices) {
  EditSet out;
  for (int p : pair_indices) {
    auto [u, v] = pair_of_index(p);
    out.toggles.push_back(VertexPair::of(u, v));
  }
  return out;
}

}  // namespace

ForbiddenFamily make_family(std::vector<Graph> members, FamilyMode mode) {
  if (members.empty())
    throw std::invalid_argument("a forbidden family needs at least one member");
  std::map<std::pair<int, std::string>, Graph> dedup;
  for (const Graph& m : members) {
    if (m.n() > 5)
      throw std::invalid_argument(
          "family members above 5 vertices are unsupported");
    Graph rep = canonical_representative(m);
    dedup.emplace(std::make_pair(m.n(), to_graph6(rep)), rep);
  }
  ForbiddenFamily out;
  out.mode = mode;
  for (auto& [key, rep] : dedup) out.members.push_back(rep);
  return out;
}

Graph apply_edits(const Graph& g, const EditSet& edits) {
  Graph out = g;
  for (const VertexPair& t : edits.toggles) out.toggle_edge(t.u, t.v);
  return out;
}

bool is_family_free(const Graph& g, const ForbiddenFamily& f) {
  Compiled fam = compile(f);
  SearchLimits wide;
  wide.node_budget = ~0ull;
  internal::NodeCounter counter(wide, nullptr);
  Searcher s(g, fam, counter);
  return !s.scan(true).any_copy;
}

DistWitness dist_graphs(const Graph& g, const Graph& h,
                        const SearchLimits& limits, SearchStats* stats) {
  if (g.n() != h.n())
    throw std::invalid_argument("graphs must have the same vertex count");
  if (g.n() > 9)
    throw std::invalid_argument("dist_graphs supports at most 9 vertices");
  internal::NodeCounter counter(limits, stats);
  int n = g.n();

  DistWitness best;
  best.mapping.resize(n);
  std::iota(best.mapping.begin(), best.mapping.end(), 0);
  best.distance = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u)
      best.distance += g.has_edge(u, v) != h.has_edge(u, v);

  std::vector<int> map(n, -1);
  std::uint64_t used = 0;
  auto dfs = [&](auto&& self, int idx, int cost) -> void {
    counter.tick();
    if (cost >= best.distance) return;
    if (idx == n) {
      best.distance = cost;
      best.mapping = map;
      return;
    }
    for (int img = 0; img < n; ++img) {
      if ((used >> img) & 1) continue;
      int add = 0;
      for (int prev = 0; prev < idx; ++prev)
        add += g.has_edge(prev, idx) != h.has_edge(map[prev], img);
      map[idx] = img;
      used |= 1ull << img;
      self(self, idx + 1, cost + add);
      used &= ~(1ull << img);
      map[idx] = -1;
    }
  };
  dfs(dfs, 0, 0);
  return best;
}

EditResult dist_to_forb(const Graph& g, const ForbiddenFamily& f,
                        const SearchLimits& limits, SearchStats* stats) {
  check_search_order(g);
  Compiled fam = compile(f);
  internal::NodeCounter counter(limits, stats);
  Searcher s(g, fam, counter);
  std::vector<int> witness;
  int d = s.solve(&witness);
  return {d, to_edit_set(witness)};
}

int dist_to_forb_value(const Graph& g, const ForbiddenFamily& f,
                       const SearchLimits& limits, SearchStats* stats) {
  check_search_order(g);
  Compiled fam = compile(f);
  internal::NodeCounter counter(limits, stats);
  Searcher s(g, fam, counter);
  return s.solve(nullptr);
}

int deletion_only_dist(const Graph& g, const ForbiddenFamily& f,
                       const SearchLimits& limits, SearchStats* stats) {
  if (f.mode != FamilyMode::subgraph)
    throw std::invalid_argument(
        "deletion_only_dist requires a subgraph-mode family");
  // Subgraph-mode branching already deletes only: every located copy is hit
  // through its current edges.
  return dist_to_forb_value(g, f, limits, stats);
}

MaxDistResult dist_n_forb(int n, const ForbiddenFamily& f, int jobs,
                          bool allow_large, const SearchLimits& limits,
                          SearchStats* stats) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("dist_n_forb supports n in 1..8");
  if (n == 8 && !allow_large)
    throw std::invalid_argument("n = 8 must be requested explicitly");
  std::vector<Graph> graphs = enumerate_nonisomorphic(n);
  Compiled fam = compile(f);

  std::vector<int> dist(graphs.size(), -1);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mu;
  std::atomic<std::uint64_t> nodes_total{0};

  auto worker = [&]() {
    while (!failed.load(std::memory_order_relaxed)) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) return;
      SearchStats local;
      try {
        internal::NodeCounter counter(limits, &local);
        Searcher s(graphs[i], fam, counter);
        dist[i] = s.solve(nullptr);
      } catch (const budget_exceeded& e) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true))
          error = std::make_exception_ptr(budget_exceeded(
              std::string(e.what()) + " while solving " +
                  to_graph6(graphs[i]),
              e.nodes()));
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!failed.exchange(true)) error = std::current_exception();
      }
      nodes_total.fetch_add(local.nodes);
    }
  };

  int workers = std::max(1, jobs);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (stats) stats->nodes += nodes_total.load();
  if (failed) std::rethrow_exception(error);

  MaxDistResult out;
  out.graphs_examined = graphs.size();
  out.distance = -1;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    if (dist[i] > out.distance) {
      out.distance = dist[i];
      out.extremal = graphs[i];
    }
  }
  out.extremal_g6 = to_graph6(out.extremal);
  return out;
}

}  // namespace gel
