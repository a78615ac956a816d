#include "gel/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "gel/rng.hpp"

namespace gel {

namespace {

std::vector<int> mask_vertices(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    out.push_back(__builtin_ctzll(m));
    m &= m - 1;
  }
  return out;
}

using i128 = __int128;

i128 abs128(i128 x) { return x < 0 ? -x : x; }

}  // namespace

PairDensity density(const Graph& g, std::uint64_t a, std::uint64_t b) {
  if (!a || !b) throw std::invalid_argument("density needs nonempty sets");
  if (a & b) throw std::invalid_argument("density needs disjoint sets");
  if ((a | b) & ~g.vertices_mask())
    throw std::invalid_argument("set mentions a vertex outside the graph");
  PairDensity out;
  out.a_size = __builtin_popcountll(a);
  out.b_size = __builtin_popcountll(b);
  for (std::uint64_t m = a; m;) {
    int v = __builtin_ctzll(m);
    m &= m - 1;
    out.edges_across += __builtin_popcountll(g.neighbors(v) & b);
  }
  out.density = Rational(out.edges_across,
                         std::int64_t{out.a_size} * out.b_size);
  return out;
}

RegularityResult is_epsilon_regular(const Graph& g, std::uint64_t a,
                                    std::uint64_t b, const Rational& eps) {
  if (eps <= Rational(0)) throw std::invalid_argument("eps must be positive");
  PairDensity base = density(g, a, b);
  if (base.a_size > 16 || base.b_size > 16)
    throw std::invalid_argument(
        "exhaustive regularity check caps |A|,|B| at 16; larger pairs need a "
        "sampling mode this tool does not provide");
  std::vector<int> av = mask_vertices(a), bv = mask_vertices(b);
  int na = base.a_size, nb = base.b_size;
  std::int64_t en = eps.num(), ed = eps.den();

  // cross adjacency of each B vertex against A positions
  std::vector<std::uint32_t> adj(nb, 0);
  for (int j = 0; j < nb; ++j)
    for (int i = 0; i < na; ++i)
      if (g.has_edge(av[i], bv[j])) adj[j] |= 1u << i;

  std::vector<std::int64_t> esum(std::size_t{1} << nb);
  std::vector<int> cnt(nb);
  for (std::uint32_t xm = 1; xm < (1u << na); ++xm) {
    int xs = __builtin_popcount(xm);
    // qualifying subsets satisfy |X| > eps|A|, strictly
    if (std::int64_t{xs} * ed <= en * na) continue;
    for (int j = 0; j < nb; ++j) cnt[j] = __builtin_popcount(adj[j] & xm);
    esum[0] = 0;
    for (std::uint32_t ym = 1; ym < (1u << nb); ++ym) {
      int low = __builtin_ctz(ym);
      esum[ym] = esum[ym & (ym - 1)] + cnt[low];
      int ys = __builtin_popcount(ym);
      if (std::int64_t{ys} * ed <= en * nb) continue;
      // |e(X,Y)/(xs*ys) - e(A,B)/(na*nb)| < eps, cross multiplied
      i128 lhs = abs128(i128(esum[ym]) * na * nb -
                        i128(base.edges_across) * xs * ys) *
                 ed;
      i128 rhs = i128(en) * xs * ys * na * nb;
      if (lhs >= rhs) {
        RegularityResult out;
        out.regular = false;
        RegularityWitness w;
        for (int i = 0; i < na; ++i)
          if ((xm >> i) & 1) w.x |= 1ull << av[i];
        for (int j = 0; j < nb; ++j)
          if ((ym >> j) & 1) w.y |= 1ull << bv[j];
        w.d_xy = Rational(esum[ym], std::int64_t{xs} * ys);
        w.d_ab = base.density;
        out.witness = w;
        return out;
      }
    }
  }
  return {};
}

namespace {

Equipartition partition_from_rng(int n, int ell, SplitMix64& rng) {
  std::vector<int> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  for (int i = n - 1; i > 0; --i)
    std::swap(verts[i], verts[rng.next_below(i + 1)]);
  Equipartition eq;
  int skip = n % ell, size = n / ell;
  eq.exceptional.assign(verts.begin(), verts.begin() + skip);
  for (int c = 0; c < ell; ++c)
    eq.clusters.emplace_back(verts.begin() + skip + c * size,
                             verts.begin() + skip + (c + 1) * size);
  return eq;
}

}  // namespace

Equipartition sample_equipartition(int n, int ell, std::uint64_t seed) {
  if (ell < 2 || n < ell)
    throw std::invalid_argument("equipartition needs 2 <= ell <= n");
  SplitMix64 rng(seed);
  return partition_from_rng(n, ell, rng);
}

void validate_equipartition(const Equipartition& eq, int n,
                            const std::optional<Rational>& eps) {
  std::vector<bool> seen(n, false);
  auto mark = [&](int v) {
    if (v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (seen[v]) throw std::invalid_argument("vertex appears twice");
    seen[v] = true;
  };
  for (int v : eq.exceptional) mark(v);
  for (const auto& c : eq.clusters) {
    if (c.size() != eq.clusters.front().size())
      throw std::invalid_argument("clusters differ in size");
    for (int v : c) mark(v);
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw std::invalid_argument("some vertex is missing");
  if (eps && Rational(static_cast<std::int64_t>(eq.exceptional.size())) >=
                 *eps * Rational(n))
    throw std::invalid_argument("exceptional set too large");
}

ConcentrationResult concentration_experiment(int n, int ell, const Rational& f,
                                             int trials, std::uint64_t seed) {
  if (ell < 2 || n < ell)
    throw std::invalid_argument("concentration needs 2 <= ell <= n");
  if (trials < 1) throw std::invalid_argument("trials must be positive");
  if (f <= Rational(0) || Rational(1, 2) < f)
    throw std::invalid_argument("band half-width f must lie in (0, 1/2]");

  ConcentrationResult out;
  out.trials = trials;
  std::int64_t fn = f.num(), fd = f.den();
  std::int64_t size = n / ell;
  std::int64_t cluster_pairs = size * size;

  for (int t = 0; t < trials; ++t) {
    SplitMix64 rng(SplitMix64::derive(seed, t));
    Equipartition eq = partition_from_rng(n, ell, rng);
    std::vector<int> cluster_of(n, -1);
    for (int c = 0; c < ell; ++c)
      for (int v : eq.clusters[c]) cluster_of[v] = c;

    // every pair consumes one draw, in fixed pair order, so the stream is
    // independent of the partition
    std::vector<std::int64_t> cross(ell * ell, 0);
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) {
        std::uint64_t bit = rng.next() >> 63;
        int cu = cluster_of[u], cv = cluster_of[v];
        if (bit && cu >= 0 && cv >= 0 && cu != cv)
          ++cross[std::min(cu, cv) * ell + std::max(cu, cv)];
      }

    bool pass = true;
    double dmin = 1.0, dmax = 0.0;
    for (int i = 0; i < ell; ++i)
      for (int j = i + 1; j < ell; ++j) {
        std::int64_t e = cross[i * ell + j];
        // 1/2 - f < e/size^2 < 1/2 + f, all in integers
        bool inside = 2 * fd * e > cluster_pairs * (fd - 2 * fn) &&
                      2 * fd * e < cluster_pairs * (fd + 2 * fn);
        pass = pass && inside;
        double d = static_cast<double>(e) / static_cast<double>(cluster_pairs);
        dmin = std::min(dmin, d);
        dmax = std::max(dmax, d);
      }
    out.passes += pass;
    out.per_trial_min_max.emplace_back(dmin, dmax);
  }
  out.pass_fraction = static_cast<double>(out.passes) / trials;
  return out;
}

double chernoff_bound_value(int n, double eps_prime, double f) {
  if (n < 1 || eps_prime <= 0.0 || f <= 0.0)
    throw std::invalid_argument("chernoff_bound_value needs positive inputs");
  double st = eps_prime * n * eps_prime * n;  // |S| * |T|
  return 2.0 * std::exp(n * std::log(4.0) - 2.0 * f * f * st);
}

}  // namespace gel
