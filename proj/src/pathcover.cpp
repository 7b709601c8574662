#include "tightcycle/pathcover.hpp"

#include <string>

#include "tightcycle/kernels.hpp"

namespace tightcycle {

namespace {

// Uniform choice from a neighborhood restricted to `available`.
int pick_candidate(const Bitset& row, const Bitset& available, Rng& rng) {
  Bitset cand = row;
  cand &= available;
  const int c = cand.count();
  if (c == 0) return -1;
  int target = int(rng.below(std::uint64_t(c)));
  int chosen = -1;
  cand.for_each([&](int z) {
    if (target-- == 0) chosen = z;
  });
  return chosen;
}

// k-th edge (canonical order) fully inside `available`; count pass when k<0.
std::uint64_t edges_within(const ThreeGraph& g, const Bitset& available,
                           std::int64_t k, Triple* out) {
  const Vertex n = g.vertex_count();
  std::uint64_t count = 0;
  for (Vertex x = 0; x < n; ++x) {
    if (!available.test(x)) continue;
    for (Vertex y = x + 1; y < n; ++y) {
      if (!available.test(y)) continue;
      Bitset zs = g.pair_neighbors(x, y);
      zs &= available;
      bool done = false;
      zs.for_each([&](int z) {
        if (done || z <= y) return;
        if (k >= 0 && std::int64_t(count) == k) {
          *out = Triple{x, y, Vertex(z)};
          done = true;
          return;
        }
        ++count;
      });
      if (done) return count;
    }
  }
  return count;
}

CoverResult one_run(const ThreeGraph& g, const CoverParams& params, Rng rng) {
  const Vertex n = g.vertex_count();
  Bitset available = Bitset::full(n);
  CoverResult res;
  res.leftover = Bitset(n);

  while (int(res.paths.size()) < params.l0) {
    const std::uint64_t m = edges_within(g, available, -1, nullptr);
    if (m == 0) break;
    Triple seed;
    edges_within(g, available, std::int64_t(rng.below(m)), &seed);
    TightPath path{{seed.a, seed.b, seed.c}};
    available.reset(seed.a);
    available.reset(seed.b);
    available.reset(seed.c);
    path = extend_path(g, std::move(path), available, rng);
    for (Vertex v : path.seq) available.reset(v);
    res.paths.push_back(std::move(path));
  }
  res.leftover = available;
  return res;
}

}  // namespace

TightPath extend_path(const ThreeGraph& g, TightPath path, Bitset available,
                      Rng& rng) {
  for (Vertex v : path.seq) available.reset(v);
  bool back_first = true;
  for (;;) {
    bool grew = false;
    for (int attempt = 0; attempt < 2 && !grew; ++attempt) {
      const bool at_back = (attempt == 0) == back_first;
      const PathEnd e = at_back ? path.back_end() : path.front_end();
      const int z = pick_candidate(g.pair_neighbors(e.inner, e.outer),
                                   available, rng);
      if (z < 0) continue;
      if (at_back)
        path.seq.push_back(Vertex(z));
      else
        path.seq.insert(path.seq.begin(), Vertex(z));
      available.reset(z);
      grew = true;
    }
    if (!grew) return path;
    back_first = !back_first;
  }
}

CoverResult greedy_cover(const ThreeGraph& g, const CoverParams& params) {
  if (!(params.zeta > 0.0 && params.zeta <= 1.0))
    throw std::invalid_argument("zeta must be in (0,1]");
  if (params.l0 < 1) throw std::invalid_argument("l0 must be >= 1");
  const int restarts = params.restarts < 1 ? 1 : params.restarts;

  const Rng root(params.seed);
  bool have = false;
  int best_restart = -1;
  CoverResult best;
#pragma omp parallel for schedule(dynamic) if (kernels::parallel_enabled())
  for (int r = 0; r < restarts; ++r) {
    CoverResult res = one_run(g, params, root.derive("cover", std::uint64_t(r)));
    const int u = res.leftover.count();
#pragma omp critical
    {
      const int bu = have ? best.leftover.count() : 0;
      if (!have || u < bu ||
          (u == bu && (res.paths.size() < best.paths.size() ||
                       (res.paths.size() == best.paths.size() &&
                        r < best_restart)))) {
        best = std::move(res);
        best_restart = r;
        have = true;
      }
    }
  }

  const double target = params.zeta * double(g.vertex_count());
  if (double(best.leftover.count()) <= target &&
      int(best.paths.size()) <= params.l0)
    return best;
  throw CoverTooSparse(
      "best cover leaves " + std::to_string(best.leftover.count()) +
          " vertices uncovered (target " + std::to_string(target) + ") with " +
          std::to_string(best.paths.size()) + " paths",
      std::move(best));
}

}  // namespace tightcycle
