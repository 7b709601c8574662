#include "tightcycle/kernels.hpp"

#include <atomic>

namespace tightcycle::kernels {

namespace {
std::atomic<bool> g_parallel{true};
}

bool parallel_enabled() { return g_parallel.load(std::memory_order_relaxed); }
void set_parallel_enabled(bool on) {
  g_parallel.store(on, std::memory_order_relaxed);
}

std::uint64_t p2_count(const Digraph& g1, const Digraph& g2) {
  const Vertex n = g1.vertex_count();
  const std::vector<int> in1 = g1.in_degrees();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(static) reduction(+ : total) \
    if (parallel_enabled() && n >= 256)
  for (Vertex y = 0; y < n; ++y)
    total += std::uint64_t(in1[std::size_t(y)]) *
             std::uint64_t(g2.out(y).count());
  return total;
}

std::uint64_t p2_count_serial(const Digraph& g1, const Digraph& g2) {
  const Vertex n = g1.vertex_count();
  std::uint64_t total = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      if (g1.arc(x, y)) total += std::uint64_t(g2.out(y).count());
  return total;
}

std::uint64_t cherry_edge_count(const ThreeGraph& h, const Digraph& g1,
                                const Digraph& g2) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) \
    if (parallel_enabled() && n >= 96)
  for (Vertex x = 0; x < n; ++x) {
    std::uint64_t local = 0;
    g1.out(x).for_each([&](int y) {
      if (y != x) local += std::uint64_t(and_count(h.pair_neighbors(x, y), g2.out(y)));
    });
    total += local;
  }
  return total;
}

std::uint64_t cherry_edge_count_serial(const ThreeGraph& h, const Digraph& g1,
                                       const Digraph& g2) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y) {
      if (!g1.arc(x, y)) continue;
      for (Vertex z = 0; z < n; ++z)
        if (g2.arc(y, z) && x != y && y != z && x != z && h.has_edge(x, y, z))
          ++total;
    }
  return total;
}

std::uint64_t points_edge_count(const ThreeGraph& h, const Bitset& X,
                                const Bitset& Y, const Bitset& Z) {
  const Vertex n = h.vertex_count();
  const std::vector<int> xs = X.to_vector();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) \
    if (parallel_enabled() && n >= 96)
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const Vertex x = xs[i];
    std::uint64_t local = 0;
    Y.for_each([&](int y) {
      if (y != x) local += std::uint64_t(and_count(h.pair_neighbors(x, y), Z));
    });
    total += local;
  }
  return total;
}

std::uint64_t points_edge_count_serial(const ThreeGraph& h, const Bitset& X,
                                       const Bitset& Y, const Bitset& Z) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        if (X.test(x) && Y.test(y) && Z.test(z) && x != y && y != z &&
            x != z && h.has_edge(x, y, z))
          ++total;
  return total;
}

std::uint64_t edge_pair_count(const ThreeGraph& h, const Bitset& X,
                              const Digraph& G) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 8) reduction(+ : total) \
    if (parallel_enabled() && n >= 96)
  for (Vertex y = 0; y < n; ++y) {
    std::uint64_t local = 0;
    G.out(y).for_each([&](int z) {
      if (z != y) local += std::uint64_t(and_count(h.pair_neighbors(y, z), X));
    });
    total += local;
  }
  return total;
}

std::uint64_t edge_pair_count_serial(const ThreeGraph& h, const Bitset& X,
                                     const Digraph& G) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
  for (Vertex y = 0; y < n; ++y)
    for (Vertex z = 0; z < n; ++z) {
      if (!G.arc(y, z) || y == z) continue;
      for (Vertex x = 0; x < n; ++x)
        if (X.test(x) && x != y && x != z && h.has_edge(x, y, z)) ++total;
    }
  return total;
}

std::uint64_t count_absorbers(const ThreeGraph& h, Vertex v) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : total) \
    if (parallel_enabled() && n >= 96)
  for (Vertex y = 0; y < n; ++y) {
    if (y == v) continue;
    std::uint64_t local = 0;
    h.pair_neighbors(v, y).for_each([&](int z) {
      // edge {v,y,z} held; x needs {v,x,y} and {x,y,z}, w needs {v,z,w}
      // and {y,z,w}; x and w land outside {v,y,z} automatically.
      Bitset cx = h.pair_neighbors(v, y);
      cx &= h.pair_neighbors(y, z);
      Bitset cw = h.pair_neighbors(v, z);
      cw &= h.pair_neighbors(y, z);
      const std::uint64_t nx = std::uint64_t(cx.count());
      const std::uint64_t nw = std::uint64_t(cw.count());
      local += nx * nw - std::uint64_t(and_count(cx, cw));
    });
    total += local;
  }
  return total;
}

std::uint64_t count_absorbers_serial(const ThreeGraph& h, Vertex v) {
  const Vertex n = h.vertex_count();
  std::uint64_t total = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = 0; y < n; ++y)
      for (Vertex z = 0; z < n; ++z)
        for (Vertex w = 0; w < n; ++w) {
          if (x == v || y == v || z == v || w == v) continue;
          if (x == y || x == z || x == w || y == z || y == w || z == w)
            continue;
          if (h.has_edge(x, y, z) && h.has_edge(y, z, w) &&
              h.has_edge(v, x, y) && h.has_edge(v, y, z) &&
              h.has_edge(v, z, w))
            ++total;
        }
  return total;
}

Digraph cherry_best_g1(const ThreeGraph& h, const Digraph& g2, double d) {
  const Vertex n = h.vertex_count();
  Digraph g1(n);
#pragma omp parallel for schedule(static) if (parallel_enabled() && n >= 96)
  for (Vertex x = 0; x < n; ++x) {
    Bitset& row = g1.out_mut(x);
    for (Vertex y = 0; y < n; ++y) {
      const double dout = d * double(g2.out(y).count());
      double m;
      if (x == y) {
        m = -dout;  // loop arcs never hit an edge
      } else {
        m = double(and_count(h.pair_neighbors(x, y), g2.out(y))) - dout;
      }
      if (m < 0.0) row.set(y);
    }
  }
  g1.recount();
  return g1;
}

Digraph cherry_best_g2(const ThreeGraph& h, const Digraph& g1, double d) {
  const Vertex n = h.vertex_count();
  const std::vector<int> indeg = g1.in_degrees();
  std::vector<Bitset> cols(static_cast<std::size_t>(n));
  for (Vertex y = 0; y < n; ++y) cols[std::size_t(y)] = g1.in_set(y);
  Digraph g2(n);
#pragma omp parallel for schedule(static) if (parallel_enabled() && n >= 96)
  for (Vertex y = 0; y < n; ++y) {
    Bitset& row = g2.out_mut(y);
    const double din = d * double(indeg[std::size_t(y)]);
    for (Vertex z = 0; z < n; ++z) {
      double m;
      if (y == z) {
        m = -din;
      } else {
        m = double(and_count(h.pair_neighbors(y, z), cols[std::size_t(y)])) - din;
      }
      if (m < 0.0) row.set(z);
    }
  }
  g2.recount();
  return g2;
}

}  // namespace tightcycle::kernels
