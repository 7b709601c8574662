#include "tightcycle/absorb.hpp"

#include <stdexcept>

#include "tightcycle/kernels.hpp"

namespace tightcycle {

bool is_absorber(const ThreeGraph& g, Vertex v, Vertex x, Vertex y, Vertex z,
                 Vertex w) {
  if (x == v || y == v || z == v || w == v) return false;
  if (x == y || x == z || x == w || y == z || y == w || z == w) return false;
  return g.has_edge(x, y, z) && g.has_edge(y, z, w) && g.has_edge(v, x, y) &&
         g.has_edge(v, y, z) && g.has_edge(v, z, w);
}

bool is_absorber(const ThreeGraph& g, const Absorber& a) {
  return is_absorber(g, a.v, a.x, a.y, a.z, a.w);
}

std::uint64_t count_absorbers(const ThreeGraph& g, Vertex v) {
  if (v < 0 || v >= g.vertex_count()) throw OutOfRange("vertex out of range");
  return kernels::count_absorbers(g, v);
}

void for_each_absorber(const ThreeGraph& g, Vertex v,
                       const std::function<bool(const Absorber&)>& visit) {
  const Vertex n = g.vertex_count();
  if (v < 0 || v >= n) throw OutOfRange("vertex out of range");
  for (Vertex y = 0; y < n; ++y) {
    if (y == v) continue;
    bool stop = false;
    g.pair_neighbors(v, y).for_each([&](int z) {
      if (stop) return;
      Bitset cx = g.pair_neighbors(v, y);
      cx &= g.pair_neighbors(y, z);
      Bitset cw = g.pair_neighbors(v, z);
      cw &= g.pair_neighbors(y, z);
      cx.for_each([&](int x) {
        if (stop) return;
        cw.for_each([&](int w) {
          if (stop || w == x) return;
          if (!visit(Absorber{v, Vertex(x), y, Vertex(z), Vertex(w)}))
            stop = true;
        });
      });
    });
    if (stop) return;
  }
}

std::vector<Absorber> enumerate_absorbers(const ThreeGraph& g, Vertex v) {
  std::vector<Absorber> out;
  for_each_absorber(g, v, [&](const Absorber& a) {
    out.push_back(a);
    return true;
  });
  return out;
}

namespace {

bool meets_constraint(const ThreeGraph& g, const Absorber& a,
                      const AbsorberConstraint& c) {
  if (c.forbidden.universe() > 0 &&
      (c.forbidden.test(a.x) || c.forbidden.test(a.y) || c.forbidden.test(a.z) ||
       c.forbidden.test(a.w)))
    return false;
  if (!is_absorber(g, a)) return false;
  const ThreeGraph& shadow = c.shadow_graph ? *c.shadow_graph : g;
  const auto boundary_ok = [&](Vertex p, Vertex q) {
    const int cod = c.restrict_codegree_to
                        ? shadow.restricted_codegree(p, q, *c.restrict_codegree_to)
                        : shadow.codegree(p, q);
    return double(cod) >= c.pair_threshold;
  };
  return boundary_ok(a.x, a.y) && boundary_ok(a.z, a.w);
}

}  // namespace

std::optional<Absorber> find_absorber(const ThreeGraph& g, Vertex v,
                                      const AbsorberConstraint& c, Rng& rng) {
  const Vertex n = g.vertex_count();
  if (v < 0 || v >= n) throw OutOfRange("vertex out of range");
  if (c.forbidden.universe() > 0 && c.forbidden.test(v))
    throw std::invalid_argument("v itself is forbidden");

  std::vector<int> allowed;
  allowed.reserve(std::size_t(n));
  for (Vertex u = 0; u < n; ++u)
    if (u != v && !(c.forbidden.universe() > 0 && c.forbidden.test(u)))
      allowed.push_back(u);
  if (allowed.size() < 4) return std::nullopt;

  // In-regime graphs have a constant fraction of all n^4 quadruples as
  // absorbers, so sampling lands one quickly; enumeration restores
  // completeness.
  const std::uint64_t budget = 50ull * std::uint64_t(n);
  const std::uint64_t m = allowed.size();
  for (std::uint64_t t = 0; t < budget; ++t) {
    const Vertex x = allowed[rng.below(m)];
    const Vertex y = allowed[rng.below(m)];
    const Vertex z = allowed[rng.below(m)];
    const Vertex w = allowed[rng.below(m)];
    const Absorber a{v, x, y, z, w};
    if (meets_constraint(g, a, c)) return a;
  }

  std::optional<Absorber> found;
  for_each_absorber(g, v, [&](const Absorber& a) {
    if (meets_constraint(g, a, c)) {
      found = a;
      return false;
    }
    return true;
  });
  return found;
}

TightPath absorber_path(const Absorber& a) {
  return TightPath{{a.x, a.y, a.v, a.z, a.w}};
}

}  // namespace tightcycle
