#ifndef TIGHTCYCLE_ABSORB_HPP
#define TIGHTCYCLE_ABSORB_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tightcycle/core.hpp"
#include "tightcycle/path.hpp"
#include "tightcycle/rng.hpp"

namespace tightcycle {

// Ordered quadruple (x,y,z,w) for a vertex v with edges {x,y,z}, {y,z,w},
// {v,x,y}, {v,y,z}, {v,z,w} all present. Both x y z w and x y v z w are
// then tight paths with the same ends, which is the whole trick.
struct Absorber {
  Vertex v = -1;
  Vertex x = -1, y = -1, z = -1, w = -1;
};

struct AbsorberConstraint {
  Bitset forbidden;                       // W: candidates avoid this set
  const ThreeGraph* shadow_graph = nullptr;  // H' for the boundary codegrees
  double pair_threshold = 1.0;            // required codegree of (x,y), (z,w)
  const Bitset* restrict_codegree_to = nullptr;  // optional: count inside this set
};

bool is_absorber(const ThreeGraph& g, Vertex v, Vertex x, Vertex y, Vertex z,
                 Vertex w);
bool is_absorber(const ThreeGraph& g, const Absorber& a);

std::uint64_t count_absorbers(const ThreeGraph& g, Vertex v);

// Enumeration order: edges {v,y,z} from the pair index, then x, then w,
// all ascending; equivalent to brute force over ordered quadruples.
void for_each_absorber(const ThreeGraph& g, Vertex v,
                       const std::function<bool(const Absorber&)>& visit);
std::vector<Absorber> enumerate_absorbers(const ThreeGraph& g, Vertex v);

// Random sampling (50n quadruples) with full enumeration as fallback, so a
// nullopt means no constrained absorber exists at all.
std::optional<Absorber> find_absorber(const ThreeGraph& g, Vertex v,
                                      const AbsorberConstraint& c, Rng& rng);

// The 5-vertex path x y v z w; dropping v leaves the tight path x y z w
// with the same ends.
TightPath absorber_path(const Absorber& a);

}  // namespace tightcycle

#endif
