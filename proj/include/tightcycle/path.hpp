#ifndef TIGHTCYCLE_PATH_HPP
#define TIGHTCYCLE_PATH_HPP

#include <vector>

#include "tightcycle/core.hpp"

namespace tightcycle {

// Ordered end of a tight path. For a path v1 v2 ... v(p-1) vp the ends are
// (v2, v1) and (v(p-1), vp): outer is the terminal vertex, inner its
// neighbor one step in. A connector continuing past the back end extends
// the sequence ... inner, outer, z with {inner, outer, z} an edge.
struct PathEnd {
  Vertex inner = -1;
  Vertex outer = -1;
  bool operator==(const PathEnd&) const = default;
};

struct TightPath {
  std::vector<Vertex> seq;

  std::size_t size() const { return seq.size(); }
  PathEnd front_end() const { return {seq[1], seq[0]}; }
  PathEnd back_end() const { return {seq[seq.size() - 2], seq.back()}; }
};

struct TightCycle {
  std::vector<Vertex> order;
};

}  // namespace tightcycle

#endif
