#ifndef TIGHTCYCLE_PATHCOVER_HPP
#define TIGHTCYCLE_PATHCOVER_HPP

#include <cstdint>
#include <vector>

#include "tightcycle/core.hpp"
#include "tightcycle/errors.hpp"
#include "tightcycle/path.hpp"
#include "tightcycle/rng.hpp"

namespace tightcycle {

struct CoverParams {
  double zeta = 0.05;     // leftover fraction target
  int l0 = 20;            // max paths
  int restarts = 5;
  std::uint64_t seed = 1;
};

struct CoverResult {
  std::vector<TightPath> paths;  // pairwise vertex-disjoint, each tight
  Bitset leftover;               // U = V minus the covered vertices
};

struct CoverTooSparse : std::runtime_error {
  CoverTooSparse(const std::string& what, CoverResult best_)
      : std::runtime_error(what), best(std::move(best_)) {}
  CoverResult best;  // best attempt, for diagnostics
};

// Greedily grow `path` at either end into `available` (uniformly random
// choice per step, alternating which end is tried first) until both ends
// stall. Returns the maximal extension.
TightPath extend_path(const ThreeGraph& g, TightPath path, Bitset available,
                      Rng& rng);

// Randomized greedy cover with restarts: seed a path at a random edge among
// the available vertices, extend maximally, repeat until no edge remains or
// l0 paths exist. Keeps the restart minimizing |U| (ties: fewer paths, then
// lower restart index). Succeeds iff |U| <= zeta*n and #paths <= l0;
// otherwise throws CoverTooSparse carrying the best result.
CoverResult greedy_cover(const ThreeGraph& g, const CoverParams& params);

}  // namespace tightcycle

#endif
