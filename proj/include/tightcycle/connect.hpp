#ifndef TIGHTCYCLE_CONNECT_HPP
#define TIGHTCYCLE_CONNECT_HPP

#include <optional>
#include <utility>
#include <vector>

#include "tightcycle/core.hpp"
#include "tightcycle/path.hpp"
#include "tightcycle/rng.hpp"

namespace tightcycle {

struct ConnectorParams {
  int internal_len = 6;       // 4 end vertices + 6 new = the 10-vertex connector
  double beta_threshold = 1.0;  // min codegree in h' for waypoint pairs
  int beam = 512;             // search width per depth
  // When set, lengths are tried ascending over [first, second] and the
  // first success wins; internal_len is ignored.
  std::optional<std::pair<int, int>> allow_len_range;
};

// One tight step from the ordered pair (x,y): the successor pairs (y,z).
std::vector<OrderedPair> tight_steps(const ThreeGraph& g, Vertex x, Vertex y);
inline std::vector<OrderedPair> tight_steps(const ThreeGraph& g, PathEnd e) {
  return tight_steps(g, e.inner, e.outer);
}

// Tight path a.inner a.outer u1..uk b.outer b.inner in g, internals distinct,
// outside `forbidden`, every waypoint pair with h'-codegree >= beta. A path
// ending ...a.inner a.outer, this connector, and a path starting
// b.outer b.inner... concatenate into one tight path.
//
// Bidirectional expansion over ordered pairs, meeting on a middle pair;
// beam-limited with randomized tie-breaking. Throws BadEnds if an end pair
// has h'-codegree 0 and NoPath when the search exhausts.
TightPath connect_pair(const ThreeGraph& g, const ThreeGraph& hprime, PathEnd a,
                       PathEnd b, const Bitset& forbidden,
                       const ConnectorParams& params, Rng& rng);

struct ChainResult {
  TightPath path;    // valid when !is_cycle
  TightCycle cycle;  // valid when is_cycle
  bool is_cycle = false;
  int connectors = 0;
  Bitset internals;  // vertices the connectors consumed
  std::vector<int> join_lengths;
};

// Joins path i's back end to path i+1's front end, feeding each connector's
// internals into the forbidden set; with close_cycle also joins the last end
// back to the first. Paths must be vertex-disjoint with ends in dH'.
ChainResult connect_chain(const ThreeGraph& g, const ThreeGraph& hprime,
                          const std::vector<TightPath>& paths,
                          const Bitset& forbidden,
                          const ConnectorParams& params, Rng& rng,
                          bool close_cycle);

}  // namespace tightcycle

#endif
