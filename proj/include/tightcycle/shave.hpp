#ifndef TIGHTCYCLE_SHAVE_HPP
#define TIGHTCYCLE_SHAVE_HPP

#include <vector>

#include "tightcycle/core.hpp"

namespace tightcycle {

struct ShaveParams {
  double mu = 0.5;
  double theta = 0.1;
};

// Spanning subgraph in which every pair has codegree >= threshold_used or
// exactly 0. zeroed_pairs lists all unordered pairs (first < second) with
// codegree 0 in the subgraph.
struct ShaveResult {
  ThreeGraph subgraph;
  std::vector<OrderedPair> zeroed_pairs;
  std::size_t removed_edges = 0;
  double threshold_used = 0.0;
  std::size_t low_pairs_seen = 0;  // pairs below the hypothesis codegree
};

// Repeatedly delete all edges at any pair with 0 < codegree < tau, scanning
// pairs in ascending lexicographic order per sweep, until stable. The fixed
// point is the unique maximal subgraph satisfying the dichotomy, so the
// processing order is a performance choice only.
ShaveResult purge(const ThreeGraph& g, double tau);

// Purge at tau = (mu - 8*theta^(1/4))(n-2), with the hypothesis "at most
// theta*C(n,2) pairs have codegree < mu(n-2)" checked up front
// (PreconditionFailed) and the edge-loss / zeroed-pair bounds checked after
// (BoundViolation).
ShaveResult strong_dense_subgraph(const ThreeGraph& g, double mu, double theta);
inline ShaveResult strong_dense_subgraph(const ThreeGraph& g,
                                         const ShaveParams& p) {
  return strong_dense_subgraph(g, p.mu, p.theta);
}

// The codegree-dichotomy subgraph consumed by the pipeline: threshold
// clamped to d*n/3, hypothesis measured at d(n-2)/2, and the shadow bound
// |dH'| >= (1 - rho^(1/5)) C(n,2) checked when the hypothesis held.
ShaveResult shave_graph(const ThreeGraph& g, double d, double rho);

}  // namespace tightcycle

#endif
