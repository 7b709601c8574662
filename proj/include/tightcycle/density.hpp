#ifndef TIGHTCYCLE_DENSITY_HPP
#define TIGHTCYCLE_DENSITY_HPP

#include <cstdint>
#include <optional>

#include "tightcycle/core.hpp"
#include "tightcycle/digraph.hpp"
#include "tightcycle/rng.hpp"

namespace tightcycle {

struct DensityParams {
  double d = 0.5;   // density, in (0,1]
  double rho = 0.0; // slack, >= 0
};

enum class DensityKind { Cherry, Points, Edge };

// A violating instance of the defining inequality: observed < bound,
// deficit = bound - observed > 0. The quantifier objects are carried so a
// witness can always be re-verified exactly.
struct DensityWitness {
  DensityKind kind = DensityKind::Cherry;
  Digraph g1, g2;      // cherry: both; edge: g2 holds G
  Bitset x, y, z;      // points: X,Y,Z; edge: x holds X
  std::uint64_t observed = 0;
  double bound = 0.0;
  double deficit = 0.0;
};

struct FalsifyBudget {
  int restarts = 20;
  int iterations = 50;
};

std::uint64_t p2_count(const Digraph& g1, const Digraph& g2);
std::uint64_t cherry_edge_count(const ThreeGraph& h, const Digraph& g1,
                                const Digraph& g2);
std::uint64_t points_edge_count(const ThreeGraph& h, const Bitset& X,
                                const Bitset& Y, const Bitset& Z);
std::uint64_t edge_pair_count(const ThreeGraph& h, const Bitset& X,
                              const Digraph& G);

// nullopt means the inequality holds for this instance of the quantifier.
std::optional<DensityWitness> check_cherry(const ThreeGraph& h,
                                           const Digraph& g1,
                                           const Digraph& g2,
                                           const DensityParams& p);
std::optional<DensityWitness> check_points(const ThreeGraph& h,
                                           const Bitset& X, const Bitset& Y,
                                           const Bitset& Z,
                                           const DensityParams& p);
std::optional<DensityWitness> check_edge(const ThreeGraph& h, const Bitset& X,
                                         const Digraph& G,
                                         const DensityParams& p);

// Sound-but-incomplete adversary: alternating best-response descent on the
// bilinear objective e - d*|P2|, restarted per budget. A returned witness is
// always re-checked exactly; absence of a witness proves nothing.
std::optional<DensityWitness> falsify_cherry(const ThreeGraph& h,
                                             const DensityParams& p,
                                             const FalsifyBudget& budget,
                                             Rng& rng);
std::optional<DensityWitness> falsify_points(const ThreeGraph& h,
                                             const DensityParams& p,
                                             const FalsifyBudget& budget,
                                             Rng& rng);

// Empirical lower bound on the rho for which h is (rho,d)-cherry-dense:
// max over descent-refined quantifier states of (d|P2| - e)/n^3, floored at 0.
double estimate_rho_hat(const ThreeGraph& h, double d, int samples, Rng& rng);

}  // namespace tightcycle

#endif
