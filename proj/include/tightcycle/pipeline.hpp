#ifndef TIGHTCYCLE_PIPELINE_HPP
#define TIGHTCYCLE_PIPELINE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tightcycle/absorb.hpp"
#include "tightcycle/core.hpp"
#include "tightcycle/errors.hpp"
#include "tightcycle/path.hpp"
#include "tightcycle/rng.hpp"
#include "tightcycle/shave.hpp"

namespace tightcycle {

struct PipelineParams {
  double d = 0.5;
  double rho = 0.02;
  double alpha = 0.1;  // minimum-degree fraction, diagnostic only
  std::optional<double> sigma;         // default min{1/132, d/33}, floored at 3/n
  std::optional<double> zeta;          // default min{alpha*sigma/72, d*sigma/4320}, floored at 1/n
  int l0 = 20;
  int internal_len = 6;
  std::optional<double> beta_connect;  // assembly fraction, default d/20
  int reservoir_tries = 100;
  int cover_restarts = 5;
  int beam = 512;
  int global_retries = 3;  // whole-pipeline re-runs with seed+1
  std::uint64_t seed = 1;

  double sigma_value(Vertex n) const;
  double zeta_value(Vertex n) const;
};

// The random set A with its explicitly verified properties: (i) size within
// [sigma*n/2, 2*sigma*n], (ii) restricted degrees, (iii) restricted codegrees
// on shadow pairs.
struct ReservoirReport {
  Bitset A;
  bool size_ok = false;
  bool degree_ok = false;
  bool codegree_ok = false;
  Vertex worst_vertex = -1;   // (ii) violator if any
  OrderedPair worst_pair{-1, -1};  // (iii) violator if any
  int tries_used = 0;
};

struct ReservoirFailed : std::runtime_error {
  ReservoirFailed(const std::string& what, ReservoirReport report_)
      : std::runtime_error(what), report(std::move(report_)) {}
  ReservoirReport report;
};

// Rejection-sample A (each vertex independently with probability sigma) until
// (i)-(iii) all verify by explicit exhaustive checking. The codegree floor of
// (iii) is sigma/2 * min(codegree, shave threshold): the exact consequence the
// leftover-embedding stage consumes. `size_cap`, when given, additionally
// rejects reservoirs too large for the downstream vertex budget.
ReservoirReport sample_reservoir(const ThreeGraph& g, const ShaveResult& shaved,
                                 double sigma, int max_tries, Rng rng,
                                 std::optional<int> size_cap = std::nullopt);

// Absorbing path P0: one disjoint absorber per v in A (v itself excluded, so
// it stays absorbable), chained through connectors; slots[v] is the position
// of v's absorber inside the path.
struct AbsorbingPathRecord {
  TightPath path;
  std::map<Vertex, int> slots;
  std::vector<int> join_lengths;
  bool size_hypothesis_ok = true;  // |A| <= d*n/66 (warn-and-proceed)

  PathEnd front() const { return path.front_end(); }
  PathEnd back() const { return path.back_end(); }
};

AbsorbingPathRecord build_absorbing_path(const ThreeGraph& g,
                                         const ShaveResult& shaved,
                                         const Bitset& A,
                                         const PipelineParams& params, Rng rng);

// Insert each v of `extra` into its slot: v1 v2 v3 v4 -> v1 v2 v v3 v4.
// Tight, same ends, vertex set V(P) plus extra. Throws SlotInvalid if a
// gadget edge has vanished from the host.
TightPath absorb_into(const ThreeGraph& g, const AbsorbingPathRecord& rec,
                      const std::vector<Vertex>& extra);

struct StageLog {
  bool delta1_ok = false;
  double min_degree_fraction = 0.0;
  std::size_t shave_removed = 0;
  std::size_t shave_zeroed = 0;
  double shave_threshold = 0.0;
  int reservoir_tries = 0;
  int reservoir_size = 0;
  bool abspath_hypothesis_ok = true;
  int abspath_vertices = 0;
  int abspath_slots = 0;
  int cover_paths = 0;
  int cover_leftover = 0;
  int leftover_gadgets = 0;
  int connectors = 0;
  int connector_internals = 0;
  int absorbed = 0;
  int attempt = 0;
};

struct HamiltonCertificate {
  Vertex n = 0;
  std::vector<Vertex> order;  // cyclic, every window an edge
  PipelineParams params;
  StageLog log;
};

// The full construction: shave, reservoir, absorbing path, path cover on the
// remainder, leftover gadgets inside A*, chain into a cycle, absorb unused A.
// Every emitted certificate has been re-verified; stage failures carry the
// failing stage. Retries the whole run with seed+1 up to global_retries.
HamiltonCertificate find_tight_hamilton(const ThreeGraph& g,
                                        const PipelineParams& params);

}  // namespace tightcycle

#endif
