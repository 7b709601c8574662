#include "tightcycle/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tightcycle/connect.hpp"
#include "tightcycle/oracle.hpp"
#include "tightcycle/pathcover.hpp"

namespace tightcycle {

double PipelineParams::sigma_value(Vertex n) const {
  if (sigma) return *sigma;
  const double formula = std::min(1.0 / 132.0, d / 33.0);
  const double floor = n > 0 ? 3.0 / double(n) : formula;
  return std::min(1.0, std::max(formula, floor));
}

double PipelineParams::zeta_value(Vertex n) const {
  if (zeta) return *zeta;
  const double s = sigma_value(n);
  const double formula = std::min(alpha * s / 72.0, d * s / 4320.0);
  const double floor = n > 0 ? 1.0 / double(n) : formula;
  return std::min(1.0, std::max(formula, floor));
}

ReservoirReport sample_reservoir(const ThreeGraph& g, const ShaveResult& shaved,
                                 double sigma, int max_tries, Rng rng,
                                 std::optional<int> size_cap) {
  const Vertex n = g.vertex_count();
  if (!(sigma > 0.0 && sigma <= 1.0))
    throw std::invalid_argument("sigma must be in (0,1]");
  if (sigma * double(n) < 2.0)
    throw std::invalid_argument("degenerate scale: sigma*n < 2");
  if (max_tries < 1) throw std::invalid_argument("max_tries must be >= 1");
  const ThreeGraph& hp = shaved.subgraph;
  const double tau = shaved.threshold_used;

  ReservoirReport last;
  for (int t = 1; t <= max_tries; ++t) {
    ReservoirReport rep;
    rep.tries_used = t;
    rep.A = Bitset(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.coin(sigma)) rep.A.set(v);

    const int size = rep.A.count();
    rep.size_ok = double(size) >= sigma * double(n) / 2.0 &&
                  double(size) <= 2.0 * sigma * double(n) &&
                  (!size_cap || size <= *size_cap);
    if (!rep.size_ok) {
      last = std::move(rep);
      continue;
    }

    rep.degree_ok = true;
    for (Vertex v = 0; v < n && rep.degree_ok; ++v) {
      const double need = double(g.vertex_degree(v)) * sigma * sigma / 2.0;
      if (double(g.restricted_degree(v, rep.A)) < need) {
        rep.degree_ok = false;
        rep.worst_vertex = v;
      }
    }
    if (!rep.degree_ok) {
      last = std::move(rep);
      continue;
    }

    // (iii): every shadow pair keeps the codegree floor the assembly uses.
    rep.codegree_ok = true;
    for (Vertex x = 0; x < n && rep.codegree_ok; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        const int cod = hp.codegree(x, y);
        if (cod == 0) continue;
        const double need = sigma / 2.0 * std::min(double(cod), tau);
        if (double(hp.restricted_codegree(x, y, rep.A)) < need) {
          rep.codegree_ok = false;
          rep.worst_pair = {x, y};
          break;
        }
      }
    if (rep.codegree_ok) return rep;
    last = std::move(rep);
  }
  throw ReservoirFailed(
      "no reservoir satisfied (i)-(iii) in " + std::to_string(max_tries) +
          " tries",
      std::move(last));
}

namespace {

Bitset vertices_of(const std::vector<Vertex>& seq, Vertex n) {
  Bitset b(n);
  for (Vertex v : seq) b.set(v);
  return b;
}

// Insert absorbed vertices into a sequence that contains P0 at offset 0,
// checking the three gadget windows for each insertion.
void insert_absorbed(const ThreeGraph& g, const AbsorbingPathRecord& rec,
                     std::vector<Vertex>& seq, std::vector<Vertex> verts) {
  std::sort(verts.begin(), verts.end(), [&](Vertex a, Vertex b) {
    return rec.slots.at(a) > rec.slots.at(b);
  });
  for (Vertex v : verts) {
    const int at = rec.slots.at(v);
    const Vertex v1 = seq[std::size_t(at)];
    const Vertex v2 = seq[std::size_t(at) + 1];
    const Vertex v3 = seq[std::size_t(at) + 2];
    const Vertex v4 = seq[std::size_t(at) + 3];
    if (!g.has_edge(v, v1, v2) || !g.has_edge(v, v2, v3) ||
        !g.has_edge(v, v3, v4))
      throw SlotInvalid("absorber slot edges missing from host graph");
    seq.insert(seq.begin() + at + 2, v);
  }
}

}  // namespace

AbsorbingPathRecord build_absorbing_path(const ThreeGraph& g,
                                         const ShaveResult& shaved,
                                         const Bitset& A,
                                         const PipelineParams& params, Rng rng) {
  const Vertex n = g.vertex_count();
  const double d = params.d;
  AbsorbingPathRecord rec;
  rec.size_hypothesis_ok = double(A.count()) <= d * double(n) / 66.0;

  Bitset used = A;  // W: the reservoir plus everything chosen so far
  ConnectorParams join;
  join.beta_threshold = d * double(n) / 6.0;
  join.beam = params.beam;
  join.allow_len_range = {{0, params.internal_len}};

  AbsorberConstraint constraint;
  constraint.shadow_graph = &shaved.subgraph;
  constraint.pair_threshold = d * double(n) / 3.0;

  const std::vector<int> members = A.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Vertex v = members[i];
    bool placed = false;
    std::string last_err = "no absorber found";
    for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
      // W contains A, hence v; the candidate filter excludes v regardless
      constraint.forbidden = used;
      constraint.forbidden.reset(v);
      auto a = find_absorber(g, v, constraint, rng);
      if (!a) break;
      if (rec.path.seq.empty()) {
        rec.path.seq = {a->x, a->y, a->z, a->w};
        rec.slots[v] = 0;
        for (Vertex u : rec.path.seq) used.set(u);
        placed = true;
        break;
      }
      // join the running path's back end to the new absorber's front (y, x)
      Bitset blocked = used;
      blocked.set(a->x);
      blocked.set(a->y);
      blocked.set(a->z);
      blocked.set(a->w);
      try {
        TightPath conn =
            connect_pair(g, shaved.subgraph, rec.path.back_end(),
                         PathEnd{a->y, a->x}, blocked, join, rng);
        rec.join_lengths.push_back(int(conn.seq.size()) - 4);
        for (std::size_t j = 2; j + 2 < conn.seq.size(); ++j) {
          rec.path.seq.push_back(conn.seq[j]);
          used.set(conn.seq[j]);
        }
        rec.slots[v] = int(rec.path.seq.size());
        for (Vertex u : {a->x, a->y, a->z, a->w}) {
          rec.path.seq.push_back(u);
          used.set(u);
        }
        placed = true;
      } catch (const NoPath& e) {
        last_err = e.what();  // try a different absorber for v
      }
    }
    if (!placed)
      throw PipelineError(Stage::AbsorbingPath,
                          "vertex " + std::to_string(v) + ": " + last_err);
  }
  if (!verify_tight_path(g, rec.path.seq))
    throw PipelineError(Stage::AbsorbingPath,
                        "assembled absorbing path failed verification (bug)");
  return rec;
}

TightPath absorb_into(const ThreeGraph& g, const AbsorbingPathRecord& rec,
                      const std::vector<Vertex>& extra) {
  Bitset inpath = vertices_of(rec.path.seq, g.vertex_count());
  for (Vertex v : extra) {
    if (!rec.slots.count(v))
      throw std::invalid_argument("vertex has no absorber slot");
    if (inpath.test(v))
      throw std::invalid_argument("vertex already lies on the path");
  }
  TightPath out = rec.path;
  insert_absorbed(g, rec, out.seq, extra);
  return out;
}

namespace {

HamiltonCertificate run_once(const ThreeGraph& g, const PipelineParams& params,
                             std::uint64_t seed, int attempt) {
  const Vertex n = g.vertex_count();
  const double d = params.d;
  const Rng root(seed);
  HamiltonCertificate cert;
  cert.n = n;
  cert.params = params;
  cert.log.attempt = attempt;

  // minimum-degree fraction, reported but never enforced
  const double pairs = double(n) * double(n - 1) / 2.0;
  cert.log.min_degree_fraction =
      pairs > 0 ? double(g.min_vertex_degree()) / pairs : 0.0;
  cert.log.delta1_ok = cert.log.min_degree_fraction >= params.alpha;

  // (1) codegree dichotomy
  ShaveResult shaved;
  try {
    shaved = shave_graph(g, d, params.rho);
  } catch (const PreconditionFailed& e) {
    throw PipelineError(Stage::Shave, e.what());
  } catch (const BoundViolation& e) {
    throw PipelineError(Stage::Shave, e.what());
  }
  cert.log.shave_removed = shaved.removed_edges;
  cert.log.shave_zeroed = shaved.zeroed_pairs.size();
  cert.log.shave_threshold = shaved.threshold_used;

  // (2) reservoir, capped so the absorbing path fits the vertex budget
  const double sigma = params.sigma_value(n);
  const int size_cap = std::max(4, (n - 2) / 6);
  ReservoirReport rep;
  try {
    rep = sample_reservoir(g, shaved, sigma, params.reservoir_tries,
                           root.derive("reservoir"), size_cap);
  } catch (const ReservoirFailed& e) {
    throw PipelineError(Stage::Reservoir, e.what());
  }
  cert.log.reservoir_tries = rep.tries_used;
  cert.log.reservoir_size = rep.A.count();

  // (3) absorbing path
  AbsorbingPathRecord rec =
      build_absorbing_path(g, shaved, rep.A, params, root.derive("abspath"));
  cert.log.abspath_hypothesis_ok = rec.size_hypothesis_ok;
  cert.log.abspath_vertices = int(rec.path.seq.size());
  cert.log.abspath_slots = int(rec.slots.size());

  // (4) cover the rest of H' by few disjoint paths
  Bitset universe = Bitset::full(n);
  universe.subtract(rep.A);
  universe.subtract(vertices_of(rec.path.seq, n));
  std::vector<TightPath> cover_paths;
  Bitset leftover(n);
  const int universe_size = universe.count();
  if (universe_size > 0) {
    const auto induced = shaved.subgraph.induced_subgraph(universe);
    // budget-aware leftover target: each uncovered vertex costs ~10 A-vertices
    const double affordable =
        std::max(0.0, (double(rep.A.count()) - 4.0) / 6.0);
    const double target = std::min(params.zeta_value(n) * double(n), affordable);
    CoverParams cp;
    cp.zeta = std::min(1.0, std::max(target / double(universe_size), 1e-9));
    cp.l0 = params.l0;
    cp.restarts = params.cover_restarts;
    cp.seed = root.derive("cover").root_seed();
    CoverResult cov;
    try {
      cov = greedy_cover(induced.graph, cp);
    } catch (const CoverTooSparse& e) {
      throw PipelineError(Stage::Cover, e.what());
    }
    for (const TightPath& p : cov.paths) {
      TightPath mapped;
      mapped.seq.reserve(p.seq.size());
      for (Vertex v : p.seq) mapped.seq.push_back(induced.to_old[std::size_t(v)]);
      cover_paths.push_back(std::move(mapped));
    }
    cov.leftover.for_each([&](int v) { leftover.set(induced.to_old[std::size_t(v)]); });
  }
  cert.log.cover_paths = int(cover_paths.size());
  cert.log.cover_leftover = leftover.count();

  // (5) put each uncovered vertex into a 5-vertex gadget inside A*
  Bitset a_unused = rep.A;
  Bitset astar = rep.A;
  astar |= leftover;
  const auto add_ends = [&](const TightPath& p) {
    astar.set(p.seq[0]);
    astar.set(p.seq[1]);
    astar.set(p.seq[p.seq.size() - 2]);
    astar.set(p.seq.back());
  };
  add_ends(rec.path);
  for (const TightPath& p : cover_paths) add_ends(p);
  const int astar_size = astar.count();

  std::vector<TightPath> gadgets;
  for (Vertex v : leftover.to_vector()) {
    AbsorberConstraint c;
    c.forbidden = a_unused;
    c.forbidden.flip();  // candidates come from unused A only
    c.forbidden.reset(v);
    c.shadow_graph = &shaved.subgraph;
    c.pair_threshold = d * double(astar_size) / 18.0;
    c.restrict_codegree_to = &astar;
    Rng vr = root.derive("leftover", std::uint64_t(v));
    auto a = find_absorber(g, v, c, vr);
    if (!a)
      throw PipelineError(Stage::LeftoverEmbed,
                          "no gadget absorber for uncovered vertex " +
                              std::to_string(v));
    gadgets.push_back(absorber_path(*a));
    for (Vertex u : {a->x, a->y, a->z, a->w}) a_unused.reset(u);
  }
  cert.log.leftover_gadgets = int(gadgets.size());

  // (6) chain everything into a tight cycle through unused A vertices
  std::vector<TightPath> all_paths;
  all_paths.push_back(rec.path);
  for (auto& p : cover_paths) all_paths.push_back(std::move(p));
  for (auto& p : gadgets) all_paths.push_back(std::move(p));

  ConnectorParams chain_params;
  chain_params.beta_threshold =
      (params.beta_connect ? *params.beta_connect : d / 20.0) *
      double(astar_size);
  chain_params.beam = params.beam;
  chain_params.allow_len_range = {{0, params.internal_len}};
  Bitset chain_forbidden = a_unused;
  chain_forbidden.flip();

  ChainResult chain;
  Rng chain_rng = root.derive("connect");
  try {
    chain = connect_chain(g, shaved.subgraph, all_paths, chain_forbidden,
                          chain_params, chain_rng, /*close_cycle=*/true);
  } catch (const NoPath& e) {
    throw PipelineError(Stage::Connect, e.what());
  } catch (const BadEnds& e) {
    throw PipelineError(Stage::Connect, e.what());
  }
  cert.log.connectors = chain.connectors;
  cert.log.connector_internals = chain.internals.count();

  // stage budget: connectors consumed unused A* vertices only
  Bitset outside = chain.internals;
  outside.subtract(a_unused);
  if (outside.any())
    throw PipelineError(Stage::Connect,
                        "connector used vertices outside unused A (bug)");
  a_unused.subtract(chain.internals);

  // (7) absorb whatever remains of A into P0, which the cycle contains as
  // a contiguous segment starting at position 0
  std::vector<Vertex>& order = chain.cycle.order;
  if (order.size() + std::size_t(a_unused.count()) != std::size_t(n))
    throw PipelineError(Stage::Verify, "vertex conservation failed (bug)");
  for (std::size_t i = 0; i < rec.path.seq.size(); ++i)
    if (order[i] != rec.path.seq[i])
      throw PipelineError(Stage::Verify,
                          "absorbing path is not a cycle prefix (bug)");
  const std::vector<Vertex> remaining = a_unused.to_vector();
  try {
    insert_absorbed(g, rec, order, remaining);
  } catch (const SlotInvalid& e) {
    throw PipelineError(Stage::Verify, e.what());
  }
  cert.log.absorbed = int(remaining.size());

  // (8) final independent verification; failure here is always a bug
  if (!verify_hamilton_cycle(g, order))
    throw PipelineError(Stage::Verify, "emitted order failed verification");
  cert.order = order;
  return cert;
}

}  // namespace

HamiltonCertificate find_tight_hamilton(const ThreeGraph& g,
                                        const PipelineParams& params) {
  const int attempts = std::max(1, params.global_retries);
  std::string last = "pipeline not attempted";
  Stage last_stage = Stage::Shave;
  for (int a = 0; a < attempts; ++a) {
    try {
      return run_once(g, params, params.seed + std::uint64_t(a), a);
    } catch (const PipelineError& e) {
      last = e.what();
      last_stage = e.stage;
      if (e.stage == Stage::Verify) throw;  // bugs are not retried
    }
  }
  throw PipelineError(last_stage,
                      std::to_string(attempts) + " attempts failed; last: " + last);
}

}  // namespace tightcycle
