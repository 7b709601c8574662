#include "tightcycle/connect.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "tightcycle/oracle.hpp"

namespace tightcycle {

std::vector<OrderedPair> tight_steps(const ThreeGraph& g, Vertex x, Vertex y) {
  std::vector<OrderedPair> out;
  g.pair_neighbors(x, y).for_each(
      [&](int z) { out.push_back({y, Vertex(z)}); });
  return out;
}

namespace {

struct SearchState {
  std::vector<Vertex> prefix;  // starts with the two end vertices
};

bool in_prefix(const SearchState& st, Vertex z) {
  for (Vertex v : st.prefix)
    if (v == z) return true;
  return false;
}

// Expand every state by one tight step into `avail`, filtering new pairs by
// the waypoint codegree discipline, then cap at `beam` via a random subset.
std::vector<SearchState> expand(const ThreeGraph& g, const ThreeGraph& hprime,
                                const std::vector<SearchState>& frontier,
                                const Bitset& avail, double beta, int beam,
                                Rng& rng) {
  std::vector<SearchState> next;
  for (const SearchState& st : frontier) {
    const Vertex x = st.prefix[st.prefix.size() - 2];
    const Vertex y = st.prefix.back();
    Bitset cand = g.pair_neighbors(x, y);
    cand &= avail;
    cand.for_each([&](int z) {
      if (in_prefix(st, Vertex(z))) return;
      if (double(hprime.codegree(y, Vertex(z))) < beta) return;
      SearchState ns = st;
      ns.prefix.push_back(Vertex(z));
      next.push_back(std::move(ns));
    });
  }
  if (beam > 0 && next.size() > std::size_t(beam)) {
    // random beam-subset, kept in generation order
    std::vector<std::size_t> idx(next.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    for (int i = 0; i < beam; ++i) {
      const std::size_t j = i + rng.below(idx.size() - std::size_t(i));
      std::swap(idx[std::size_t(i)], idx[j]);
    }
    idx.resize(std::size_t(beam));
    std::sort(idx.begin(), idx.end());
    std::vector<SearchState> kept;
    kept.reserve(idx.size());
    for (std::size_t i : idx) kept.push_back(std::move(next[i]));
    next = std::move(kept);
  }
  return next;
}

std::optional<TightPath> try_length(const ThreeGraph& g,
                                    const ThreeGraph& hprime, PathEnd a,
                                    PathEnd b, const Bitset& avail, int k,
                                    double beta, int beam, Rng& rng,
                                    std::size_t* fwd_seen,
                                    std::size_t* bwd_seen) {
  if (k == 0) {
    if (double(hprime.codegree(a.outer, b.outer)) >= beta &&
        g.has_edge(a.inner, a.outer, b.outer) &&
        g.has_edge(a.outer, b.outer, b.inner))
      return TightPath{{a.inner, a.outer, b.outer, b.inner}};
    return std::nullopt;
  }
  if (k == 1) {
    Bitset cand = g.pair_neighbors(a.inner, a.outer);
    cand &= g.pair_neighbors(a.outer, b.outer);
    cand &= g.pair_neighbors(b.outer, b.inner);
    cand &= avail;
    std::optional<TightPath> found;
    cand.for_each([&](int u) {
      if (found) return;
      if (double(hprime.codegree(a.outer, Vertex(u))) < beta) return;
      if (double(hprime.codegree(Vertex(u), b.outer)) < beta) return;
      found = TightPath{{a.inner, a.outer, Vertex(u), b.outer, b.inner}};
    });
    return found;
  }

  const int fsteps = (k + 2 + 1) / 2;  // ceil((k+2)/2)
  const int bsteps = k + 2 - fsteps;

  std::vector<SearchState> fwd{SearchState{{a.inner, a.outer}}};
  for (int s = 0; s < fsteps && !fwd.empty(); ++s)
    fwd = expand(g, hprime, fwd, avail, beta, beam, rng);
  std::vector<SearchState> bwd{SearchState{{b.inner, b.outer}}};
  for (int s = 0; s < bsteps && !bwd.empty(); ++s)
    bwd = expand(g, hprime, bwd, avail, beta, beam, rng);
  *fwd_seen = fwd.size();
  *bwd_seen = bwd.size();

  // Backward prefixes end ... v, u where the forward prefix ends ... u, v.
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> by_pair;
  by_pair.reserve(bwd.size() * 2);
  const auto key = [](Vertex p, Vertex q) {
    return (std::uint64_t(std::uint32_t(p)) << 32) | std::uint32_t(q);
  };
  for (std::size_t i = 0; i < bwd.size(); ++i) {
    const auto& pr = bwd[i].prefix;
    by_pair[key(pr[pr.size() - 2], pr.back())].push_back(i);
  }

  for (const SearchState& f : fwd) {
    const Vertex u = f.prefix[f.prefix.size() - 2];
    const Vertex v = f.prefix.back();
    const auto it = by_pair.find(key(v, u));
    if (it == by_pair.end()) continue;
    for (std::size_t bi : it->second) {
      const auto& bp = bwd[bi].prefix;
      // shared vertices must be exactly the meeting pair
      bool clash = false;
      for (std::size_t i = 0; i + 2 < bp.size() && !clash; ++i)
        clash = in_prefix(f, bp[i]);
      if (clash) continue;
      std::vector<Vertex> seq = f.prefix;
      for (std::size_t i = bp.size() - 2; i-- > 0;) seq.push_back(bp[i]);
      return TightPath{seq};
    }
  }
  return std::nullopt;
}

void validate_connector(const ThreeGraph& g, const ThreeGraph& hprime,
                        const TightPath& path, PathEnd a, PathEnd b, int k,
                        const Bitset& forbidden, double beta) {
  const auto& s = path.seq;
  bool ok = s.size() == std::size_t(k) + 4 && s[0] == a.inner &&
            s[1] == a.outer && s[s.size() - 2] == b.outer &&
            s.back() == b.inner && verify_tight_path(g, s);
  for (std::size_t i = 2; ok && i + 2 < s.size(); ++i)
    ok = !forbidden.test(s[i]);
  for (std::size_t i = 1; ok && i + 2 < s.size(); ++i)
    ok = double(hprime.codegree(s[i], s[i + 1])) >= beta;
  if (!ok)
    throw BoundViolation("connector failed post-validation (internal bug)");
}

}  // namespace

TightPath connect_pair(const ThreeGraph& g, const ThreeGraph& hprime, PathEnd a,
                       PathEnd b, const Bitset& forbidden,
                       const ConnectorParams& params, Rng& rng) {
  const Vertex n = g.vertex_count();
  const Vertex ends[4] = {a.inner, a.outer, b.inner, b.outer};
  for (int i = 0; i < 4; ++i) {
    if (ends[i] < 0 || ends[i] >= n) throw OutOfRange("end vertex out of range");
    for (int j = i + 1; j < 4; ++j)
      if (ends[i] == ends[j])
        throw std::invalid_argument("connector ends must be 4 distinct vertices");
  }
  if (hprime.codegree(a.inner, a.outer) == 0 ||
      hprime.codegree(b.inner, b.outer) == 0)
    throw BadEnds("an end pair has codegree 0 in the shaved graph");
  if (!(params.beta_threshold > 0.0))
    throw std::invalid_argument("beta_threshold must be positive");

  Bitset avail =
      forbidden.universe() == n ? forbidden : Bitset(n);  // empty = no bans
  avail.flip();
  for (Vertex e : ends) avail.reset(e);

  int lo = params.internal_len, hi = params.internal_len;
  if (params.allow_len_range) {
    lo = params.allow_len_range->first;
    hi = params.allow_len_range->second;
  }
  if (lo < 0 || hi < lo) throw std::invalid_argument("bad connector length range");

  std::size_t fwd_seen = 0, bwd_seen = 0;
  for (int k = lo; k <= hi; ++k) {
    auto found = try_length(g, hprime, a, b, avail, k, params.beta_threshold,
                            params.beam, rng, &fwd_seen, &bwd_seen);
    if (found) {
      validate_connector(g, hprime, *found, a, b, k, forbidden,
                         params.beta_threshold);
      return *found;
    }
  }
  throw NoPath("no connector of the requested length (forward frontier " +
                   std::to_string(fwd_seen) + ", backward " +
                   std::to_string(bwd_seen) + ")",
               fwd_seen, bwd_seen);
}

ChainResult connect_chain(const ThreeGraph& g, const ThreeGraph& hprime,
                          const std::vector<TightPath>& paths,
                          const Bitset& forbidden,
                          const ConnectorParams& params, Rng& rng,
                          bool close_cycle) {
  if (paths.empty()) throw std::invalid_argument("connect_chain: no paths");
  const Vertex n = g.vertex_count();

  ChainResult res;
  res.internals = Bitset(n);
  Bitset blocked = forbidden;
  for (const TightPath& p : paths)
    for (Vertex v : p.seq) blocked.set(v);

  TightPath current = paths[0];
  for (std::size_t i = 1; i < paths.size(); ++i) {
    TightPath conn = connect_pair(g, hprime, current.back_end(),
                                  paths[i].front_end(), blocked, params, rng);
    res.join_lengths.push_back(int(conn.seq.size()) - 4);
    ++res.connectors;
    for (std::size_t j = 2; j + 2 < conn.seq.size(); ++j) {
      blocked.set(conn.seq[j]);
      res.internals.set(conn.seq[j]);
      current.seq.push_back(conn.seq[j]);
    }
    current.seq.insert(current.seq.end(), paths[i].seq.begin(),
                       paths[i].seq.end());
  }

  if (!close_cycle) {
    res.path = std::move(current);
    res.is_cycle = false;
    return res;
  }

  TightPath conn = connect_pair(g, hprime, current.back_end(),
                                current.front_end(), blocked, params, rng);
  res.join_lengths.push_back(int(conn.seq.size()) - 4);
  ++res.connectors;
  for (std::size_t j = 2; j + 2 < conn.seq.size(); ++j) {
    res.internals.set(conn.seq[j]);
    current.seq.push_back(conn.seq[j]);
  }
  res.cycle.order = std::move(current.seq);
  res.is_cycle = true;
  return res;
}

}  // namespace tightcycle
