#include "tightcycle/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace tightcycle {

namespace {

bool all_distinct_in_range(const ThreeGraph& g, std::span<const Vertex> seq) {
  const Vertex n = g.vertex_count();
  std::vector<char> seen(std::size_t(n), 0);
  for (Vertex v : seq) {
    if (v < 0 || v >= n) return false;
    if (seen[std::size_t(v)]) return false;
    seen[std::size_t(v)] = 1;
  }
  return true;
}

}  // namespace

bool verify_tight_path(const ThreeGraph& g, std::span<const Vertex> seq) {
  if (seq.size() < 3) return false;
  if (!all_distinct_in_range(g, seq)) return false;
  for (std::size_t i = 0; i + 2 < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[i + 1], seq[i + 2])) return false;
  return true;
}

bool verify_tight_cycle(const ThreeGraph& g, std::span<const Vertex> order) {
  if (order.size() < 5) return false;
  if (!all_distinct_in_range(g, order)) return false;
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i)
    if (!g.has_edge(order[i], order[(i + 1) % m], order[(i + 2) % m]))
      return false;
  return true;
}

bool verify_hamilton_cycle(const ThreeGraph& g, std::span<const Vertex> order) {
  return order.size() == std::size_t(g.vertex_count()) &&
         verify_tight_cycle(g, order);
}

namespace {

// Failure memo for one fixed (start, second) pair: bit per (mask, a, b).
class FailMemo {
 public:
  FailMemo(Vertex n) : n_(std::size_t(n)) {
    bits_.assign(((std::size_t(1) << n_) * n_ * n_ + 63) / 64, 0);
  }
  void clear() { std::fill(bits_.begin(), bits_.end(), 0); }
  bool get(std::uint32_t mask, Vertex a, Vertex b) const {
    const std::size_t i = idx(mask, a, b);
    return (bits_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::uint32_t mask, Vertex a, Vertex b) {
    const std::size_t i = idx(mask, a, b);
    bits_[i >> 6] |= std::uint64_t(1) << (i & 63);
  }

 private:
  std::size_t idx(std::uint32_t mask, Vertex a, Vertex b) const {
    return (std::size_t(mask) * n_ + std::size_t(a)) * n_ + std::size_t(b);
  }
  std::size_t n_;
  std::vector<std::uint64_t> bits_;
};

struct HamiltonSearch {
  const ThreeGraph& g;
  Vertex v1;
  std::uint32_t full;
  FailMemo& memo;
  std::vector<Vertex>& seq;

  bool dfs(std::uint32_t mask, Vertex a, Vertex b) {
    if (mask == full)
      return g.has_edge(a, b, 0) && g.has_edge(b, 0, v1);
    if (memo.get(mask, a, b)) return false;
    bool ok = false;
    g.pair_neighbors(a, b).for_each([&](int z) {
      if (ok || (mask >> z) & 1u) return;
      seq.push_back(Vertex(z));
      if (dfs(mask | (std::uint32_t(1) << z), b, Vertex(z)))
        ok = true;
      else
        seq.pop_back();
    });
    if (!ok) memo.set(mask, a, b);
    return ok;
  }
};

}  // namespace

std::optional<TightCycle> dp_hamilton(const ThreeGraph& g, int cap) {
  const Vertex n = g.vertex_count();
  // 2^n * n^2 failure bits; 24 keeps the memo under ~2 GB
  if (n > cap || n > 24) throw TooLarge("dp_hamilton: n above cap");
  if (n < 5)
    throw std::invalid_argument("dp_hamilton: tight cycles need n >= 5");
  for (Vertex v = 0; v < n; ++v)
    if (g.vertex_degree(v) == 0) return std::nullopt;

  const std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
  FailMemo memo(n);
  std::vector<Vertex> seq;
  for (Vertex v1 = 1; v1 < n; ++v1) {
    memo.clear();
    seq.assign({0, v1});
    HamiltonSearch search{g, v1, full, memo, seq};
    if (search.dfs((1u << 0) | (std::uint32_t(1) << v1), 0, v1))
      return TightCycle{seq};
  }
  return std::nullopt;
}

namespace {

struct ConnectorSearch {
  const ThreeGraph& g;
  PathEnd b;
  int k;
  const Bitset& forbidden;
  std::vector<Vertex>& seq;
  std::vector<char>& used;

  bool dfs(int placed) {
    const Vertex p = seq[seq.size() - 2];
    const Vertex q = seq.back();
    if (placed == k) {
      return g.has_edge(p, q, b.outer) && g.has_edge(q, b.outer, b.inner);
    }
    bool ok = false;
    g.pair_neighbors(p, q).for_each([&](int z) {
      if (ok || used[std::size_t(z)] || forbidden.test(z)) return;
      if (z == b.inner || z == b.outer) return;
      used[std::size_t(z)] = 1;
      seq.push_back(Vertex(z));
      if (dfs(placed + 1))
        ok = true;
      else {
        seq.pop_back();
        used[std::size_t(z)] = 0;
      }
    });
    return ok;
  }
};

}  // namespace

std::optional<TightPath> dp_connector(const ThreeGraph& g, PathEnd a, PathEnd b,
                                      int internal_len, const Bitset& forbidden,
                                      int cap) {
  const Vertex n = g.vertex_count();
  if (n > cap) throw TooLarge("dp_connector: n above cap");
  if (internal_len < 0) throw std::invalid_argument("negative internal length");
  const Vertex ends[4] = {a.inner, a.outer, b.inner, b.outer};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (ends[i] == ends[j])
        throw std::invalid_argument("connector ends must be 4 distinct vertices");

  std::vector<Vertex> seq = {a.inner, a.outer};
  std::vector<char> used(std::size_t(n), 0);
  used[std::size_t(a.inner)] = used[std::size_t(a.outer)] = 1;
  ConnectorSearch search{g, b, internal_len, forbidden, seq, used};
  if (!search.dfs(0)) return std::nullopt;
  seq.push_back(b.outer);
  seq.push_back(b.inner);
  return TightPath{seq};
}

}  // namespace tightcycle

