#include "tightcycle/core.hpp"

#include <limits>

namespace tightcycle {

ThreeGraph::ThreeGraph(Vertex n) : n_(n) {
  if (n < 0) throw OutOfRange("negative vertex count");
  if (n > 30000) throw TooLarge("vertex count above supported maximum");
  const std::size_t pairs = std::size_t(n) * (n - 1) / 2;
  rows_.assign(pairs, Bitset(n));
  codeg_.assign(pairs, 0);
  deg_.assign(std::size_t(n), 0);
}

bool ThreeGraph::add_edge(Vertex x, Vertex y, Vertex z) {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  const Triple t = Triple::make(x, y, z);
  Bitset& ab = rows_[pair_id(t.a, t.b)];
  if (ab.test(t.c)) return false;
  ab.set(t.c);
  rows_[pair_id(t.a, t.c)].set(t.b);
  rows_[pair_id(t.b, t.c)].set(t.a);
  ++codeg_[pair_id(t.a, t.b)];
  ++codeg_[pair_id(t.a, t.c)];
  ++codeg_[pair_id(t.b, t.c)];
  ++deg_[std::size_t(t.a)];
  ++deg_[std::size_t(t.b)];
  ++deg_[std::size_t(t.c)];
  ++m_;
  return true;
}

bool ThreeGraph::remove_edge(Vertex x, Vertex y, Vertex z) {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  const Triple t = Triple::make(x, y, z);
  Bitset& ab = rows_[pair_id(t.a, t.b)];
  if (!ab.test(t.c)) return false;
  ab.reset(t.c);
  rows_[pair_id(t.a, t.c)].reset(t.b);
  rows_[pair_id(t.b, t.c)].reset(t.a);
  --codeg_[pair_id(t.a, t.b)];
  --codeg_[pair_id(t.a, t.c)];
  --codeg_[pair_id(t.b, t.c)];
  --deg_[std::size_t(t.a)];
  --deg_[std::size_t(t.b)];
  --deg_[std::size_t(t.c)];
  --m_;
  return true;
}

bool ThreeGraph::has_edge(Vertex x, Vertex y, Vertex z) const {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  if (x == y || x == z || y == z) return false;
  if (x > y) std::swap(x, y);
  return rows_[pair_id(x, y)].test(z);
}

int ThreeGraph::codegree(Vertex x, Vertex y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw DegeneratePair("codegree of a repeated vertex");
  return codeg_[pair_id(x, y)];
}

const Bitset& ThreeGraph::pair_neighbors(Vertex x, Vertex y) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw DegeneratePair("neighborhood of a repeated vertex");
  return rows_[pair_id(x, y)];
}

std::size_t ThreeGraph::vertex_degree(Vertex v) const {
  check_vertex(v);
  return deg_[std::size_t(v)];
}

std::size_t ThreeGraph::min_vertex_degree() const {
  std::size_t best = 0;
  for (Vertex v = 0; v < n_; ++v)
    if (v == 0 || deg_[std::size_t(v)] < best) best = deg_[std::size_t(v)];
  return n_ == 0 ? 0 : best;
}

int ThreeGraph::min_codegree() const {
  if (n_ < 2) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto c : codeg_)
    if (int(c) < best) best = int(c);
  return best;
}

std::vector<OrderedPair> ThreeGraph::shadow() const {
  std::vector<OrderedPair> out;
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y = x + 1; y < n_; ++y)
      if (codeg_[pair_id(x, y)] > 0) {
        out.push_back({x, y});
        out.push_back({y, x});
      }
  return out;
}

std::size_t ThreeGraph::shadow_size() const {
  std::size_t c = 0;
  for (const auto v : codeg_)
    if (v > 0) ++c;
  return c;
}

std::size_t ThreeGraph::restricted_degree(Vertex v, const Bitset& A) const {
  check_vertex(v);
  std::size_t twice = 0;
  A.for_each([&](int u) {
    if (u != v) twice += std::size_t(and_count(rows_[pair_id(v, u)], A));
  });
  // each edge {v,a,b} with a,b in A was counted at u=a and u=b
  return twice / 2;
}

int ThreeGraph::restricted_codegree(Vertex x, Vertex y, const Bitset& A) const {
  check_vertex(x);
  check_vertex(y);
  if (x == y) throw DegeneratePair("codegree of a repeated vertex");
  return and_count(rows_[pair_id(x, y)], A);
}

InducedSubgraph ThreeGraph::induced_subgraph(const Bitset& keep) const {
  InducedSubgraph out;
  out.to_old = keep.to_vector();
  std::vector<Vertex> to_new(std::size_t(n_), -1);
  for (std::size_t i = 0; i < out.to_old.size(); ++i)
    to_new[std::size_t(out.to_old[i])] = Vertex(i);
  out.graph = ThreeGraph(Vertex(out.to_old.size()));
  for_each_edge([&](const Triple& t) {
    const Vertex a = to_new[std::size_t(t.a)];
    const Vertex b = to_new[std::size_t(t.b)];
    const Vertex c = to_new[std::size_t(t.c)];
    if (a >= 0 && b >= 0 && c >= 0) out.graph.add_edge(a, b, c);
  });
  return out;
}

std::vector<Triple> ThreeGraph::edges() const {
  std::vector<Triple> out;
  out.reserve(m_);
  for_each_edge([&](const Triple& t) { out.push_back(t); });
  return out;
}

}  // namespace tightcycle
