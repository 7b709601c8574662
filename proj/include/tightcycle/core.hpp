#ifndef TIGHTCYCLE_CORE_HPP
#define TIGHTCYCLE_CORE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "tightcycle/bitset.hpp"
#include "tightcycle/errors.hpp"

namespace tightcycle {

using Vertex = int;

struct OrderedPair {
  Vertex first = 0;
  Vertex second = 0;
  bool operator==(const OrderedPair&) const = default;
  auto operator<=>(const OrderedPair&) const = default;
};

// An edge of a 3-graph, kept in canonical ascending order.
struct Triple {
  Vertex a = 0, b = 0, c = 0;

  static Triple make(Vertex x, Vertex y, Vertex z) {
    if (x == y || x == z || y == z)
      throw DegenerateTriple("triple has a repeated vertex");
    if (x > y) std::swap(x, y);
    if (y > z) std::swap(y, z);
    if (x > y) std::swap(x, y);
    return Triple{x, y, z};
  }

  bool operator==(const Triple&) const = default;
  auto operator<=>(const Triple&) const = default;
};

struct InducedSubgraph;

// 3-uniform hypergraph on vertices [0, n). The edge set is stored as one
// neighborhood bit-vector per unordered pair: bit z of row (x,y) says
// {x,y,z} is an edge. Codegree is a popcount and neighborhood intersections
// are word-wise ANDs, which is what the search kernels live on.
//
// Reads are safe under shared concurrent access; mutation is single-writer.
class ThreeGraph {
 public:
  ThreeGraph() = default;
  explicit ThreeGraph(Vertex n);

  Vertex vertex_count() const { return n_; }
  std::size_t edge_count() const { return m_; }

  // Return true if the edge was inserted / removed, false if already
  // present / absent. Degenerate triples are rejected, not dropped.
  bool add_edge(Vertex x, Vertex y, Vertex z);
  bool add_edge(const Triple& t) { return add_edge(t.a, t.b, t.c); }
  bool remove_edge(Vertex x, Vertex y, Vertex z);
  bool remove_edge(const Triple& t) { return remove_edge(t.a, t.b, t.c); }

  bool has_edge(Vertex x, Vertex y, Vertex z) const;

  // |N(x,y)|, the number of edges containing the pair.
  int codegree(Vertex x, Vertex y) const;
  const Bitset& pair_neighbors(Vertex x, Vertex y) const;

  std::size_t vertex_degree(Vertex v) const;
  std::size_t min_vertex_degree() const;
  int min_codegree() const;

  // All ordered pairs with positive codegree; closed under swap.
  std::vector<OrderedPair> shadow() const;
  // Number of unordered pairs with positive codegree.
  std::size_t shadow_size() const;

  // |N(v) ∩ C(A,2)| and |N(x,y) ∩ A|.
  std::size_t restricted_degree(Vertex v, const Bitset& A) const;
  int restricted_codegree(Vertex x, Vertex y, const Bitset& A) const;

  InducedSubgraph induced_subgraph(const Bitset& keep) const;

  std::vector<Triple> edges() const;

  // Canonical ascending edge order.
  template <class F>
  void for_each_edge(F&& f) const {
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = x + 1; y < n_; ++y) {
        const Bitset& row = rows_[pair_id(x, y)];
        row.for_each([&](int z) {
          if (z > y) f(Triple{x, y, Vertex(z)});
        });
      }
  }

  bool operator==(const ThreeGraph& o) const {
    return n_ == o.n_ && m_ == o.m_ && rows_ == o.rows_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw OutOfRange("vertex index out of range");
  }
  std::size_t pair_id(Vertex x, Vertex y) const {
    if (x > y) std::swap(x, y);
    return std::size_t(x) * n_ - std::size_t(x) * (x + 1) / 2 + (y - x - 1);
  }

  Vertex n_ = 0;
  std::size_t m_ = 0;
  std::vector<Bitset> rows_;
  std::vector<std::uint16_t> codeg_;
  std::vector<std::uint32_t> deg_;
};

// Relabeled copy of the edges inside a vertex set; to_old maps new labels
// back for certificate translation.
struct InducedSubgraph {
  ThreeGraph graph;
  std::vector<Vertex> to_old;
};

}  // namespace tightcycle

#endif
