#ifndef TIGHTCYCLE_DIGRAPH_HPP
#define TIGHTCYCLE_DIGRAPH_HPP

#include <cstdint>
#include <vector>

#include "tightcycle/bitset.hpp"
#include "tightcycle/core.hpp"

namespace tightcycle {

// A set of ordered vertex pairs over [0, n); loops (x,x) are permitted.
// This is the quantifier object of cherry-denseness. Stored as one
// out-neighborhood row per vertex.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(Vertex n) : n_(n), rows_(std::size_t(n), Bitset(n)) {}

  static Digraph complete(Vertex n) {
    Digraph d(n);
    for (auto& r : d.rows_) r = Bitset::full(n);
    d.arcs_ = std::uint64_t(n) * std::uint64_t(n);
    return d;
  }

  // X x Y as an arc set.
  static Digraph product(const Bitset& X, const Bitset& Y) {
    Digraph d(X.universe());
    const std::uint64_t ny = std::uint64_t(Y.count());
    X.for_each([&](int x) { d.rows_[std::size_t(x)] = Y; });
    d.arcs_ = std::uint64_t(X.count()) * ny;
    return d;
  }

  Vertex vertex_count() const { return n_; }
  std::uint64_t arc_count() const { return arcs_; }

  bool arc(Vertex x, Vertex y) const { return rows_[std::size_t(x)].test(y); }
  void add(Vertex x, Vertex y) {
    if (!rows_[std::size_t(x)].test(y)) {
      rows_[std::size_t(x)].set(y);
      ++arcs_;
    }
  }

  const Bitset& out(Vertex x) const { return rows_[std::size_t(x)]; }
  Bitset& out_mut(Vertex x) { return rows_[std::size_t(x)]; }

  void recount() {
    arcs_ = 0;
    for (const auto& r : rows_) arcs_ += std::uint64_t(r.count());
  }

  std::vector<int> out_degrees() const {
    std::vector<int> d(static_cast<std::size_t>(n_));
    for (Vertex x = 0; x < n_; ++x)
      d[std::size_t(x)] = rows_[std::size_t(x)].count();
    return d;
  }

  std::vector<int> in_degrees() const {
    std::vector<int> d(std::size_t(n_), 0);
    for (Vertex x = 0; x < n_; ++x)
      rows_[std::size_t(x)].for_each([&](int y) { ++d[std::size_t(y)]; });
    return d;
  }

  // Column y as a set (arcs entering y).
  Bitset in_set(Vertex y) const {
    Bitset s(n_);
    for (Vertex x = 0; x < n_; ++x)
      if (rows_[std::size_t(x)].test(y)) s.set(x);
    return s;
  }

  bool operator==(const Digraph&) const = default;

 private:
  Vertex n_ = 0;
  std::uint64_t arcs_ = 0;
  std::vector<Bitset> rows_;
};

}  // namespace tightcycle

#endif
