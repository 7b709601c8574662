#ifndef TIGHTCYCLE_ORACLE_HPP
#define TIGHTCYCLE_ORACLE_HPP

#include <optional>
#include <span>

#include "tightcycle/core.hpp"
#include "tightcycle/path.hpp"

namespace tightcycle {

// Ground-truth validation and exact brute-force procedures. These exist to
// check everything else, not to scale.

bool verify_tight_path(const ThreeGraph& g, std::span<const Vertex> seq);

// Cyclic windows; requires length >= 5 so all windows are distinct edges.
bool verify_tight_cycle(const ThreeGraph& g, std::span<const Vertex> order);

// Tight cycle covering every vertex, i.e. a certificate order.
bool verify_hamilton_cycle(const ThreeGraph& g, std::span<const Vertex> order);

// Exact tight-Hamiltonicity decision by memoized search over states
// (visited set, last two vertices). Deterministic: returns the
// lexicographically smallest witness starting at vertex 0. Throws TooLarge
// above the cap and refuses n < 5.
std::optional<TightCycle> dp_hamilton(const ThreeGraph& g, int cap = 18);

// Exhaustive connector search: a tight path a.inner a.outer u1..uk b.outer
// b.inner with the internals outside `forbidden`. Exact at small n.
std::optional<TightPath> dp_connector(const ThreeGraph& g, PathEnd a, PathEnd b,
                                      int internal_len, const Bitset& forbidden,
                                      int cap = 18);

}  // namespace tightcycle

#endif
