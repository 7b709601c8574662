#ifndef TIGHTCYCLE_KERNELS_HPP
#define TIGHTCYCLE_KERNELS_HPP

#include <cstdint>

#include "tightcycle/bitset.hpp"
#include "tightcycle/core.hpp"
#include "tightcycle/digraph.hpp"

// Counting kernels behind the density checkers, the falsifier and absorber
// search. Each kernel has an OpenMP-parallel production version and a plain
// serial reference used by the tests and the benchmark. All reductions are
// integer sums, so parallel and serial results are bit-identical.
namespace tightcycle::kernels {

bool parallel_enabled();
void set_parallel_enabled(bool on);

// |P2(G1,G2)| composed pairs, degenerate triples included.
std::uint64_t p2_count(const Digraph& g1, const Digraph& g2);
std::uint64_t p2_count_serial(const Digraph& g1, const Digraph& g2);

// Distinct composed triples that are edges of h.
std::uint64_t cherry_edge_count(const ThreeGraph& h, const Digraph& g1,
                                const Digraph& g2);
std::uint64_t cherry_edge_count_serial(const ThreeGraph& h, const Digraph& g1,
                                       const Digraph& g2);

// Distinct triples of X x Y x Z that are edges of h.
std::uint64_t points_edge_count(const ThreeGraph& h, const Bitset& X,
                                const Bitset& Y, const Bitset& Z);
std::uint64_t points_edge_count_serial(const ThreeGraph& h, const Bitset& X,
                                       const Bitset& Y, const Bitset& Z);

// Pairs (x,(y,z)) of X x G with {x,y,z} a distinct-vertex edge of h.
std::uint64_t edge_pair_count(const ThreeGraph& h, const Bitset& X,
                              const Digraph& G);
std::uint64_t edge_pair_count_serial(const ThreeGraph& h, const Bitset& X,
                                     const Digraph& G);

// Exact number of ordered v-absorber quadruples.
std::uint64_t count_absorbers(const ThreeGraph& h, Vertex v);
std::uint64_t count_absorbers_serial(const ThreeGraph& h, Vertex v);

// Best-response steps of the alternating cherry falsifier: include an arc
// iff its marginal contribution to (e - d*|P2|) is strictly negative.
Digraph cherry_best_g1(const ThreeGraph& h, const Digraph& g2, double d);
Digraph cherry_best_g2(const ThreeGraph& h, const Digraph& g1, double d);

}  // namespace tightcycle::kernels

#endif
