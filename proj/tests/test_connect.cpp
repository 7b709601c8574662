#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tightcycle/connect.hpp"
#include "tightcycle/oracle.hpp"
#include "tightcycle/shave.hpp"

using namespace tightcycle;
using namespace testsup;

TEST_CASE("tight_steps") {
  const ThreeGraph k5 = complete_graph(5);
  const auto steps = tight_steps(k5, 0, 1);
  CHECK(steps.size() == 3);
  for (const auto& s : steps) CHECK(s.first == 1);

  ThreeGraph single(4);
  single.add_edge(0, 1, 2);
  CHECK(tight_steps(single, 0, 1) == std::vector<OrderedPair>{{1, 2}});
  CHECK(tight_steps(single, 0, 3).empty());
  CHECK(tight_steps(single, PathEnd{0, 1}) == tight_steps(single, 0, 1));
}

TEST_CASE("connect_pair on a complete graph") {
  const ThreeGraph k14 = complete_graph(14);
  ConnectorParams params;  // internal_len 6
  Rng rng(1);
  const TightPath conn = connect_pair(k14, k14, PathEnd{0, 1}, PathEnd{2, 3},
                                      Bitset(14), params, rng);
  CHECK(conn.seq.size() == 10);
  CHECK(conn.seq[0] == 0);
  CHECK(conn.seq[1] == 1);
  CHECK(conn.seq[8] == 3);  // b.outer
  CHECK(conn.seq[9] == 2);  // b.inner
  CHECK(verify_tight_path(k14, conn.seq));
}

TEST_CASE("connect_pair across components fails honestly") {
  ThreeGraph two(20);
  for (Vertex a = 0; a < 10; ++a)
    for (Vertex b = a + 1; b < 10; ++b)
      for (Vertex c = b + 1; c < 10; ++c) {
        two.add_edge(a, b, c);
        two.add_edge(a + 10, b + 10, c + 10);
      }
  ConnectorParams params;
  Rng rng(2);
  CHECK_THROWS_AS(connect_pair(two, two, PathEnd{0, 1}, PathEnd{10, 11},
                               Bitset(20), params, rng),
                  NoPath);
}

TEST_CASE("connect_pair rejects dead end pairs") {
  ThreeGraph g(8);
  g.add_edge(0, 1, 2);
  g.add_edge(4, 5, 6);
  ThreeGraph hp(8);  // no edges at all: both ends outside the shadow
  ConnectorParams params;
  Rng rng(3);
  CHECK_THROWS_AS(
      connect_pair(g, hp, PathEnd{0, 1}, PathEnd{4, 5}, Bitset(8), params, rng),
      BadEnds);
}

TEST_CASE("short connectors: lengths 0, 1, 2") {
  const ThreeGraph k10 = complete_graph(10);
  Rng rng(4);
  for (int k = 0; k <= 2; ++k) {
    ConnectorParams params;
    params.internal_len = k;
    const TightPath conn = connect_pair(k10, k10, PathEnd{0, 1}, PathEnd{2, 3},
                                        Bitset(10), params, rng);
    CHECK(conn.seq.size() == std::size_t(k) + 4);
    CHECK(verify_tight_path(k10, conn.seq));
  }
}

TEST_CASE("ascending length range finds the shortest feasible connector") {
  const ThreeGraph k12 = complete_graph(12);
  ConnectorParams params;
  params.allow_len_range = {{0, 6}};
  Rng rng(5);
  const TightPath conn = connect_pair(k12, k12, PathEnd{0, 1}, PathEnd{2, 3},
                                      Bitset(12), params, rng);
  CHECK(conn.seq.size() == 4);  // complete graph: length 0 works
}

TEST_CASE("connectors avoid forbidden vertices and respect beta") {
  const ThreeGraph g = random_graph(100, 0.5, 61);
  const ShaveResult shaved = shave_graph(g, 0.45, 0.02);
  Rng rng(6);
  Bitset forbidden(100);
  for (Vertex v = 50; v < 100; ++v) forbidden.set(v);
  ConnectorParams params;
  params.beta_threshold = 0.45 * 100 / 20.0;
  const TightPath conn =
      connect_pair(g, shaved.subgraph, PathEnd{60, 61}, PathEnd{62, 63},
                   forbidden, params, rng);
  CHECK(verify_tight_path(g, conn.seq));
  for (std::size_t i = 2; i + 2 < conn.seq.size(); ++i)
    CHECK(conn.seq[i] < 50);  // internals outside the forbidden half
  for (std::size_t i = 1; i + 2 < conn.seq.size(); ++i)
    CHECK(double(shaved.subgraph.codegree(conn.seq[i], conn.seq[i + 1])) >=
          params.beta_threshold);
}

TEST_CASE("agreement with the exhaustive oracle on small instances") {
  Rng rng(7);
  int successes = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Vertex n = 8 + Vertex(rng.below(5));  // 8..12
    const double p = 0.2 + 0.5 * rng.unit();
    const ThreeGraph g = random_graph(n, p, 3000 + std::uint64_t(trial));
    // 4 distinct end vertices
    Vertex e[4];
    e[0] = Vertex(rng.below(std::uint64_t(n)));
    do e[1] = Vertex(rng.below(std::uint64_t(n))); while (e[1] == e[0]);
    do e[2] = Vertex(rng.below(std::uint64_t(n)));
    while (e[2] == e[0] || e[2] == e[1]);
    do e[3] = Vertex(rng.below(std::uint64_t(n)));
    while (e[3] == e[0] || e[3] == e[1] || e[3] == e[2]);
    const PathEnd a{e[0], e[1]}, b{e[2], e[3]};
    const int k = 2 + int(rng.below(3));  // 2..4

    const auto oracle = dp_connector(g, a, b, k, Bitset(n));
    ConnectorParams params;
    params.internal_len = k;
    params.beam = 0;  // unbounded: exhaustive meet-in-the-middle
    bool found = false;
    try {
      const TightPath conn =
          connect_pair(g, g, a, b, Bitset(n), params, rng);
      CHECK(verify_tight_path(g, conn.seq));
      found = true;
    } catch (const NoPath&) {
    } catch (const BadEnds&) {
    }
    CHECK(found == bool(oracle));
    if (found) ++successes;
  }
  CHECK(successes > 5);  // the comparison exercised both outcomes
}

TEST_CASE("connect_chain joins and closes") {
  const ThreeGraph k24 = complete_graph(24);
  ConnectorParams params;
  Rng rng(8);

  // single path, no closing: identity
  const std::vector<TightPath> one{TightPath{{0, 1, 2, 3, 4}}};
  const ChainResult same =
      connect_chain(k24, k24, one, Bitset(24), params, rng, false);
  CHECK_FALSE(same.is_cycle);
  CHECK(same.path.seq == one[0].seq);
  CHECK(same.connectors == 0);

  // two 5-vertex paths -> one 16-vertex path
  const std::vector<TightPath> two{TightPath{{0, 1, 2, 3, 4}},
                                   TightPath{{5, 6, 7, 8, 9}}};
  const ChainResult joined =
      connect_chain(k24, k24, two, Bitset(24), params, rng, false);
  CHECK(joined.path.seq.size() == 16);
  CHECK(joined.connectors == 1);
  CHECK(verify_tight_path(k24, joined.path.seq));
  CHECK(joined.path.seq.size() ==
        two[0].seq.size() + two[1].seq.size() + 6);

  // closing a chain gives a verified tight cycle
  const ChainResult cyc =
      connect_chain(k24, k24, two, Bitset(24), params, rng, true);
  CHECK(cyc.is_cycle);
  CHECK(cyc.connectors == 2);
  CHECK(cyc.cycle.order.size() == 22);
  CHECK(verify_tight_cycle(k24, cyc.cycle.order));
}

TEST_CASE("chained connectors on a shaved random graph") {
  const ThreeGraph g = random_graph(150, 0.5, 71);
  const ShaveResult shaved = shave_graph(g, 0.45, 0.02);
  Rng rng(9);
  // carve three disjoint seed paths out of the first vertices greedily
  std::vector<TightPath> paths;
  Bitset used(150);
  for (Vertex start = 0; paths.size() < 3 && start < 140; ++start) {
    if (used.test(start)) continue;
    for (Vertex b = start + 1; b < 145 && paths.size() < 3; ++b) {
      if (used.test(b)) continue;
      Bitset cand = g.pair_neighbors(start, b);
      cand.subtract(used);
      const auto zs = cand.to_vector();
      if (zs.empty()) continue;
      const Vertex z = zs[0];
      paths.push_back(TightPath{{start, b, z}});
      used.set(start);
      used.set(b);
      used.set(z);
      break;
    }
  }
  REQUIRE(paths.size() == 3);
  ConnectorParams params;
  params.beta_threshold = 0.45 * 150 / 20.0;
  const ChainResult cyc =
      connect_chain(g, shaved.subgraph, paths, Bitset(150), params, rng, true);
  CHECK(cyc.is_cycle);
  CHECK(verify_tight_cycle(g, cyc.cycle.order));
  CHECK(cyc.cycle.order.size() == 9 + 3 * 6);
}
