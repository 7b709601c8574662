#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tightcycle/oracle.hpp"
#include "tightcycle/pathcover.hpp"

using namespace tightcycle;
using namespace testsup;

TEST_CASE("extend_path covers complete graphs fully") {
  const ThreeGraph k10 = complete_graph(10);
  Rng rng(1);
  Bitset avail = Bitset::full(10);
  avail.reset(0);
  avail.reset(1);
  avail.reset(2);
  const TightPath p = extend_path(k10, TightPath{{0, 1, 2}}, avail, rng);
  CHECK(p.seq.size() == 10);
  CHECK(verify_tight_path(k10, p.seq));
}

TEST_CASE("extend_path with nothing available is the identity") {
  const ThreeGraph k10 = complete_graph(10);
  Rng rng(2);
  const TightPath p = extend_path(k10, TightPath{{0, 1, 2}}, Bitset(10), rng);
  CHECK(p.seq == std::vector<Vertex>{0, 1, 2});
}

TEST_CASE("extend_path rebuilds a broken tight cycle from the break") {
  ThreeGraph c9 = generate(GenKind::TightCycle, 9, 0, 0);
  c9.remove_edge(7, 8, 0);
  Rng rng(3);
  Bitset avail = Bitset::full(9);
  avail.reset(8);
  avail.reset(0);
  avail.reset(1);
  const TightPath p = extend_path(c9, TightPath{{8, 0, 1}}, avail, rng);
  CHECK(p.seq == std::vector<Vertex>{8, 0, 1, 2, 3, 4, 5, 6, 7});
  CHECK(verify_tight_path(c9, p.seq));
}

TEST_CASE("greedy_cover on complete graphs is a single spanning path") {
  CoverParams params;
  params.zeta = 0.1;
  params.l0 = 3;
  const CoverResult res = greedy_cover(complete_graph(30), params);
  CHECK(res.paths.size() == 1);
  CHECK(res.paths[0].seq.size() == 30);
  CHECK(res.leftover.none());
}

TEST_CASE("greedy_cover fails honestly on the empty graph") {
  ThreeGraph empty(12);
  CoverParams params;
  params.zeta = 0.5;
  try {
    greedy_cover(empty, params);
    FAIL("expected CoverTooSparse");
  } catch (const CoverTooSparse& e) {
    CHECK(e.best.leftover.count() == 12);
    CHECK(e.best.paths.empty());
  }
}

TEST_CASE("greedy_cover on a dense random graph") {
  const ThreeGraph g = random_graph(100, 0.5, 81);
  CoverParams params;
  params.zeta = 0.05;
  params.l0 = 20;
  params.restarts = 5;
  const CoverResult res = greedy_cover(g, params);
  CHECK(double(res.leftover.count()) <= 5.0);
  CHECK(res.paths.size() <= 20);

  // disjointness, tightness, partition identity, maximality
  Bitset seen(100);
  std::size_t covered = 0;
  for (const TightPath& p : res.paths) {
    CHECK(verify_tight_path(g, p.seq));
    for (Vertex v : p.seq) {
      CHECK_FALSE(seen.test(v));
      seen.set(v);
      ++covered;
    }
  }
  CHECK(covered + std::size_t(res.leftover.count()) == 100);
  for (const TightPath& p : res.paths) {
    const PathEnd b = p.back_end(), f = p.front_end();
    CHECK(and_count(g.pair_neighbors(b.inner, b.outer), res.leftover) == 0);
    CHECK(and_count(g.pair_neighbors(f.inner, f.outer), res.leftover) == 0);
  }
}

TEST_CASE("complete graphs always cover with one path, K3 through K50") {
  for (Vertex n = 3; n <= 50; ++n) {
    CoverParams params;
    params.zeta = 1.0;
    params.l0 = 5;
    params.restarts = 2;
    params.seed = std::uint64_t(n);
    const CoverResult res = greedy_cover(complete_graph(n), params);
    CHECK(res.paths.size() == 1);
    CHECK(res.leftover.none());
  }
}

TEST_CASE("deterministic given the seed") {
  const ThreeGraph g = random_graph(40, 0.4, 91);
  CoverParams params;
  params.zeta = 0.5;
  params.seed = 17;
  const CoverResult a = greedy_cover(g, params);
  const CoverResult b = greedy_cover(g, params);
  REQUIRE(a.paths.size() == b.paths.size());
  for (std::size_t i = 0; i < a.paths.size(); ++i)
    CHECK(a.paths[i].seq == b.paths[i].seq);
}
