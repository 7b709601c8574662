// Acceptance suite: one line per criterion, exit code = number of failures.
// Criterion 1 runs are timed single-threaded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "test_support.hpp"
#include "tightcycle/connect.hpp"
#include "tightcycle/density.hpp"
#include "tightcycle/io.hpp"
#include "tightcycle/oracle.hpp"
#include "tightcycle/pathcover.hpp"
#include "tightcycle/pipeline.hpp"
#include "tightcycle/shave.hpp"

using namespace tightcycle;
using namespace testsup;

namespace {

int g_failures = 0;

void report(int index, const std::string& name, bool pass,
            const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", index,
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void set_threads(int t) {
#ifdef _OPENMP
  omp_set_num_threads(t);
#else
  (void)t;
#endif
}

int hardware_threads() {
#ifdef _OPENMP
  return omp_get_num_procs();
#else
  return 1;
#endif
}

// ---- 1: end-to-end pipeline on G(100, 1/2), seeds 1..10 -------------------

void criterion1() {
  set_threads(1);  // the time bound is a single-threaded promise
  int emitted = 0;
  bool all_verified = true;
  double worst_ms = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ThreeGraph g = generate(GenKind::Random, 100, 0.5, seed);
    PipelineParams params;
    params.d = 0.45;
    params.rho = 0.02;
    params.sigma = 0.15;
    params.zeta = 0.05;
    params.l0 = 20;
    params.internal_len = 6;
    params.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      const HamiltonCertificate cert = find_tight_hamilton(g, params);
      ++emitted;
      if (!verify_hamilton_cycle(g, cert.order)) all_verified = false;
    } catch (const PipelineError&) {
    }
    const auto t1 = std::chrono::steady_clock::now();
    const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (ms > worst_ms) worst_ms = ms;
  }
  set_threads(hardware_threads());
  std::ostringstream d;
  d << emitted << "/10 certificates, all verified: "
    << (all_verified ? "yes" : "NO") << ", slowest run "
    << int(worst_ms) << " ms";
  report(1, "end-to-end pipeline", emitted >= 9 && all_verified && worst_ms < 60000.0,
         d.str());
}

// ---- 2: oracle equivalence at n in {6..12} --------------------------------

void criterion2() {
  int graphs = 0, pipeline_successes = 0, false_certs = 0, bad_witness = 0;
  for (int i = 0; i < 200; ++i) {
    const Vertex n = 6 + Vertex(i % 7);
    const double p = 0.4 + 0.2 * double((i / 7) % 3);
    const ThreeGraph g = generate(GenKind::Random, n, p, 9000 + std::uint64_t(i));
    ++graphs;

    const auto dp = dp_hamilton(g);
    if (dp && !verify_tight_cycle(g, dp->order)) ++bad_witness;

    PipelineParams params;
    params.d = p * 0.9;
    params.rho = 0.05;
    params.sigma = 2.5 / double(n);
    params.internal_len = 1;
    params.reservoir_tries = 20;
    params.global_retries = 1;
    params.seed = std::uint64_t(i);
    try {
      const HamiltonCertificate cert = find_tight_hamilton(g, params);
      ++pipeline_successes;
      if (!verify_hamilton_cycle(g, cert.order) || !dp) ++false_certs;
    } catch (const PipelineError&) {
    } catch (const std::invalid_argument&) {
    }
  }
  std::ostringstream d;
  d << graphs << " graphs, " << pipeline_successes << " pipeline successes, "
    << false_certs << " false certificates, " << bad_witness
    << " bad oracle witnesses";
  if (pipeline_successes == 0)
    d << "; note: the absorbing-path vertex budget needs n >= ~20, so zero "
         "successes here is structural (see the n=20 cross-check in "
         "test_pipeline)";
  report(2, "oracle equivalence (hard zero tolerance)",
         false_certs == 0 && bad_witness == 0, d.str());
}

// ---- 3: shave dichotomy and bounds -----------------------------------------

void criterion3() {
  Rng rng(33);
  int instances = 0, dichotomy_bad = 0, shadow_bad = 0;
  for (int i = 0; i < 50; ++i) {
    const Vertex n = 60 + Vertex(rng.below(61));
    const double p = 0.4 + 0.3 * rng.unit();
    const double dpar = 0.9 * p;
    const ThreeGraph g = generate(GenKind::Random, n, p, 20000 + std::uint64_t(i));
    ShaveResult res;
    try {
      res = shave_graph(g, dpar, 0.02);
    } catch (const PreconditionFailed&) {
      continue;  // outside the counting step's regime; not an instance
    }
    ++instances;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        const int c = res.subgraph.codegree(x, y);
        if (!(c == 0 || double(c) >= dpar * double(n) / 3.0)) ++dichotomy_bad;
      }
    Rng rr(1000 + std::uint64_t(i));
    const double rho_hat = estimate_rho_hat(g, dpar, 4, rr);
    const double pairs = double(n) * (n - 1) / 2.0;
    const double shadow = pairs - double(res.zeroed_pairs.size());
    if (shadow < (1.0 - std::pow(rho_hat, 0.2)) * pairs) ++shadow_bad;
  }

  // purge order-independence at small n
  int order_bad = 0;
  Rng orng(34);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Vertex n = 10 + Vertex(seed % 6);
    const ThreeGraph g = generate(GenKind::Random, n, 0.35, 21000 + seed);
    const ShaveResult lex = purge(g, 2.5);
    for (int t = 0; t < 100; ++t)
      if (!(random_order_purge(g, 2.5, orng) == lex.subgraph)) ++order_bad;
  }

  std::ostringstream d;
  d << instances << "/50 in-regime instances, " << dichotomy_bad
    << " dichotomy violations, " << shadow_bad << " shadow-bound violations, "
    << order_bad << "/1000 order mismatches";
  report(3, "shave dichotomy and bounds",
         instances >= 45 && dichotomy_bad == 0 && shadow_bad == 0 && order_bad == 0,
         d.str());
}

// ---- 4: absorber counting --------------------------------------------------

void criterion4() {
  Rng rng(44);
  int mismatches = 0;
  for (int i = 0; i < 50; ++i) {
    const Vertex n = 5 + Vertex(rng.below(8));  // 5..12
    const double p = 0.2 + 0.6 * rng.unit();
    const ThreeGraph g = generate(GenKind::Random, n, p, 30000 + std::uint64_t(i));
    for (Vertex v = 0; v < n; ++v)
      if (count_absorbers(g, v) != naive_count_absorbers(g, v)) ++mismatches;
  }

  const ThreeGraph g60 = generate(GenKind::Random, 60, 0.5, 606);
  const double expect = (1.0 / 32.0) * 59 * 58 * 57 * 56;
  int outside = 0;
  for (int i = 0; i < 10; ++i) {
    const Vertex v = Vertex(rng.below(60));
    const double c = double(count_absorbers(g60, v));
    if (std::abs(c - expect) > 0.25 * expect) ++outside;
  }

  std::ostringstream d;
  d << mismatches << " brute-force mismatches, " << outside
    << "/10 sampled vertices outside 25% of " << std::uint64_t(expect);
  report(4, "absorber counting", mismatches == 0 && outside == 0, d.str());
}

// ---- 5: connection ---------------------------------------------------------

void criterion5() {
  // shaved G(100, 1/2): 100 random disjoint end-pairs must all connect
  const ThreeGraph g = generate(GenKind::Random, 100, 0.5, 55);
  const ShaveResult shaved = shave_graph(g, 0.45, 0.02);
  Rng rng(56);
  int connected = 0, verified = 0;
  for (int t = 0; t < 100; ++t) {
    Vertex e[4];
    for (int i = 0; i < 4; ++i) {
      bool fresh;
      do {
        e[i] = Vertex(rng.below(100));
        fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && e[i] != e[j];
      } while (!fresh);
    }
    if (shaved.subgraph.codegree(e[0], e[1]) == 0 ||
        shaved.subgraph.codegree(e[2], e[3]) == 0) {
      --t;  // outside the shadow; redraw (does not happen here: shadow complete)
      continue;
    }
    ConnectorParams params;
    params.internal_len = 6;
    params.beta_threshold = 0.45 * 100.0 / 20.0;
    try {
      const TightPath conn =
          connect_pair(g, shaved.subgraph, PathEnd{e[0], e[1]},
                       PathEnd{e[2], e[3]}, Bitset(100), params, rng);
      ++connected;
      if (verify_tight_path(g, conn.seq) && conn.seq.size() == 10) ++verified;
    } catch (const NoPath&) {
    }
  }

  // exact agreement with the exhaustive oracle on 200 small instances
  Rng srng(57);
  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Vertex n = 8 + Vertex(srng.below(5));
    const double p = 0.2 + 0.5 * srng.unit();
    const ThreeGraph h = generate(GenKind::Random, n, p, 40000 + std::uint64_t(trial));
    Vertex e[4];
    for (int i = 0; i < 4; ++i) {
      bool fresh;
      do {
        e[i] = Vertex(srng.below(std::uint64_t(n)));
        fresh = true;
        for (int j = 0; j < i; ++j) fresh = fresh && e[i] != e[j];
      } while (!fresh);
    }
    const PathEnd a{e[0], e[1]}, b{e[2], e[3]};
    const int k = 2 + int(srng.below(3));
    const bool oracle = bool(dp_connector(h, a, b, k, Bitset(n)));
    ConnectorParams params;
    params.internal_len = k;
    params.beam = 0;
    bool found = false;
    try {
      connect_pair(h, h, a, b, Bitset(n), params, srng);
      found = true;
    } catch (const NoPath&) {
    } catch (const BadEnds&) {
    }
    if (found != oracle) ++disagreements;
  }

  std::ostringstream d;
  d << connected << "/100 connected, " << verified << " verified, "
    << disagreements << "/200 oracle disagreements";
  report(5, "connection", connected == 100 && verified == 100 && disagreements == 0,
         d.str());
}

// ---- 6: path cover ---------------------------------------------------------

void criterion6() {
  int successes = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const ThreeGraph g = generate(GenKind::Random, 100, 0.5, 50000 + seed);
    CoverParams params;
    params.zeta = 0.05;
    params.l0 = 20;
    params.restarts = 5;
    params.seed = seed;
    try {
      greedy_cover(g, params);
      ++successes;
    } catch (const CoverTooSparse&) {
    }
  }

  int complete_bad = 0;
  for (Vertex n = 3; n <= 50; ++n) {
    CoverParams params;
    params.zeta = 1.0;
    params.l0 = 5;
    params.restarts = 2;
    params.seed = std::uint64_t(n);
    const CoverResult res = greedy_cover(complete_graph(n), params);
    if (res.paths.size() != 1 || res.leftover.any()) ++complete_bad;
  }

  std::ostringstream d;
  d << successes << "/50 random trials succeeded, " << complete_bad
    << " complete-graph failures";
  report(6, "path cover", successes >= 48 && complete_bad == 0, d.str());
}

// ---- 7: density falsification ----------------------------------------------

void criterion7() {
  const ThreeGraph split = generate(GenKind::Split, 30, 0, 0);
  Rng rng(77);
  const auto w = falsify_cherry(split, {0.25, 1e-4}, {20, 50}, rng);
  bool split_ok = false, sound = false;
  double deficit = 0;
  if (w) {
    deficit = w->deficit;
    split_ok = deficit >= 0.9 * 0.25 * 15.0 * 15.0 * 15.0;
    const auto again = check_cherry(split, w->g1, w->g2, {0.25, 1e-4});
    sound = again && again->deficit == w->deficit &&
            again->observed == w->observed;
  }

  const ThreeGraph k20 = complete_graph(20);
  Rng rng2(78);
  const bool k20_clean = !falsify_cherry(k20, {0.9, 0.2}, {20, 50}, rng2);

  std::ostringstream d;
  d << "split deficit " << deficit << " (need >= 759.375), exact re-check: "
    << (sound ? "yes" : "NO") << ", K20 witness-free: "
    << (k20_clean ? "yes" : "NO");
  report(7, "density falsification", split_ok && sound && k20_clean, d.str());
}

// ---- 8: absorption identity -------------------------------------------------

void criterion8() {
  int records = 0, identity_bad = 0, singleton_bad = 0, full_bad = 0;
  for (std::uint64_t gseed = 1; gseed <= 40 && records < 100; ++gseed) {
    const ThreeGraph g = generate(GenKind::Random, 100, 0.5, 60000 + gseed);
    ShaveResult shaved;
    try {
      shaved = shave_graph(g, 0.45, 0.02);
    } catch (const PreconditionFailed&) {
      continue;
    }
    for (std::uint64_t rseed = 0; rseed < 10 && records < 100; ++rseed) {
      PipelineParams params;
      params.d = 0.45;
      params.seed = gseed * 100 + rseed;
      AbsorbingPathRecord rec;
      try {
        const ReservoirReport rep = sample_reservoir(
            g, shaved, 0.15, 100, Rng(params.seed), (100 - 2) / 6);
        rec = build_absorbing_path(g, shaved, rep.A, params,
                                   Rng(params.seed).derive("abspath"));
      } catch (const std::exception&) {
        continue;
      }
      ++records;

      if (!(absorb_into(g, rec, {}).seq == rec.path.seq)) ++identity_bad;

      std::vector<Vertex> members;
      for (const auto& [v, slot] : rec.slots) members.push_back(v);
      for (Vertex v : members) {
        const TightPath one = absorb_into(g, rec, {v});
        if (one.seq.size() != rec.path.seq.size() + 1 ||
            !(one.front_end() == rec.path.front_end()) ||
            !(one.back_end() == rec.path.back_end()) ||
            !verify_tight_path(g, one.seq))
          ++singleton_bad;
      }

      const TightPath full = absorb_into(g, rec, members);
      Bitset expect = Bitset(100);
      for (Vertex v : rec.path.seq) expect.set(v);
      for (Vertex v : members) expect.set(v);
      Bitset got(100);
      for (Vertex v : full.seq) got.set(v);
      if (!verify_tight_path(g, full.seq) || !(got == expect) ||
          !(full.front_end() == rec.path.front_end()) ||
          !(full.back_end() == rec.path.back_end()))
        ++full_bad;
    }
  }
  std::ostringstream d;
  d << records << " records, " << identity_bad << " identity / "
    << singleton_bad << " singleton / " << full_bad << " full failures";
  report(8, "absorption identity",
         records >= 100 && identity_bad == 0 && singleton_bad == 0 && full_bad == 0,
         d.str());
}

// ---- 9: CLI pipe, tamper detection, byte determinism ------------------------

int shell(const std::string& cmd) {
  const int rc = std::system(cmd.c_str());
  return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion9() {
  const std::string cli = TIGHTCYCLE_CLI_PATH;
  const std::string dir = "acceptance_tmp";
  shell("rm -rf " + dir + " && mkdir -p " + dir);
  const std::string ham_flags =
      " --d 0.45 --rho 0.02 --sigma 0.15 --zeta 0.05 --l0 20 --internal-len 6";

  // (a) gen | hamilton | verify exits 0 on criterion-1 instances
  bool pipe_ok = true;
  for (int seed = 1; seed <= 2; ++seed) {
    const std::string cmd = cli + " gen random -n 100 -p 0.5 --seed " +
                            std::to_string(seed) + " | " + cli + " hamilton" +
                            ham_flags + " --seed " + std::to_string(seed) +
                            " | " + cli + " verify > " + dir + "/pipe_out.txt";
    if (shell(cmd) != 0) pipe_ok = false;
  }

  // (b) removing one window's edge from the graph file flips verify to 1
  const std::string graph = dir + "/graph.txt";
  const std::string cert = dir + "/cert.txt";
  bool tamper_ok = false;
  if (shell(cli + " gen random -n 100 -p 0.5 --seed 3 --out " + graph) == 0 &&
      shell(cli + " hamilton" + ham_flags + " --seed 3 --out " + cert + " " +
            graph) == 0 &&
      shell(cli + " verify " + cert + " > /dev/null") == 0) {
    std::ifstream cf(cert);
    const CertificateFile parsed = read_certificate(cf);
    ThreeGraph g = load_graph(graph);
    g.remove_edge(parsed.order[0], parsed.order[1], parsed.order[2]);
    std::ofstream gf(graph);
    write_edge_list(gf, g);
    gf.close();
    tamper_ok = shell(cli + " verify " + cert + " > /dev/null") == 1;
  }

  // (c) byte-identical output across repeated runs
  const std::string runa = dir + "/a.txt", runb = dir + "/b.txt";
  shell(cli + " gen random -n 100 -p 0.5 --seed 4 | " + cli + " hamilton" +
        ham_flags + " --seed 4 > " + runa);
  shell(cli + " gen random -n 100 -p 0.5 --seed 4 | " + cli + " hamilton" +
        ham_flags + " --seed 4 > " + runb);
  const bool bytes_ok = !slurp(runa).empty() && slurp(runa) == slurp(runb);

  shell("rm -rf " + dir);
  std::ostringstream d;
  d << "pipe: " << (pipe_ok ? "ok" : "FAIL") << ", tamper exit-1: "
    << (tamper_ok ? "ok" : "FAIL") << ", byte-identical: "
    << (bytes_ok ? "ok" : "FAIL");
  report(9, "CLI pipe and certificate handling", pipe_ok && tamper_ok && bytes_ok,
         d.str());
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (g_failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", g_failures);
  return g_failures;
}
