// Command-line surface over the library: generators, density falsification,
// shaving, absorber/connector/cover probes, the Hamilton pipeline, and the
// independent certificate verifier.
//
// Exit codes: 0 success, 1 honest negative (no path / witness found where
// denseness was claimed / cover too sparse / invalid certificate), 2 usage
// or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

#include "tightcycle/connect.hpp"
#include "tightcycle/density.hpp"
#include "tightcycle/io.hpp"
#include "tightcycle/oracle.hpp"
#include "tightcycle/pathcover.hpp"
#include "tightcycle/pipeline.hpp"
#include "tightcycle/shave.hpp"

using json = nlohmann::ordered_json;
using namespace tightcycle;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

std::ostream& open_out(const std::string& path, std::ofstream& file) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw ParseError("cannot open output file " + path);
  return file;
}

struct GenArgs {
  std::string kind;
  int n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string out;
};

int run_gen(const GenArgs& a) {
  const auto kind = gen_kind_from_string(a.kind);
  if (!kind) {
    std::cerr << "unknown generator kind: " << a.kind << "\n";
    return kUsage;
  }
  const ThreeGraph g = generate(*kind, a.n, a.p, a.seed);
  std::ofstream file;
  write_edge_list(open_out(a.out, file), g);
  return kOk;
}

struct DensityArgs {
  std::string input = "-";
  double d = 0.5, rho = 0.01;
  std::string kind = "cherry";
  int restarts = 20, iterations = 50;
  std::uint64_t seed = 1;
  bool as_json = false;
};

int run_density(const DensityArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  const DensityParams p{a.d, a.rho};
  const FalsifyBudget budget{a.restarts, a.iterations};
  Rng rng(a.seed);
  std::optional<DensityWitness> w;
  if (a.kind == "cherry")
    w = falsify_cherry(g, p, budget, rng);
  else if (a.kind == "points")
    w = falsify_points(g, p, budget, rng);
  else {
    std::cerr << "unknown density kind: " << a.kind << "\n";
    return kUsage;
  }
  if (a.as_json) {
    json j;
    j["kind"] = a.kind;
    j["violated"] = bool(w);
    if (w) {
      j["observed"] = w->observed;
      j["bound"] = w->bound;
      j["deficit"] = w->deficit;
    }
    std::cout << j.dump(2) << "\n";
  } else if (w) {
    std::cout << "witness found: observed " << w->observed << " < bound "
              << w->bound << " (deficit " << w->deficit << ")\n";
  } else {
    std::cout << "no violation found within budget\n";
  }
  return w ? kNegative : kOk;
}

struct ShaveArgs {
  std::string input = "-";
  double d = 0.5, rho = 0.01;
  std::string out;
  bool as_json = false;
};

int run_shave(const ShaveArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  try {
    const ShaveResult res = shave_graph(g, a.d, a.rho);
    if (a.as_json) {
      json j;
      j["threshold"] = res.threshold_used;
      j["removed_edges"] = res.removed_edges;
      j["zeroed_pairs"] = res.zeroed_pairs.size();
      j["edges"] = res.subgraph.edge_count();
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "threshold " << res.threshold_used << ", removed "
                << res.removed_edges << " edges, " << res.zeroed_pairs.size()
                << " zeroed pairs\n";
    }
    if (!a.out.empty()) {
      std::ofstream file;
      write_edge_list(open_out(a.out, file), res.subgraph);
    } else if (!a.as_json) {
      write_edge_list(std::cout, res.subgraph);
    }
    return kOk;
  } catch (const PreconditionFailed& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kNegative;
  }
}

struct AbsorberArgs {
  std::string input = "-";
  int vertex = -1;
  bool as_json = false;
};

int run_absorbers(const AbsorberArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  const auto report = [&](Vertex v) {
    const std::uint64_t c = count_absorbers(g, v);
    if (a.as_json) {
      json j;
      j["vertex"] = v;
      j["absorbers"] = c;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "vertex " << v << ": " << c << " absorbers\n";
    }
  };
  if (a.vertex >= 0)
    report(a.vertex);
  else
    for (Vertex v = 0; v < g.vertex_count(); ++v) report(v);
  return kOk;
}

struct ConnectArgs {
  std::string input = "-";
  std::vector<int> ends;
  int internal_len = 6;
  double beta = 0.0;  // fraction of n; 0 means "any shadow pair"
  std::optional<double> d, rho;
  std::uint64_t seed = 1;
  bool as_json = false;
};

int run_connect(const ConnectArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  if (a.ends.size() != 4) {
    std::cerr << "--ends needs 4 vertices: a.inner a.outer b.inner b.outer\n";
    return kUsage;
  }
  ThreeGraph hp = g;
  if (a.d && a.rho) hp = shave_graph(g, *a.d, *a.rho).subgraph;
  ConnectorParams params;
  params.internal_len = a.internal_len;
  params.beta_threshold =
      a.beta > 0.0 ? a.beta * double(g.vertex_count()) : 1.0;
  Rng rng(a.seed);
  try {
    const TightPath path =
        connect_pair(g, hp, PathEnd{a.ends[0], a.ends[1]},
                     PathEnd{a.ends[2], a.ends[3]}, Bitset(g.vertex_count()),
                     params, rng);
    if (a.as_json) {
      json j;
      j["path"] = path.seq;
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "connector:";
      for (Vertex v : path.seq) std::cout << " " << v;
      std::cout << "\n";
    }
    return kOk;
  } catch (const NoPath& e) {
    std::cerr << "no path: " << e.what() << "\n";
    return kNegative;
  } catch (const BadEnds& e) {
    std::cerr << "bad ends: " << e.what() << "\n";
    return kNegative;
  }
}

struct CoverArgs {
  std::string input = "-";
  double zeta = 0.05;
  int l0 = 20;
  int restarts = 5;
  std::uint64_t seed = 1;
  bool as_json = false;
};

void print_cover(const CoverResult& res, bool as_json) {
  if (as_json) {
    json j;
    j["paths"] = json::array();
    for (const TightPath& p : res.paths) j["paths"].push_back(p.seq);
    j["leftover"] = res.leftover.to_vector();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const TightPath& p : res.paths) {
      std::cout << "path";
      for (Vertex v : p.seq) std::cout << " " << v;
      std::cout << "\n";
    }
    std::cout << "leftover";
    for (Vertex v : res.leftover.to_vector()) std::cout << " " << v;
    std::cout << "\n";
  }
}

int run_cover(const CoverArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  CoverParams params;
  params.zeta = a.zeta;
  params.l0 = a.l0;
  params.restarts = a.restarts;
  params.seed = a.seed;
  try {
    const CoverResult res = greedy_cover(g, params);
    print_cover(res, a.as_json);
    return kOk;
  } catch (const CoverTooSparse& e) {
    std::cerr << "cover too sparse: " << e.what() << "\n";
    print_cover(e.best, a.as_json);
    return kNegative;
  }
}

struct HamiltonArgs {
  std::string input = "-";
  PipelineParams params;
  double sigma = -1, zeta = -1, beta = -1;
  std::string out;
  bool as_json = false;
};

int run_hamilton(HamiltonArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  if (a.sigma > 0) a.params.sigma = a.sigma;
  if (a.zeta > 0) a.params.zeta = a.zeta;
  if (a.beta > 0) a.params.beta_connect = a.beta;
  try {
    const HamiltonCertificate result = find_tight_hamilton(g, a.params);
    std::optional<std::string> graph_ref;
    const ThreeGraph* embed = nullptr;
    if (a.input == "-")
      embed = &g;  // keep the certificate self-contained across pipes
    else
      graph_ref = a.input;
    const CertificateFile cert = make_certificate(result, graph_ref, embed);
    std::ofstream file;
    std::ostream& os = open_out(a.out, file);
    if (a.as_json) {
      json j;
      j["n"] = cert.n;
      j["order"] = cert.order;
      j["reservoir_size"] = cert.log.reservoir_size;
      j["cover_paths"] = cert.log.cover_paths;
      j["connectors"] = cert.log.connectors;
      j["absorbed"] = cert.log.absorbed;
      os << j.dump(2) << "\n";
    } else {
      write_certificate(os, cert);
    }
    return kOk;
  } catch (const PipelineError& e) {
    std::cerr << "pipeline failed at stage " << stage_name(e.stage) << ": "
              << e.what() << "\n";
    return kNegative;
  }
}

struct VerifyArgs {
  std::string cert = "-";
  std::string graph;
  bool as_json = false;
};

int run_verify(const VerifyArgs& a) {
  CertificateFile cert;
  if (a.cert == "-") {
    cert = read_certificate(std::cin);
  } else {
    std::ifstream f(a.cert);
    if (!f) throw ParseError("cannot open " + a.cert);
    cert = read_certificate(f);
  }
  ThreeGraph g;
  if (!a.graph.empty())
    g = load_graph(a.graph);
  else if (cert.embedded_graph)
    g = *cert.embedded_graph;
  else if (cert.graph_file)
    g = load_graph(*cert.graph_file);
  else
    throw ParseError("no graph: pass --graph or use a self-contained certificate");

  std::string why;
  const bool ok = verify_certificate(cert, g, &why);
  if (a.as_json) {
    json j;
    j["valid"] = ok;
    if (!ok) j["reason"] = why;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << (ok ? "certificate valid" : "certificate INVALID: " + why)
              << "\n";
  }
  return ok ? kOk : kNegative;
}

struct OracleArgs {
  std::string input = "-";
  int cap = 18;
  bool as_json = false;
};

int run_oracle(const OracleArgs& a) {
  const ThreeGraph g = load_graph(a.input);
  const auto cycle = dp_hamilton(g, a.cap);
  if (a.as_json) {
    json j;
    j["hamiltonian"] = bool(cycle);
    if (cycle) j["order"] = cycle->order;
    std::cout << j.dump() << "\n";
  } else if (cycle) {
    std::cout << "tight hamilton cycle:";
    for (Vertex v : cycle->order) std::cout << " " << v;
    std::cout << "\n";
  } else {
    std::cout << "no tight hamilton cycle\n";
  }
  return cycle ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tight Hamilton cycles in dense 3-uniform hypergraphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a 3-graph edge list");
  gen->add_option("kind", gen_args.kind,
                  "random|complete|tight_cycle|split|single_absorber")
      ->required();
  gen->add_option("-n", gen_args.n, "vertex count")->required();
  gen->add_option("-p", gen_args.p, "edge probability (random)");
  gen->add_option("--seed", gen_args.seed, "rng seed");
  gen->add_option("--out", gen_args.out, "output file (default stdout)");

  DensityArgs density_args;
  auto* density = app.add_subcommand("density", "falsify a denseness claim");
  density->add_option("input", density_args.input, "edge list file or -");
  density->add_option("--d", density_args.d, "density")->required();
  density->add_option("--rho", density_args.rho, "slack")->required();
  density->add_option("--kind", density_args.kind, "cherry|points");
  density->add_option("--restarts", density_args.restarts, "restart budget");
  density->add_option("--iterations", density_args.iterations,
                      "iterations per restart");
  density->add_option("--seed", density_args.seed, "rng seed");
  density->add_flag("--json", density_args.as_json, "machine-readable output");

  ShaveArgs shave_args;
  auto* shave = app.add_subcommand("shave", "codegree-dichotomy subgraph");
  shave->add_option("input", shave_args.input, "edge list file or -");
  shave->add_option("--d", shave_args.d, "density")->required();
  shave->add_option("--rho", shave_args.rho, "slack")->required();
  shave->add_option("--out", shave_args.out, "write the shaved edge list here");
  shave->add_flag("--json", shave_args.as_json, "machine-readable output");

  AbsorberArgs absorber_args;
  auto* absorbers = app.add_subcommand("absorbers", "count v-absorbers");
  absorbers->add_option("input", absorber_args.input, "edge list file or -");
  absorbers->add_option("--vertex", absorber_args.vertex,
                        "single vertex (default: all)");
  absorbers->add_flag("--json", absorber_args.as_json, "machine-readable output");

  ConnectArgs connect_args;
  auto* connect = app.add_subcommand("connect", "find a tight connector");
  connect->add_option("input", connect_args.input, "edge list file or -");
  connect->add_option("--ends", connect_args.ends,
                      "a.inner a.outer b.inner b.outer")
      ->expected(4)
      ->required();
  connect->add_option("--internal-len", connect_args.internal_len,
                      "internal vertices");
  connect->add_option("--beta", connect_args.beta,
                      "waypoint codegree fraction of n");
  connect->add_option("--d", connect_args.d, "shave density before connecting");
  connect->add_option("--rho", connect_args.rho, "shave slack");
  connect->add_option("--seed", connect_args.seed, "rng seed");
  connect->add_flag("--json", connect_args.as_json, "machine-readable output");

  CoverArgs cover_args;
  auto* cover = app.add_subcommand("cover", "greedy tight-path cover");
  cover->add_option("input", cover_args.input, "edge list file or -");
  cover->add_option("--zeta", cover_args.zeta, "leftover fraction target");
  cover->add_option("--l0", cover_args.l0, "max paths");
  cover->add_option("--restarts", cover_args.restarts, "restarts");
  cover->add_option("--seed", cover_args.seed, "rng seed");
  cover->add_flag("--json", cover_args.as_json, "machine-readable output");

  HamiltonArgs ham_args;
  auto* hamilton =
      app.add_subcommand("hamilton", "find a certified tight Hamilton cycle");
  hamilton->add_option("input", ham_args.input, "edge list file or -");
  hamilton->add_option("--d", ham_args.params.d, "density")->required();
  hamilton->add_option("--rho", ham_args.params.rho, "slack");
  hamilton->add_option("--alpha", ham_args.params.alpha,
                       "min-degree fraction (diagnostic)");
  hamilton->add_option("--sigma", ham_args.sigma, "reservoir probability");
  hamilton->add_option("--zeta", ham_args.zeta, "cover leftover fraction");
  hamilton->add_option("--l0", ham_args.params.l0, "max cover paths");
  hamilton->add_option("--beta", ham_args.beta, "assembly codegree fraction");
  hamilton->add_option("--internal-len", ham_args.params.internal_len,
                       "connector internal vertices");
  hamilton->add_option("--seed", ham_args.params.seed, "rng seed");
  hamilton->add_option("--tries", ham_args.params.reservoir_tries,
                       "reservoir rejection budget");
  hamilton->add_option("--cover-restarts", ham_args.params.cover_restarts,
                       "cover restarts");
  hamilton->add_option("--out", ham_args.out, "certificate file (default stdout)");
  hamilton->add_flag("--json", ham_args.as_json, "machine-readable output");

  VerifyArgs verify_args;
  auto* verify =
      app.add_subcommand("verify", "independently re-check a certificate");
  verify->add_option("cert", verify_args.cert, "certificate file or -");
  verify->add_option("--graph", verify_args.graph,
                     "edge list to check against (overrides the certificate)");
  verify->add_flag("--json", verify_args.as_json, "machine-readable output");

  OracleArgs oracle_args;
  auto* oracle = app.add_subcommand(
      "oracle", "exact small-n tight-Hamiltonicity decision");
  oracle->add_option("input", oracle_args.input, "edge list file or -");
  oracle->add_option("--cap", oracle_args.cap, "max n for the search");
  oracle->add_flag("--json", oracle_args.as_json, "machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) return run_gen(gen_args);
    if (density->parsed()) return run_density(density_args);
    if (shave->parsed()) return run_shave(shave_args);
    if (absorbers->parsed()) return run_absorbers(absorber_args);
    if (connect->parsed()) return run_connect(connect_args);
    if (cover->parsed()) return run_cover(cover_args);
    if (hamilton->parsed()) return run_hamilton(ham_args);
    if (verify->parsed()) return run_verify(verify_args);
    if (oracle->parsed()) return run_oracle(oracle_args);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
