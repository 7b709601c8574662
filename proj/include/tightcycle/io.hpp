#ifndef TIGHTCYCLE_IO_HPP
#define TIGHTCYCLE_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tightcycle/core.hpp"
#include "tightcycle/pipeline.hpp"

namespace tightcycle {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Edge-list format: header "n <count>", then one edge per line "u v w"
// (0-indexed, any order within the line), '#' starts a comment. Duplicate
// lines collapse to one edge.
ThreeGraph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const ThreeGraph& g);

// path "-" reads stdin.
ThreeGraph load_graph(const std::string& path);

enum class GenKind { Random, Complete, TightCycle, Split, SingleAbsorber };

std::optional<GenKind> gen_kind_from_string(const std::string& s);

// Deterministic given the seed. Random is the binomial model: every triple
// independently with probability p. Split puts all triples inside either
// half of a bipartition, the standard cherry-denseness violator.
ThreeGraph generate(GenKind kind, Vertex n, double p, std::uint64_t seed);

// Human-readable certificate: key-value lines plus the cyclic order, a
// digest of the edge windows, and either a reference to the graph file or
// the full edge list (so certificates survive pipes). Round-trips losslessly.
struct CertificateFile {
  int version = 1;
  Vertex n = 0;
  double d = 0, rho = 0, alpha = 0, sigma = 0, zeta = 0, beta = 0;
  int l0 = 0, internal_len = 0;
  std::uint64_t seed = 0;
  StageLog log;
  std::vector<Vertex> order;
  std::uint64_t digest = 0;
  std::optional<std::string> graph_file;
  std::optional<ThreeGraph> embedded_graph;
};

std::uint64_t windows_digest(const std::vector<Vertex>& order);

CertificateFile make_certificate(const HamiltonCertificate& result,
                                 std::optional<std::string> graph_file,
                                 const ThreeGraph* embed);
void write_certificate(std::ostream& out, const CertificateFile& cert);
CertificateFile read_certificate(std::istream& in);

// Independent re-check: rebuilds nothing from the digest; every cyclic
// window is tested against the graph, then the digest is recomputed.
bool verify_certificate(const CertificateFile& cert, const ThreeGraph& g,
                        std::string* why);

}  // namespace tightcycle

#endif
