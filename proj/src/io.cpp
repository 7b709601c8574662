#include "tightcycle/io.hpp"

#include <cctype>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tightcycle/oracle.hpp"
#include "tightcycle/rng.hpp"

namespace tightcycle {

namespace {

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

ThreeGraph read_edge_list(std::istream& in) {
  std::string line;
  Vertex n = -1;
  ThreeGraph g;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    if (n < 0) {
      std::string tag;
      long long count = -1;
      if (!(ls >> tag >> count) || tag != "n" || count < 0)
        throw ParseError("line " + std::to_string(lineno) +
                         ": expected header \"n <count>\"");
      n = Vertex(count);
      g = ThreeGraph(n);
      continue;
    }
    long long u, v, w;
    if (!(ls >> u >> v >> w))
      throw ParseError("line " + std::to_string(lineno) +
                       ": expected \"u v w\"");
    if (u < 0 || v < 0 || w < 0 || u >= n || v >= n || w >= n)
      throw ParseError("line " + std::to_string(lineno) +
                       ": vertex out of range");
    try {
      g.add_edge(Vertex(u), Vertex(v), Vertex(w));  // duplicates collapse
    } catch (const DegenerateTriple&) {
      throw ParseError("line " + std::to_string(lineno) +
                       ": repeated vertex in edge");
    }
  }
  if (n < 0) throw ParseError("missing header \"n <count>\"");
  return g;
}

void write_edge_list(std::ostream& out, const ThreeGraph& g) {
  out << "n " << g.vertex_count() << "\n";
  g.for_each_edge([&](const Triple& t) {
    out << t.a << " " << t.b << " " << t.c << "\n";
  });
}

ThreeGraph load_graph(const std::string& path) {
  if (path == "-") return read_edge_list(std::cin);
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  return read_edge_list(f);
}

std::optional<GenKind> gen_kind_from_string(const std::string& s) {
  if (s == "random") return GenKind::Random;
  if (s == "complete") return GenKind::Complete;
  if (s == "tight_cycle") return GenKind::TightCycle;
  if (s == "split") return GenKind::Split;
  if (s == "single_absorber") return GenKind::SingleAbsorber;
  return std::nullopt;
}

ThreeGraph generate(GenKind kind, Vertex n, double p, std::uint64_t seed) {
  switch (kind) {
    case GenKind::Random: {
      if (n < 0 || p < 0.0 || p > 1.0)
        throw std::invalid_argument("random needs n >= 0 and p in [0,1]");
      ThreeGraph g(n);
      Rng rng(seed);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c)
            if (rng.coin(p)) g.add_edge(a, b, c);
      return g;
    }
    case GenKind::Complete: {
      if (n < 0) throw std::invalid_argument("complete needs n >= 0");
      ThreeGraph g(n);
      for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
          for (Vertex c = b + 1; c < n; ++c) g.add_edge(a, b, c);
      return g;
    }
    case GenKind::TightCycle: {
      if (n < 5) throw std::invalid_argument("tight_cycle needs n >= 5");
      ThreeGraph g(n);
      for (Vertex i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n, (i + 2) % n);
      return g;
    }
    case GenKind::Split: {
      if (n < 2) throw std::invalid_argument("split needs n >= 2");
      ThreeGraph g(n);
      const Vertex half = n / 2;
      const auto fill = [&](Vertex lo, Vertex hi) {
        for (Vertex a = lo; a < hi; ++a)
          for (Vertex b = a + 1; b < hi; ++b)
            for (Vertex c = b + 1; c < hi; ++c) g.add_edge(a, b, c);
      };
      fill(0, half);
      fill(half, n);
      return g;
    }
    case GenKind::SingleAbsorber: {
      if (n != 5)
        throw std::invalid_argument("single_absorber is a 5-vertex gadget");
      // v=0, (x,y,z,w)=(1,2,3,4)
      ThreeGraph g(5);
      g.add_edge(1, 2, 3);
      g.add_edge(2, 3, 4);
      g.add_edge(0, 1, 2);
      g.add_edge(0, 2, 3);
      g.add_edge(0, 3, 4);
      return g;
    }
  }
  throw std::invalid_argument("unknown generator kind");
}

std::uint64_t windows_digest(const std::vector<Vertex>& order) {
  // FNV-1a over the cyclic window triples in canonical form
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto mix = [&](std::uint32_t v) {
    for (int s = 0; s < 32; s += 8) {
      h ^= (v >> s) & 0xff;
      h *= 0x100000001b3ULL;
    }
  };
  const std::size_t m = order.size();
  for (std::size_t i = 0; i < m; ++i) {
    Vertex a = order[i], b = order[(i + 1) % m], c = order[(i + 2) % m];
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    mix(std::uint32_t(a));
    mix(std::uint32_t(b));
    mix(std::uint32_t(c));
  }
  return h;
}

CertificateFile make_certificate(const HamiltonCertificate& result,
                                 std::optional<std::string> graph_file,
                                 const ThreeGraph* embed) {
  CertificateFile c;
  c.n = result.n;
  c.d = result.params.d;
  c.rho = result.params.rho;
  c.alpha = result.params.alpha;
  c.sigma = result.params.sigma_value(result.n);
  c.zeta = result.params.zeta_value(result.n);
  c.beta = result.params.beta_connect ? *result.params.beta_connect
                                      : result.params.d / 20.0;
  c.l0 = result.params.l0;
  c.internal_len = result.params.internal_len;
  c.seed = result.params.seed;
  c.log = result.log;
  c.order = result.order;
  c.digest = windows_digest(result.order);
  c.graph_file = std::move(graph_file);
  if (embed) c.embedded_graph = *embed;
  return c;
}

void write_certificate(std::ostream& out, const CertificateFile& c) {
  out << "tightcycle-certificate v" << c.version << "\n";
  out << "n " << c.n << "\n";
  out << "param d " << fmt_double(c.d) << "\n";
  out << "param rho " << fmt_double(c.rho) << "\n";
  out << "param alpha " << fmt_double(c.alpha) << "\n";
  out << "param sigma " << fmt_double(c.sigma) << "\n";
  out << "param zeta " << fmt_double(c.zeta) << "\n";
  out << "param beta " << fmt_double(c.beta) << "\n";
  out << "param l0 " << c.l0 << "\n";
  out << "param internal-len " << c.internal_len << "\n";
  out << "param seed " << c.seed << "\n";
  const StageLog& log = c.log;
  out << "stage attempt " << log.attempt << "\n";
  out << "stage delta1 ok " << (log.delta1_ok ? 1 : 0) << " fraction "
      << fmt_double(log.min_degree_fraction) << "\n";
  out << "stage shave removed " << log.shave_removed << " zeroed "
      << log.shave_zeroed << " threshold " << fmt_double(log.shave_threshold)
      << "\n";
  out << "stage reservoir tries " << log.reservoir_tries << " size "
      << log.reservoir_size << "\n";
  out << "stage abspath vertices " << log.abspath_vertices << " slots "
      << log.abspath_slots << " hypothesis "
      << (log.abspath_hypothesis_ok ? 1 : 0) << "\n";
  out << "stage cover paths " << log.cover_paths << " leftover "
      << log.cover_leftover << "\n";
  out << "stage gadgets " << log.leftover_gadgets << "\n";
  out << "stage connect connectors " << log.connectors << " internals "
      << log.connector_internals << "\n";
  out << "stage absorb " << log.absorbed << "\n";
  out << "order";
  for (Vertex v : c.order) out << " " << v;
  out << "\n";
  {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, c.digest);
    out << "windows-digest " << buf << "\n";
  }
  if (c.graph_file) out << "graph-file " << *c.graph_file << "\n";
  if (c.embedded_graph) {
    out << "graph-embedded " << c.embedded_graph->edge_count() << "\n";
    c.embedded_graph->for_each_edge([&](const Triple& t) {
      out << t.a << " " << t.b << " " << t.c << "\n";
    });
  }
  out << "end\n";
}

CertificateFile read_certificate(std::istream& in) {
  CertificateFile c;
  std::string line;
  if (!std::getline(in, line) || line.rfind("tightcycle-certificate v", 0) != 0)
    throw ParseError("not a tightcycle certificate");
  c.version = std::stoi(line.substr(24));
  bool seen_end = false;
  while (std::getline(in, line)) {
    if (line == "end") {
      seen_end = true;
      break;
    }
    if (is_blank_or_comment(line)) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "n") {
      long long n;
      ls >> n;
      c.n = Vertex(n);
    } else if (key == "param") {
      std::string name;
      ls >> name;
      if (name == "d") ls >> c.d;
      else if (name == "rho") ls >> c.rho;
      else if (name == "alpha") ls >> c.alpha;
      else if (name == "sigma") ls >> c.sigma;
      else if (name == "zeta") ls >> c.zeta;
      else if (name == "beta") ls >> c.beta;
      else if (name == "l0") ls >> c.l0;
      else if (name == "internal-len") ls >> c.internal_len;
      else if (name == "seed") ls >> c.seed;
      else throw ParseError("unknown param " + name);
    } else if (key == "stage") {
      std::string name;
      ls >> name;
      StageLog& log = c.log;
      std::string tag;
      if (name == "attempt") ls >> log.attempt;
      else if (name == "delta1") {
        int ok;
        ls >> tag >> ok >> tag >> log.min_degree_fraction;
        log.delta1_ok = ok != 0;
      } else if (name == "shave")
        ls >> tag >> log.shave_removed >> tag >> log.shave_zeroed >> tag >>
            log.shave_threshold;
      else if (name == "reservoir")
        ls >> tag >> log.reservoir_tries >> tag >> log.reservoir_size;
      else if (name == "abspath") {
        int ok;
        ls >> tag >> log.abspath_vertices >> tag >> log.abspath_slots >> tag >>
            ok;
        log.abspath_hypothesis_ok = ok != 0;
      } else if (name == "cover")
        ls >> tag >> log.cover_paths >> tag >> log.cover_leftover;
      else if (name == "gadgets")
        ls >> log.leftover_gadgets;
      else if (name == "connect")
        ls >> tag >> log.connectors >> tag >> log.connector_internals;
      else if (name == "absorb")
        ls >> log.absorbed;
      else
        throw ParseError("unknown stage " + name);
    } else if (key == "order") {
      long long v;
      while (ls >> v) c.order.push_back(Vertex(v));
    } else if (key == "windows-digest") {
      std::string hex;
      ls >> hex;
      c.digest = std::stoull(hex, nullptr, 16);
    } else if (key == "graph-file") {
      std::string path;
      ls >> path;
      c.graph_file = path;
    } else if (key == "graph-embedded") {
      std::size_t m;
      ls >> m;
      ThreeGraph g(c.n);
      for (std::size_t i = 0; i < m; ++i) {
        if (!std::getline(in, line))
          throw ParseError("truncated embedded graph");
        std::istringstream es(line);
        long long u, v, w;
        if (!(es >> u >> v >> w)) throw ParseError("bad embedded edge line");
        g.add_edge(Vertex(u), Vertex(v), Vertex(w));
      }
      c.embedded_graph = std::move(g);
    } else {
      throw ParseError("unknown certificate key " + key);
    }
  }
  if (!seen_end) throw ParseError("certificate missing end marker");
  return c;
}

bool verify_certificate(const CertificateFile& cert, const ThreeGraph& g,
                        std::string* why) {
  const auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.n != g.vertex_count()) return fail("vertex count mismatch");
  if (!verify_hamilton_cycle(g, cert.order))
    return fail("order is not a tight Hamilton cycle of the graph");
  if (windows_digest(cert.order) != cert.digest)
    return fail("windows digest mismatch");
  if (why) why->clear();
  return true;
}

}  // namespace tightcycle
