#include "tightcycle/shave.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace tightcycle {

namespace {

double choose2(double n) { return n * (n - 1) / 2.0; }
double choose3(double n) { return n * (n - 1) * (n - 2) / 6.0; }

std::size_t count_low_pairs(const ThreeGraph& g, double bound) {
  const Vertex n = g.vertex_count();
  std::size_t low = 0;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (double(g.codegree(x, y)) < bound) ++low;
  return low;
}

ShaveResult purge_impl(const ThreeGraph& g, double tau) {
  ShaveResult res;
  res.subgraph = g;
  res.threshold_used = tau;
  ThreeGraph& h = res.subgraph;
  const Vertex n = h.vertex_count();

  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex x = 0; x < n; ++x)
      for (Vertex y = x + 1; y < n; ++y) {
        const int c = h.codegree(x, y);
        if (c > 0 && double(c) < tau) {
          // delete every edge containing the pair
          const std::vector<int> zs = h.pair_neighbors(x, y).to_vector();
          for (int z : zs) h.remove_edge(x, y, z);
          changed = true;
        }
      }
  }
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (h.codegree(x, y) == 0) res.zeroed_pairs.push_back({x, y});
  res.removed_edges = g.edge_count() - h.edge_count();
  return res;
}

ShaveResult strong_dense_impl(const ThreeGraph& g, double mu, double theta,
                              std::optional<double> tau_override) {
  if (!(mu > 0.0 && mu < 1.0) || !(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("mu and theta must lie in (0,1)");
  const Vertex n = g.vertex_count();
  if (n < 6) throw std::invalid_argument("strong_dense_subgraph needs n >= 6");

  const double hypothesis_bound = mu * double(n - 2);
  const std::size_t low = count_low_pairs(g, hypothesis_bound);
  const double allowed = theta * choose2(double(n));
  if (double(low) > allowed)
    throw PreconditionFailed(
        "too many low-codegree pairs: " + std::to_string(low) + " > " +
            std::to_string(allowed),
        low, allowed);

  const double q = std::pow(theta, 0.25);
  const double tau = tau_override ? *tau_override : (mu - 8.0 * q) * double(n - 2);
  ShaveResult res = purge_impl(g, tau);
  res.low_pairs_seen = low;

  const double edge_loss_bound = 48.0 * q * choose3(double(n));
  if (double(res.removed_edges) > edge_loss_bound)
    throw BoundViolation("edge loss " + std::to_string(res.removed_edges) +
                         " exceeds 48*theta^(1/4)*C(n,3) = " +
                         std::to_string(edge_loss_bound));
  const double zero_bound = (theta + q) * choose2(double(n));
  if (double(res.zeroed_pairs.size()) > zero_bound)
    throw BoundViolation("zeroed pairs " +
                         std::to_string(res.zeroed_pairs.size()) +
                         " exceed (theta+theta^(1/4))*C(n,2) = " +
                         std::to_string(zero_bound));
  return res;
}

}  // namespace

ShaveResult purge(const ThreeGraph& g, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("tau must be positive");
  return purge_impl(g, tau);
}

ShaveResult strong_dense_subgraph(const ThreeGraph& g, double mu, double theta) {
  return strong_dense_impl(g, mu, theta, std::nullopt);
}

ShaveResult shave_graph(const ThreeGraph& g, double d, double rho) {
  if (!(d > 0.0) || !(rho > 0.0))
    throw std::invalid_argument("d and rho must be positive");
  const Vertex n = g.vertex_count();
  if (n < 6) throw std::invalid_argument("shave_graph needs n >= 6");

  const double theta = 2.0 * rho / d;
  if (!(theta < 1.0))
    throw PreconditionFailed("2*rho/d must be below 1", 0, theta);
  ShaveResult res = strong_dense_impl(g, d / 2.0, theta, d * double(n) / 3.0);

  // hypothesis held, so the shadow must stay near-complete
  const double pairs = choose2(double(n));
  const double shadow_bound = (1.0 - std::pow(rho, 0.2)) * pairs;
  const double shadow = pairs - double(res.zeroed_pairs.size());
  if (shadow < shadow_bound)
    throw BoundViolation("shadow size " + std::to_string(shadow) +
                         " below (1-rho^(1/5))*C(n,2) = " +
                         std::to_string(shadow_bound));
  return res;
}

}  // namespace tightcycle
