#include "metricdim/ball.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"

namespace metricdim {

CertifiedBall build_ball(const InfiniteGraphOracle& oracle, int radius) {
  if (radius < 0) throw InputError("ball radius must be non-negative");

  std::map<VertexId, int> depth_by_label{{oracle.basepoint(), 0}};
  std::vector<VertexId> frontier{oracle.basepoint()};
  std::map<VertexId, std::vector<VertexId>> adjacency;

  for (int d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<VertexId> next;
    for (const auto& u : frontier) {  // frontier is label-sorted
      for (const auto& v : oracle.neighbors(u)) {
        if (depth_by_label.emplace(v, d + 1).second) next.push_back(v);
      }
    }
    std::sort(next.begin(), next.end());
    frontier = std::move(next);
  }

  // Query every ball vertex (including depth-r ones) so induced edges and
  // boundary flags are exact.
  std::set<VertexId> has_outside_neighbor;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& [u, du] : depth_by_label) {
    for (const auto& v : oracle.neighbors(u)) {
      auto it = depth_by_label.find(v);
      if (it == depth_by_label.end()) {
        has_outside_neighbor.insert(u);
        continue;
      }
      if (u < v) edges.emplace_back(u, v);
    }
  }

  CertifiedBall ball;
  ball.radius = radius;
  ball.basepoint = oracle.basepoint();
  std::vector<VertexId> labels;
  for (const auto& [v, d] : depth_by_label) labels.push_back(v);
  ball.graph = Graph(labels, edges);

  // Symmetry check on the explored region.
  for (const auto& [a, b] : edges) {
    const auto back = oracle.neighbors(b);
    if (!std::binary_search(back.begin(), back.end(), a)) {
      throw std::logic_error("oracle adjacency is not symmetric at " + a.str() +
                             " / " + b.str());
    }
  }

  ball.depth.resize(ball.graph.order());
  for (int i = 0; i < ball.graph.order(); ++i) {
    ball.depth[i] = depth_by_label.at(ball.graph.label(i));
  }
  for (const auto& v : has_outside_neighbor) {
    if (depth_by_label.at(v) == radius) ball.boundary.push_back(v);
  }
  return ball;
}

std::optional<int> certified_distance(const CertifiedBall& ball,
                                      const VertexId& u, const VertexId& v) {
  const auto ui = ball.graph.find(u);
  const auto vi = ball.graph.find(v);
  if (!ui || !vi) {
    throw InputError("vertex outside ball: " + (ui ? v.str() : u.str()));
  }
  const int d = bfs_from(ball.graph, *ui)[*vi];
  if (!ball.distance_certified(*ui, *vi, d)) return std::nullopt;
  return d;
}

std::optional<int> certified_distance(const InfiniteGraphOracle& oracle,
                                      const VertexId& u, const VertexId& v,
                                      int radius) {
  return certified_distance(build_ball(oracle, radius), u, v);
}

BallResolutionCheck verify_resolving_on_ball(const CertifiedBall& ball,
                                             const std::vector<VertexId>& w_set,
                                             ResolveMode mode) {
  const Graph& g = ball.graph;
  std::vector<int> w_idx;
  for (const auto& w : w_set) {
    const auto i = g.find(w);
    if (!i) throw InputError("resolving-set vertex outside ball: " + w.str());
    w_idx.push_back(*i);
  }
  std::sort(w_idx.begin(), w_idx.end());
  w_idx.erase(std::unique(w_idx.begin(), w_idx.end()), w_idx.end());

  std::map<int, std::vector<int>> dist_from;
  for (int w : w_idx) dist_from[w] = bfs_from(g, w);

  BallResolutionCheck out;
  for (int u = 0; u < g.order(); ++u) {
    std::vector<int> du;
    if (mode == ResolveMode::Strong) du = bfs_from(g, u);
    for (int v = u + 1; v < g.order(); ++v) {
      const bool duv_cert =
          mode == ResolveMode::Weak || ball.distance_certified(u, v, du[v]);
      bool resolved = false;
      bool all_certified = duv_cert;
      for (int w : w_idx) {
        const auto& dw = dist_from[w];
        const bool cert = ball.distance_certified(w, u, dw[u]) &&
                          ball.distance_certified(w, v, dw[v]) && duv_cert;
        if (!cert) {
          all_certified = false;
          continue;
        }
        const bool hit = mode == ResolveMode::Weak
                             ? dw[u] != dw[v]
                             : (dw[u] == dw[v] + du[v] || dw[v] == dw[u] + du[v]);
        if (hit) {
          resolved = true;
          break;
        }
      }
      if (resolved) {
        ++out.resolved;
      } else if (all_certified) {
        ++out.unresolved;
        if (!out.counterexample) out.counterexample = {{g.label(u), g.label(v)}};
      } else {
        ++out.undetermined;
      }
    }
  }
  return out;
}

int end_count_estimate(const InfiniteGraphOracle& oracle, int inner, int outer) {
  if (inner < 0 || inner >= outer) {
    throw InputError("end count estimate requires 0 <= inner < outer");
  }
  const CertifiedBall ball = build_ball(oracle, outer);
  std::vector<int> annulus;
  for (int i = 0; i < ball.graph.order(); ++i) {
    if (ball.depth[i] > inner) annulus.push_back(i);
  }
  const Graph shell = ball.graph.induced(annulus);
  std::set<VertexId> boundary(ball.boundary.begin(), ball.boundary.end());
  int count = 0;
  for (const auto& component : connected_components(shell)) {
    const bool touches = std::any_of(
        component.vertices().begin(), component.vertices().end(),
        [&](const VertexId& v) { return boundary.count(v) > 0; });
    if (touches) ++count;
  }
  return count;
}

}  // namespace metricdim
