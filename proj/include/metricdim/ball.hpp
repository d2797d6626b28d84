#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "metricdim/graph.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/resolve.hpp"

namespace metricdim {

// BFS truncation of an infinite graph. A ball-internal distance is certified
// equal to the true distance whenever it beats the cheapest possible escape:
// d_ball(u,v) < (radius - depth(u)) + (radius - depth(v)). Any path leaving
// the ball is at least that long. Distances 0 and 1 are always exact.
struct CertifiedBall {
  Graph graph;  // induced subgraph on vertices within `radius` of basepoint
  int radius = 0;
  VertexId basepoint;
  std::vector<int> depth;          // by graph vertex index
  std::vector<VertexId> boundary;  // depth == radius with unexplored neighbors

  bool distance_certified(int u, int v, int ball_distance) const {
    if (ball_distance < 0) return false;
    if (ball_distance <= 1) return true;
    return ball_distance < (radius - depth[u]) + (radius - depth[v]);
  }
};

CertifiedBall build_ball(const InfiniteGraphOracle& oracle, int radius);

// Exact distance when the certificate holds, nullopt when a larger radius is
// needed. Throws InputError if either vertex is outside the ball.
std::optional<int> certified_distance(const CertifiedBall& ball,
                                      const VertexId& u, const VertexId& v);
std::optional<int> certified_distance(const InfiniteGraphOracle& oracle,
                                      const VertexId& u, const VertexId& v,
                                      int radius);

// Pairs are judged only where the verdict transfers to the infinite graph:
// a pair counts as resolved when some w in W has certified distances that
// resolve it, and as unresolved when every w has certified distances and
// none resolves it. Anything else is undetermined.
struct BallResolutionCheck {
  int resolved = 0;
  int unresolved = 0;
  int undetermined = 0;
  std::optional<std::pair<VertexId, VertexId>> counterexample;

  bool ok() const { return unresolved == 0; }
};

BallResolutionCheck verify_resolving_on_ball(const CertifiedBall& ball,
                                             const std::vector<VertexId>& w_set,
                                             ResolveMode mode);

// Heuristic lower-bound signal for the number of ends: components of
// B(base, outer) - B(base, inner) that contain an outer-boundary vertex.
int end_count_estimate(const InfiniteGraphOracle& oracle, int inner, int outer);

}  // namespace metricdim
