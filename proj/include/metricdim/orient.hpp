#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metricdim/ball.hpp"
#include "metricdim/graph.hpp"
#include "metricdim/oracle.hpp"

namespace metricdim {

// Length-h path from w in which vertex i sits at certified distance i from
// w (which makes every subpath a shortest path), extendable to length h+1
// inside the ball. A finite stand-in for a geodesic ray anchored at w.
struct GeodesicRayPrefix {
  std::vector<VertexId> vertices;  // initial vertex first
  bool certified = false;          // every position's distance is certified
};

std::vector<GeodesicRayPrefix> geodesic_prefixes(const CertifiedBall& ball,
                                                 const VertexId& w, int horizon);
std::vector<GeodesicRayPrefix> geodesic_prefixes(const InfiniteGraphOracle& oracle,
                                                 const VertexId& w, int horizon,
                                                 int radius);

// Partial orientation of the ball graph: directed and undirected edges
// partition the edge set; undirected edges are traversable both ways.
struct OrientedGraph {
  Graph base;
  std::vector<std::pair<VertexId, VertexId>> directed;    // u -> v
  std::vector<std::pair<VertexId, VertexId>> undirected;  // [min, max]
};

// An edge is directed u -> v when some certified prefix anchored in W
// traverses it that way and no prefix traverses it the other way; edges on
// no prefix, or with disagreeing prefixes, stay undirected.
OrientedGraph geodesic_orientation(const CertifiedBall& ball,
                                   const std::vector<VertexId>& w_set,
                                   int horizon);
OrientedGraph geodesic_orientation(const InfiniteGraphOracle& oracle,
                                   const std::vector<VertexId>& w_set,
                                   int horizon, int radius);

// Unordered pairs with no directed path in either direction, lexicographic.
std::vector<std::pair<VertexId, VertexId>> find_bad_pairs(const OrientedGraph& og);

struct ExplorationEntry {
  std::vector<VertexId> w_set;
  std::vector<std::pair<VertexId, VertexId>> bad_pairs;
  BallResolutionCheck strong_check;
};

struct ExplorationReport {
  int horizon = 0;
  int radius = 0;
  std::vector<ExplorationEntry> entries;  // sorted by W
};

// For each W: does the orientation have a bad pair, and does W strongly
// resolve the certified pairs of the ball? Evidence, not proof.
ExplorationReport explore_bad_pairs(const InfiniteGraphOracle& oracle,
                                    std::vector<std::vector<VertexId>> family,
                                    int horizon, int radius);

std::string oriented_to_dot(const OrientedGraph& og);
nlohmann::json oriented_to_json(const OrientedGraph& og);

// Bad pairs plus horizon-limited flags for pairs touching the ball boundary.
nlohmann::json bad_pairs_report(const OrientedGraph& og, const CertifiedBall& ball,
                                const std::vector<VertexId>& w_set, int horizon);

nlohmann::json exploration_to_json(const ExplorationReport& report);

}  // namespace metricdim
