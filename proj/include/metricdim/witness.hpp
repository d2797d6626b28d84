#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "metricdim/oracle.hpp"
#include "metricdim/presentation.hpp"
#include "metricdim/resolve.hpp"

namespace metricdim {

// Machine-checkable evidence that no member of W resolves the pair (u, v).
// Every recorded distance is certified on a ball of the stated radius, so
// the verdict transfers to the infinite graph.
struct WitnessCertificate {
  ResolveMode mode = ResolveMode::Strong;
  VertexId u, v;
  int distance_uv = 0;
  int radius = 0;
  // Strong witnesses: the separator the search augmented W with, and the
  // max pairwise distance m inside W union separator.
  std::vector<VertexId> separator;
  std::optional<int> max_internal_distance;
  // Weak witnesses: the spine index threshold past which the pair was taken.
  std::optional<int> spine_threshold;
  struct Entry {
    VertexId w;
    int distance_to_u = 0;
    int distance_to_v = 0;
  };
  std::vector<Entry> entries;  // one per member of W
};

// For a presentation with at least two ends: a pair (u, v), one vertex deep
// on each of the first two pendant rays, that no w in W strongly resolves.
// Follows the separator argument: with m the max distance inside W plus the
// core, any u, v farther than m from that set satisfy
// d(u,w), d(v,w) < d(u,v) for every w in W. Throws InfeasibleError for
// one-ended presentations.
WitnessCertificate strong_unresolved_witness(const FinicyclicPresentation& p,
                                             const std::vector<VertexId>& w_set);

// For an oracle declaring a spine ray with infinitely many branch vertices
// (the comb family): a pair (next spine vertex, pendant neighbor) past every
// member of W's projection onto the spine, equidistant from all of W.
WitnessCertificate weak_unresolved_witness(const InfiniteGraphOracle& oracle,
                                           const std::vector<VertexId>& w_set);

nlohmann::json witness_to_json(const WitnessCertificate& cert);

}  // namespace metricdim
