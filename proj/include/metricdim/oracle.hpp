#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

// Facts a generator declares about the infinite graph it presents. End count
// and cycle structure are not decidable from local queries, so classifiers
// only ever use what is declared here.
struct OracleMetadata {
  std::string name;
  std::optional<int> end_count;
  bool end_count_at_least = false;  // end_count is a lower bound
  std::optional<bool> finicyclic;
  std::optional<int> branch_count;      // finite count when set
  bool branch_count_infinite = false;   // overrides branch_count
  // Distinguished ray (index -> vertex), declared by generators whose spine
  // carries infinitely many branch vertices.
  std::function<VertexId(int)> spine;
};

// Lazy adjacency view of a locally finite infinite graph. Queries must be
// pure: same vertex, same neighbor list.
class InfiniteGraphOracle {
 public:
  using NeighborFn = std::function<std::vector<VertexId>(const VertexId&)>;

  InfiniteGraphOracle(VertexId basepoint, NeighborFn fn,
                      OracleMetadata metadata = {});

  // Sorted, deduplicated, self-loop-free.
  std::vector<VertexId> neighbors(const VertexId& v) const;

  const VertexId& basepoint() const { return basepoint_; }
  const OracleMetadata& metadata() const { return metadata_; }

 private:
  VertexId basepoint_;
  NeighborFn fn_;
  OracleMetadata metadata_;
};

// One-way infinite path v0000, v0001, ...
InfiniteGraphOracle make_ray();

// Two-way infinite path ..., v-0001, v+0000, v+0001, ...
InfiniteGraphOracle make_double_ray();

// k >= 3 rays sharing the initial vertex "c"; arm i vertex j is "aII-JJJJ".
InfiniteGraphOracle make_spider(int k);

// Two infinite rails with a rung at every position; the rail starts are
// labelled "v1" (top) and "v2" (bottom).
InfiniteGraphOracle make_ladder();

// Ladder with every rail edge subdivided once and rungs intact; rail
// coordinates double so rungs sit at even positions.
InfiniteGraphOracle make_broken_ladder();

// Rooted infinite binary tree, heap-numbered nodes "nNNNNNN".
InfiniteGraphOracle make_binary_tree();

// Ray ("sNNNN" spine) with a pendant path of `pendant_length` vertices
// hanging from every spine vertex; realizes a ray with infinitely many
// branch vertices.
InfiniteGraphOracle make_comb(int pendant_length);

// Dispatch by generator name; `param` is k for k_spider and the pendant
// length for comb, ignored otherwise.
InfiniteGraphOracle make_generator(const std::string& name, int param = 0);

}  // namespace metricdim
