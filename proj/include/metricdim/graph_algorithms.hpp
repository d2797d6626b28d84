#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

// Shortest-path distances (edge counts) from `source` to every vertex,
// indexed like the graph; -1 marks unreachable vertices.
std::vector<int> bfs_from(const Graph& g, int source);

// Label-level variant; unreachable vertices are absent from the map.
std::map<VertexId, int> bfs_distances(const Graph& g, const VertexId& source);

std::vector<std::vector<int>> all_pairs_distances(const Graph& g);

struct SetDistance {
  int distance = 0;
  std::vector<VertexId> minimizers;  // sorted
};

// d(v, W) = min over w in W of d(v, w), with the set of minimizers.
SetDistance distance_to_set(const Graph& g, const VertexId& v,
                            const std::vector<VertexId>& w_set);

// Vertices of degree >= 3, sorted.
std::vector<VertexId> branch_vertices(const Graph& g);

struct PathEnumeration {
  std::vector<Path> paths;  // lexicographic by vertex sequence
  bool truncated = false;
};

// All simple a--b paths in lexicographic order, truncated at `limit` paths.
// a == b yields the single trivial path [a].
PathEnumeration enumerate_paths(
    const Graph& g, const VertexId& a, const VertexId& b,
    std::size_t limit = std::numeric_limits<std::size_t>::max());

// Given two a--b paths P and Q with the same endpoints, an internal vertex v
// of P that Q avoids, returns a cycle through v's predecessor, v, and v's
// successor on P: follow P between the nearest P-vertices around v that also
// lie on Q, then return along Q.
Cycle cycle_through_vertex(const Graph& g, const Path& p, const Path& q,
                           const VertexId& v);

// A finite vertex set whose removal leaves a forest, by iterated cycle
// destruction: find a cycle by DFS, delete its smallest vertex, repeat.
// Size is at most the cycle-space dimension; minimality is not attempted.
std::vector<VertexId> forest_making_set(const Graph& g);

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);  // union-find, independent of the DFS above
bool is_tree(const Graph& g);

// Components ordered by their smallest contained vertex label.
std::vector<Graph> connected_components(const Graph& g);

// Throw InputError naming the violated clause if `p` is not a path of `g`.
void validate_path(const Graph& g, const Path& p);
void validate_cycle(const Graph& g, const Cycle& c);

}  // namespace metricdim
