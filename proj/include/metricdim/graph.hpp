#pragma once

#include <compare>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace metricdim {

// Vertex label. Labels produced by infinite-graph generators encode
// structured coordinates with zero padding, so lexicographic order on the
// serialized string is the tie-breaking order used everywhere.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::string label) : label_(std::move(label)) {}

  const std::string& str() const { return label_; }
  bool empty() const { return label_.empty(); }

  auto operator<=>(const VertexId&) const = default;

 private:
  std::string label_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

// Finite undirected simple graph, immutable after construction.
// Vertices are stored sorted by label; a vertex index is its rank in that
// order, so index comparisons agree with label comparisons. Connectivity is
// not an invariant; operations that need it check it.
class Graph {
 public:
  Graph() = default;
  Graph(std::vector<VertexId> vertices,
        const std::vector<std::pair<VertexId, VertexId>>& edges);

  // Collects endpoint labels; isolated vertices must use the main ctor.
  static Graph from_edges(
      const std::vector<std::pair<VertexId, VertexId>>& edges);

  int order() const { return static_cast<int>(labels_.size()); }
  int edge_count() const { return edge_count_; }

  bool contains(const VertexId& v) const { return find(v).has_value(); }
  std::optional<int> find(const VertexId& v) const;
  int index_of(const VertexId& v) const;  // throws InputError if absent

  const VertexId& label(int index) const { return labels_[index]; }
  const std::vector<VertexId>& vertices() const { return labels_; }

  std::span<const int> neighbors(int index) const;
  std::vector<VertexId> neighbors(const VertexId& v) const;
  int degree(int index) const { return static_cast<int>(adj_[index].size()); }
  int max_degree() const;
  bool has_edge(int u, int v) const;

  // Edges as [smaller label, larger label] pairs in lexicographic order.
  std::vector<std::pair<VertexId, VertexId>> edge_list() const;

  // Induced subgraph on the given vertex indices.
  Graph induced(const std::vector<int>& keep) const;
  Graph without_vertices(const std::vector<VertexId>& removed) const;

 private:
  std::vector<VertexId> labels_;        // sorted
  std::vector<std::vector<int>> adj_;   // sorted neighbor indices
  int edge_count_ = 0;
};

// Open path: consecutive vertices adjacent in the host graph, no repeats.
struct Path {
  std::vector<VertexId> vertices;
  int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// Cyclically ordered vertex list, no repeats, length >= 3.
struct Cycle {
  std::vector<VertexId> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

}  // namespace metricdim
