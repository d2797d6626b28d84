#include "metricdim/graph.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "metricdim/errors.hpp"

namespace metricdim {

std::ostream& operator<<(std::ostream& os, const VertexId& v) {
  return os << v.str();
}

Graph::Graph(std::vector<VertexId> vertices,
             const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (vertices[i] == vertices[i - 1]) {
      throw InputError("duplicate vertex label: " + vertices[i].str());
    }
  }
  labels_ = std::move(vertices);
  adj_.assign(labels_.size(), {});

  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    const int u = index_of(a);
    const int v = index_of(b);
    if (u == v) throw InputError("self-loop at vertex: " + a.str());
    const auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw InputError("duplicate edge: " + a.str() + " -- " + b.str());
    }
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  edge_count_ = static_cast<int>(seen.size());
}

Graph Graph::from_edges(
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::vector<VertexId> verts;
  for (const auto& [a, b] : edges) {
    verts.push_back(a);
    verts.push_back(b);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  return Graph(std::move(verts), edges);
}

std::optional<int> Graph::find(const VertexId& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

int Graph::index_of(const VertexId& v) const {
  auto idx = find(v);
  if (!idx) throw InputError("vertex not in graph: " + v.str());
  return *idx;
}

std::span<const int> Graph::neighbors(int index) const {
  return adj_[index];
}

std::vector<VertexId> Graph::neighbors(const VertexId& v) const {
  std::vector<VertexId> out;
  for (int n : adj_[index_of(v)]) out.push_back(labels_[n]);
  return out;
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& list : adj_) best = std::max(best, static_cast<int>(list.size()));
  return best;
}

bool Graph::has_edge(int u, int v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<std::pair<VertexId, VertexId>> Graph::edge_list() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (int u = 0; u < order(); ++u) {
    for (int v : adj_[u]) {
      if (u < v) out.emplace_back(labels_[u], labels_[v]);
    }
  }
  return out;  // already lexicographic: index order equals label order
}

Graph Graph::induced(const std::vector<int>& keep) const {
  std::vector<char> in(labels_.size(), 0);
  std::vector<VertexId> verts;
  for (int i : keep) {
    in[i] = 1;
    verts.push_back(labels_[i]);
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u : keep) {
    for (int v : adj_[u]) {
      if (u < v && in[v]) edges.emplace_back(labels_[u], labels_[v]);
    }
  }
  return Graph(std::move(verts), edges);
}

Graph Graph::without_vertices(const std::vector<VertexId>& removed) const {
  std::vector<char> drop(labels_.size(), 0);
  for (const auto& v : removed) drop[index_of(v)] = 1;
  std::vector<int> keep;
  for (int i = 0; i < order(); ++i) {
    if (!drop[i]) keep.push_back(i);
  }
  return induced(keep);
}

}  // namespace metricdim
