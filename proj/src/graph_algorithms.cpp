#include "metricdim/graph_algorithms.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "metricdim/errors.hpp"

namespace metricdim {

std::vector<int> bfs_from(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    for (int v : g.neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

std::map<VertexId, int> bfs_distances(const Graph& g, const VertexId& source) {
  const auto dist = bfs_from(g, g.index_of(source));
  std::map<VertexId, int> out;
  for (int i = 0; i < g.order(); ++i) {
    if (dist[i] >= 0) out.emplace(g.label(i), dist[i]);
  }
  return out;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(g.order());
  for (int i = 0; i < g.order(); ++i) out.push_back(bfs_from(g, i));
  return out;
}

SetDistance distance_to_set(const Graph& g, const VertexId& v,
                            const std::vector<VertexId>& w_set) {
  if (w_set.empty()) throw InputError("distance to empty set is undefined");
  const auto dist = bfs_from(g, g.index_of(v));
  int best = -1;
  std::vector<int> mins;
  for (const auto& w : w_set) {
    const int i = g.index_of(w);
    if (dist[i] < 0) continue;  // unreachable member
    if (best < 0 || dist[i] < best) {
      best = dist[i];
      mins.assign(1, i);
    } else if (dist[i] == best) {
      mins.push_back(i);
    }
  }
  if (best < 0) throw InputError("no member of the set is reachable from " + v.str());
  std::sort(mins.begin(), mins.end());
  mins.erase(std::unique(mins.begin(), mins.end()), mins.end());
  SetDistance result;
  result.distance = best;
  for (int i : mins) result.minimizers.push_back(g.label(i));
  return result;
}

std::vector<VertexId> branch_vertices(const Graph& g) {
  std::vector<VertexId> out;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) >= 3) out.push_back(g.label(i));
  }
  return out;
}

namespace {

void enumerate_paths_rec(const Graph& g, int current, int target,
                         std::vector<int>& stack, std::vector<char>& used,
                         std::size_t limit, PathEnumeration& out) {
  if (out.truncated) return;
  if (current == target) {
    if (out.paths.size() == limit) {
      out.truncated = true;
      return;
    }
    Path p;
    for (int i : stack) p.vertices.push_back(g.label(i));
    out.paths.push_back(std::move(p));
    return;
  }
  for (int next : g.neighbors(current)) {
    if (used[next]) continue;
    used[next] = 1;
    stack.push_back(next);
    enumerate_paths_rec(g, next, target, stack, used, limit, out);
    stack.pop_back();
    used[next] = 0;
    if (out.truncated) return;
  }
}

}  // namespace

PathEnumeration enumerate_paths(const Graph& g, const VertexId& a,
                                const VertexId& b, std::size_t limit) {
  const int src = g.index_of(a);
  const int dst = g.index_of(b);
  PathEnumeration out;
  if (src == dst) {
    if (limit == 0) {
      out.truncated = true;
      return out;
    }
    out.paths.push_back(Path{{g.label(src)}});
    return out;
  }
  std::vector<int> stack{src};
  std::vector<char> used(g.order(), 0);
  used[src] = 1;
  enumerate_paths_rec(g, src, dst, stack, used, limit, out);
  return out;
}

void validate_path(const Graph& g, const Path& p) {
  if (p.vertices.empty()) throw InputError("path is empty");
  std::set<VertexId> seen;
  for (const auto& v : p.vertices) {
    g.index_of(v);
    if (!seen.insert(v).second) {
      throw InputError("path repeats vertex: " + v.str());
    }
  }
  for (std::size_t i = 1; i < p.vertices.size(); ++i) {
    if (!g.has_edge(g.index_of(p.vertices[i - 1]), g.index_of(p.vertices[i]))) {
      throw InputError("path vertices not adjacent: " + p.vertices[i - 1].str() +
                       " -- " + p.vertices[i].str());
    }
  }
}

void validate_cycle(const Graph& g, const Cycle& c) {
  if (c.vertices.size() < 3) throw InputError("cycle shorter than 3");
  std::set<VertexId> seen;
  for (const auto& v : c.vertices) {
    g.index_of(v);
    if (!seen.insert(v).second) {
      throw InputError("cycle repeats vertex: " + v.str());
    }
  }
  const std::size_t n = c.vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = c.vertices[i];
    const auto& v = c.vertices[(i + 1) % n];
    if (!g.has_edge(g.index_of(u), g.index_of(v))) {
      throw InputError("cycle vertices not adjacent: " + u.str() + " -- " + v.str());
    }
  }
}

Cycle cycle_through_vertex(const Graph& g, const Path& p, const Path& q,
                           const VertexId& v) {
  validate_path(g, p);
  validate_path(g, q);
  if (p.vertices.front() != q.vertices.front() ||
      p.vertices.back() != q.vertices.back()) {
    throw InputError("P and Q must have the same endpoints");
  }
  const auto it = std::find(p.vertices.begin(), p.vertices.end(), v);
  if (it == p.vertices.begin() || it == p.vertices.end() ||
      it == p.vertices.end() - 1) {
    throw InputError("v must be an internal vertex of P");
  }
  if (std::find(q.vertices.begin(), q.vertices.end(), v) != q.vertices.end()) {
    throw InputError("Q must not contain v");
  }

  std::set<VertexId> on_q(q.vertices.begin(), q.vertices.end());
  const std::size_t pos_v = static_cast<std::size_t>(it - p.vertices.begin());
  std::size_t lo = pos_v;  // nearest predecessor of v on P that lies on Q
  while (!on_q.count(p.vertices[--lo])) {
  }
  std::size_t hi = pos_v;  // nearest successor of v on P that lies on Q
  while (!on_q.count(p.vertices[++hi])) {
  }

  Cycle cycle;
  for (std::size_t i = lo; i <= hi; ++i) cycle.vertices.push_back(p.vertices[i]);

  const auto q_pos = [&](const VertexId& x) {
    return static_cast<std::size_t>(
        std::find(q.vertices.begin(), q.vertices.end(), x) - q.vertices.begin());
  };
  const std::size_t q_lo = q_pos(p.vertices[lo]);
  const std::size_t q_hi = q_pos(p.vertices[hi]);
  if (q_hi > q_lo) {
    for (std::size_t i = q_hi - 1; i > q_lo; --i) cycle.vertices.push_back(q.vertices[i]);
  } else {
    for (std::size_t i = q_hi + 1; i < q_lo; ++i) cycle.vertices.push_back(q.vertices[i]);
  }
  validate_cycle(g, cycle);
  return cycle;
}

namespace {

// Cycle as vertex indices, or empty when `alive` induces a forest. DFS with
// explicit stack; any edge to a gray non-parent vertex closes a cycle.
std::vector<int> find_cycle(const Graph& g, const std::vector<char>& alive) {
  enum : char { White, Gray, Black };
  std::vector<char> color(g.order(), White);
  std::vector<int> parent(g.order(), -1);

  for (int root = 0; root < g.order(); ++root) {
    if (!alive[root] || color[root] != White) continue;
    std::vector<std::pair<int, std::size_t>> stack{{root, 0}};
    color[root] = Gray;
    while (!stack.empty()) {
      auto& [u, next] = stack.back();
      const auto nbrs = g.neighbors(u);
      bool descended = false;
      while (next < nbrs.size()) {
        const int w = nbrs[next++];
        if (!alive[w] || w == parent[u]) continue;
        if (color[w] == Gray) {
          std::vector<int> cycle{u};
          for (int x = u; x != w; x = parent[x]) cycle.push_back(parent[x]);
          return cycle;
        }
        if (color[w] == White) {
          color[w] = Gray;
          parent[w] = u;
          stack.emplace_back(w, 0);
          descended = true;
          break;
        }
      }
      if (!descended && next >= nbrs.size()) {
        color[u] = Black;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace

std::vector<VertexId> forest_making_set(const Graph& g) {
  std::vector<char> alive(g.order(), 1);
  std::vector<VertexId> removed;
  for (;;) {
    auto cycle = find_cycle(g, alive);
    if (cycle.empty()) break;
    const int victim = *std::min_element(cycle.begin(), cycle.end());
    alive[victim] = 0;
    removed.push_back(g.label(victim));
  }
  std::sort(removed.begin(), removed.end());
  return removed;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  const auto dist = bfs_from(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool is_acyclic(const Graph& g) {
  std::vector<int> root(g.order());
  std::iota(root.begin(), root.end(), 0);
  const auto find_root = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  for (const auto& [a, b] : g.edge_list()) {
    const int ra = find_root(g.index_of(a));
    const int rb = find_root(g.index_of(b));
    if (ra == rb) return false;
    root[ra] = rb;
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() > 0 && is_connected(g) && g.edge_count() == g.order() - 1;
}

std::vector<Graph> connected_components(const Graph& g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Graph> out;
  for (int root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<int> members;
    std::deque<int> queue{root};
    seen[root] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      members.push_back(u);
      for (int v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(g.induced(members));
  }
  return out;  // roots ascend, so components are ordered by smallest vertex
}

}  // namespace metricdim
