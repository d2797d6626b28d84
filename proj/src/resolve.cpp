#include "metricdim/resolve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"

namespace metricdim {

std::string to_string(ResolveMode mode) {
  return mode == ResolveMode::Weak ? "weak" : "strong";
}

ResolveMode resolve_mode_from_string(const std::string& s) {
  if (s == "weak") return ResolveMode::Weak;
  if (s == "strong") return ResolveMode::Strong;
  throw InputError("unknown resolve mode: " + s);
}

std::string to_string(DimensionMethod method) {
  switch (method) {
    case DimensionMethod::ExactSearch: return "exact-search";
    case DimensionMethod::TreeFormula: return "tree-formula";
    case DimensionMethod::Classifier: return "classifier";
  }
  return "exact-search";
}

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw InputError("metric undefined: graph is disconnected");
}

bool weak_by_dist(int dwu, int dwv) { return dwu != dwv; }

bool strong_by_dist(int dwu, int dwv, int duv) {
  return dwu == dwv + duv || dwv == dwu + duv;
}

// Fixed-capacity bitset over pair indices.
struct PairBits {
  std::vector<std::uint64_t> words;

  explicit PairBits(std::size_t bits = 0) : words((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void or_with(const PairBits& o) {
    for (std::size_t i = 0; i < words.size(); ++i) words[i] |= o.words[i];
  }
  bool covers_all(const PairBits& universe) const {
    for (std::size_t i = 0; i < words.size(); ++i) {
      if ((words[i] & universe.words[i]) != universe.words[i]) return false;
    }
    return true;
  }
};

struct CoverSearch {
  int n = 0;
  PairBits universe;
  std::vector<PairBits> per_vertex;
  std::vector<PairBits> suffix;  // OR of per_vertex[i..n)

  // Lexicographically least k-subset of vertex indices covering all pairs.
  std::optional<std::vector<int>> find(int k) {
    std::vector<int> chosen;
    PairBits covered(universe.words.size() * 64);
    if (search(0, k, chosen, covered)) return chosen;
    return std::nullopt;
  }

  bool search(int start, int remaining, std::vector<int>& chosen,
              const PairBits& covered) {
    if (remaining == 0) return covered.covers_all(universe);
    if (n - start < remaining) return false;
    // Prune: some pair must stay coverable by the remaining candidates.
    PairBits reach = covered;
    reach.or_with(suffix[start]);
    if (!reach.covers_all(universe)) return false;
    for (int v = start; v <= n - remaining; ++v) {
      PairBits next = covered;
      next.or_with(per_vertex[v]);
      chosen.push_back(v);
      if (search(v + 1, remaining - 1, chosen, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

CoverSearch build_cover_search(const Graph& g, ResolveMode mode,
                               const std::vector<std::vector<int>>& dist) {
  const int n = g.order();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  CoverSearch cs;
  cs.n = n;
  cs.universe = PairBits(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) cs.universe.set(i);
  cs.per_vertex.assign(n, PairBits(pairs.size()));
  for (int w = 0; w < n; ++w) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      const auto [u, v] = pairs[i];
      const bool hit = mode == ResolveMode::Weak
                           ? weak_by_dist(dist[w][u], dist[w][v])
                           : strong_by_dist(dist[w][u], dist[w][v], dist[u][v]);
      if (hit) cs.per_vertex[w].set(i);
    }
  }
  cs.suffix.assign(n + 1, PairBits(pairs.size()));
  for (int v = n - 1; v >= 0; --v) {
    cs.suffix[v] = cs.suffix[v + 1];
    cs.suffix[v].or_with(cs.per_vertex[v]);
  }
  return cs;
}

DimensionResult subset_search(const Graph& g, ResolveMode mode, int vertex_limit) {
  require_connected(g);
  if (g.order() > vertex_limit) {
    throw SizeLimitError(
        "graph order " + std::to_string(g.order()) + " exceeds subset-search limit " +
        std::to_string(vertex_limit) +
        (mode == ResolveMode::Weak ? "; raise the limit or use the tree formula"
                                   : "; raise the limit"));
  }
  const auto dist = all_pairs_distances(g);
  auto cs = build_cover_search(g, mode, dist);
  for (int k = 0; k <= g.order(); ++k) {
    if (mode == ResolveMode::Weak && !satisfies_degree_bound(g, k)) continue;
    if (auto hit = cs.find(k)) {
      ResolvingSet witness;
      for (int idx : *hit) witness.vertices.push_back(g.label(idx));
      witness.mode = mode;
      witness.verified = is_resolving_set(g, witness.vertices, mode).resolving;
      DimensionResult result;
      result.value = k;
      result.witness = std::move(witness);
      result.method = DimensionMethod::ExactSearch;
      return result;
    }
  }
  throw std::logic_error("subset search exhausted without a resolving set");
}

}  // namespace

bool weakly_resolves(const Graph& g, const VertexId& w, const VertexId& u,
                     const VertexId& v) {
  require_connected(g);
  const auto dw = bfs_from(g, g.index_of(w));
  return weak_by_dist(dw[g.index_of(u)], dw[g.index_of(v)]);
}

bool strongly_resolves(const Graph& g, const VertexId& w, const VertexId& u,
                       const VertexId& v) {
  require_connected(g);
  const auto dw = bfs_from(g, g.index_of(w));
  const auto du = bfs_from(g, g.index_of(u));
  return strong_by_dist(dw[g.index_of(u)], dw[g.index_of(v)],
                        du[g.index_of(v)]);
}

ResolutionCheck is_resolving_set(const Graph& g,
                                 const std::vector<VertexId>& w_set,
                                 ResolveMode mode) {
  require_connected(g);
  std::vector<int> w_idx;
  for (const auto& w : w_set) w_idx.push_back(g.index_of(w));
  std::sort(w_idx.begin(), w_idx.end());
  w_idx.erase(std::unique(w_idx.begin(), w_idx.end()), w_idx.end());

  std::map<int, std::vector<int>> dist_from;
  for (int w : w_idx) dist_from[w] = bfs_from(g, w);

  for (int u = 0; u < g.order(); ++u) {
    // Strong mode needs d(u,v); reuse the row when u happens to be in W.
    std::vector<int> du;
    if (mode == ResolveMode::Strong) {
      auto it = dist_from.find(u);
      du = it != dist_from.end() ? it->second : bfs_from(g, u);
    }
    for (int v = u + 1; v < g.order(); ++v) {
      bool hit = false;
      for (int w : w_idx) {
        const auto& dw = dist_from[w];
        if (mode == ResolveMode::Weak ? weak_by_dist(dw[u], dw[v])
                                      : strong_by_dist(dw[u], dw[v], du[v])) {
          hit = true;
          break;
        }
      }
      if (!hit) {
        ResolutionCheck out;
        out.resolving = false;
        out.counterexample = {{g.label(u), g.label(v)}};
        return out;
      }
    }
  }
  return ResolutionCheck{true, std::nullopt};
}

DimensionResult metric_dimension_exact(const Graph& g, int vertex_limit) {
  return subset_search(g, ResolveMode::Weak, vertex_limit);
}

Graph mutual_max_distance_graph(const Graph& g) {
  require_connected(g);
  const auto dist = all_pairs_distances(g);
  const auto maximally_distant_from = [&](int u, int v) {
    // u maximally distant from v: no neighbor of u is farther from v.
    for (int up : g.neighbors(u)) {
      if (dist[up][v] > dist[u][v]) return false;
    }
    return true;
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (maximally_distant_from(u, v) && maximally_distant_from(v, u)) {
        edges.emplace_back(g.label(u), g.label(v));
      }
    }
  }
  return Graph(g.vertices(), edges);
}

namespace {

bool vc_at_most(const Graph& g, std::vector<char>& removed, int budget) {
  int eu = -1, ev = -1;
  for (int u = 0; u < g.order() && eu < 0; ++u) {
    if (removed[u]) continue;
    for (int v : g.neighbors(u)) {
      if (v > u && !removed[v]) {
        eu = u;
        ev = v;
        break;
      }
    }
  }
  if (eu < 0) return true;  // no edge uncovered
  if (budget == 0) return false;
  for (int pick : {eu, ev}) {
    removed[pick] = 1;
    if (vc_at_most(g, removed, budget - 1)) {
      removed[pick] = 0;
      return true;
    }
    removed[pick] = 0;
  }
  return false;
}

}  // namespace

int minimum_vertex_cover_size(const Graph& g) {
  std::vector<char> removed(g.order(), 0);
  for (int k = 0; k <= g.order(); ++k) {
    if (vc_at_most(g, removed, k)) return k;
  }
  return g.order();
}

DimensionResult strong_metric_dimension_exact(const Graph& g, int vertex_limit) {
  auto result = subset_search(g, ResolveMode::Strong, vertex_limit);
  const int by_cover = minimum_vertex_cover_size(mutual_max_distance_graph(g));
  if (by_cover != *result.value) {
    throw std::logic_error(
        "strong dimension mismatch: subset search found " +
        std::to_string(*result.value) + ", vertex cover found " +
        std::to_string(by_cover));
  }
  return result;
}

namespace {

void require_tree(const Graph& g) {
  if (!is_tree(g)) throw InputError("not a tree");
}

std::vector<int> leaves_of(const Graph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.order(); ++i) {
    if (g.degree(i) == 1) out.push_back(i);
  }
  return out;
}

// Walk from a leaf along its stem; the first vertex of degree >= 3 is the
// strictly nearest branch vertex (ties are impossible in a tree).
int nearest_branch_vertex(const Graph& g, int leaf) {
  int prev = -1, cur = leaf;
  while (g.degree(cur) < 3) {
    int next = -1;
    for (int nb : g.neighbors(cur)) {
      if (nb != prev) {
        next = nb;
        break;
      }
    }
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

DimensionResult tree_weak_dimension(const Graph& tree) {
  require_tree(tree);
  DimensionResult result;
  result.method = DimensionMethod::TreeFormula;

  if (tree.order() == 1) {
    result.value = 0;
    result.witness = ResolvingSet{{}, ResolveMode::Weak, true};
    return result;
  }
  if (tree.max_degree() <= 2) {  // path
    ResolvingSet witness;
    witness.vertices.push_back(tree.label(leaves_of(tree).front()));
    witness.mode = ResolveMode::Weak;
    witness.verified = is_resolving_set(tree, witness.vertices, ResolveMode::Weak).resolving;
    result.value = 1;
    result.witness = std::move(witness);
    return result;
  }

  // Group leaves by their nearest branch vertex; the witness keeps every
  // leaf except one per group.
  std::map<int, std::vector<int>> groups;
  for (int leaf : leaves_of(tree)) {
    groups[nearest_branch_vertex(tree, leaf)].push_back(leaf);
  }
  ResolvingSet witness;
  witness.mode = ResolveMode::Weak;
  int leaf_count = 0;
  for (auto& [branch, leafs] : groups) {
    leaf_count += static_cast<int>(leafs.size());
    std::sort(leafs.begin(), leafs.end());
    for (std::size_t i = 0; i + 1 < leafs.size(); ++i) {
      witness.vertices.push_back(tree.label(leafs[i]));
    }
  }
  std::sort(witness.vertices.begin(), witness.vertices.end());
  result.value = leaf_count - static_cast<int>(groups.size());
  witness.verified = is_resolving_set(tree, witness.vertices, ResolveMode::Weak).resolving;
  if (!witness.verified || static_cast<int>(witness.vertices.size()) != *result.value) {
    throw std::logic_error("tree formula witness failed verification");
  }
  result.witness = std::move(witness);
  return result;
}

DimensionResult tree_strong_dimension(const Graph& tree) {
  require_tree(tree);
  DimensionResult result;
  result.method = DimensionMethod::TreeFormula;
  if (tree.order() == 1) {
    result.value = 0;
    result.witness = ResolvingSet{{}, ResolveMode::Strong, true};
    return result;
  }
  std::vector<VertexId> leaf_labels;
  for (int leaf : leaves_of(tree)) leaf_labels.push_back(tree.label(leaf));
  leaf_labels.pop_back();  // drop the lexicographically greatest leaf
  result.value = static_cast<int>(leaf_labels.size());
  ResolvingSet witness{std::move(leaf_labels), ResolveMode::Strong, false};
  witness.verified = is_resolving_set(tree, witness.vertices, ResolveMode::Strong).resolving;
  if (!witness.verified) {
    throw std::logic_error("leaf witness failed strong verification");
  }
  result.witness = std::move(witness);
  return result;
}

bool satisfies_degree_bound(const Graph& g, int k) {
  long long bound = 1;  // 3^k, capped well above any desk-scale degree
  for (int i = 0; i < k && bound <= (1LL << 40); ++i) bound *= 3;
  return g.max_degree() <= bound - 1;
}

}  // namespace metricdim
