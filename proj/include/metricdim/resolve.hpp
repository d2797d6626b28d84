#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "metricdim/graph.hpp"

namespace metricdim {

enum class ResolveMode { Weak, Strong };

std::string to_string(ResolveMode mode);
ResolveMode resolve_mode_from_string(const std::string& s);

// w weakly resolves u,v when d(u,w) != d(v,w). Requires a connected graph.
bool weakly_resolves(const Graph& g, const VertexId& w, const VertexId& u,
                     const VertexId& v);

// w strongly resolves u,v when v lies on a shortest u--w path or u lies on a
// shortest v--w path, checked through the distance identity
// d(w,u) = d(w,v) + d(v,u) or d(w,v) = d(w,u) + d(u,v).
bool strongly_resolves(const Graph& g, const VertexId& w, const VertexId& u,
                       const VertexId& v);

struct ResolutionCheck {
  bool resolving = false;
  // Lexicographically least unresolved pair when not resolving.
  std::optional<std::pair<VertexId, VertexId>> counterexample;
};

ResolutionCheck is_resolving_set(const Graph& g,
                                 const std::vector<VertexId>& w_set,
                                 ResolveMode mode);

struct ResolvingSet {
  std::vector<VertexId> vertices;  // sorted
  ResolveMode mode = ResolveMode::Weak;
  bool verified = false;  // set only after an is_resolving_set pass
};

enum class DimensionMethod { ExactSearch, TreeFormula, Classifier };

std::string to_string(DimensionMethod method);

struct DimensionResult {
  std::optional<int> value;  // nullopt means infinite
  std::optional<ResolvingSet> witness;
  DimensionMethod method = DimensionMethod::ExactSearch;
};

inline constexpr int kDefaultSubsetSearchLimit = 16;

// Minimum weak resolving set by increasing-size subset search over the
// pair-coverage formulation. Ties break to the lexicographically least
// witness. Throws SizeLimitError above `vertex_limit` vertices.
DimensionResult metric_dimension_exact(
    const Graph& g, int vertex_limit = kDefaultSubsetSearchLimit);

// Strong dimension computed two ways and cross-checked: subset search with
// the strong predicate, and a minimum vertex cover of the mutual-maximal-
// distance graph. Disagreement throws std::logic_error.
DimensionResult strong_metric_dimension_exact(
    const Graph& g, int vertex_limit = kDefaultSubsetSearchLimit);

// Vertices u,v adjacent iff each is maximally distant from the other:
// d(u,v) >= d(u',v) for every neighbor u' of u, and symmetrically.
Graph mutual_max_distance_graph(const Graph& g);

int minimum_vertex_cover_size(const Graph& g);

// Weak dimension of a tree: 1 for paths, otherwise (number of leaves) minus
// (number of branch vertices that are the strictly nearest branch vertex of
// some leaf). The returned witness is verified.
DimensionResult tree_weak_dimension(const Graph& tree);

// Strong dimension of a tree: (number of leaves) - 1; witness is every leaf
// except the lexicographically greatest.
DimensionResult tree_strong_dimension(const Graph& tree);

// True iff max degree <= 3^k - 1; a resolving set of size k forces this, so
// a violation is a lower-bound filter for subset search.
bool satisfies_degree_bound(const Graph& g, int k);

}  // namespace metricdim
