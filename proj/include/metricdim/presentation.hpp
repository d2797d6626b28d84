#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "metricdim/graph.hpp"
#include "metricdim/oracle.hpp"

namespace metricdim {

// Finite connected core plus one pendant ray per attachment entry, glued at
// that core vertex (duplicates allowed). Realizations are exactly the
// infinite finicyclic graphs with finitely many branch vertices, so end
// count and cycle structure are computable from the presentation itself.
struct FinicyclicPresentation {
  Graph core;
  std::vector<VertexId> ray_attachments;
};

void validate(const FinicyclicPresentation& p);

// Vertex j (>= 1) of the pendant ray with 1-based attachment index m.
VertexId ray_vertex(int attachment_index, int j);

// Core vertices whose realized degree (core degree + attached rays) is >= 3.
std::vector<VertexId> realized_branch_vertices(const FinicyclicPresentation& p);

InfiniteGraphOracle realize(const FinicyclicPresentation& p);

enum class Tri { Yes, No, Unknown };
std::string to_string(Tri t);

struct ClassificationReport {
  Tri weak_dimension_finite = Tri::Unknown;
  Tri strong_dimension_finite = Tri::Unknown;
  std::optional<int> end_count;
  bool end_count_at_least = false;
  std::optional<int> branch_count;
  bool branch_count_infinite = false;
  // (claim, rule id) pairs naming the facts behind each verdict.
  std::vector<std::pair<std::string, std::string>> justification;
};

ClassificationReport classify(const FinicyclicPresentation& p);

// Metadata-driven variant for arbitrary oracles; answers Unknown wherever
// the declared structure does not settle the question.
ClassificationReport classify(const InfiniteGraphOracle& oracle);

// Branch vertices and all their realized neighbors (finite weak resolving
// set); paths, rays, double rays and cycles get their known small sets.
std::vector<VertexId> construct_weak_resolving_set(const FinicyclicPresentation& p);

// Finite strong resolving set for one-ended presentations: the partition's
// removed set, every finite path component, and the residual ray's initial
// vertex. Throws InfeasibleError when the presentation has several ends.
std::vector<VertexId> construct_strong_resolving_set(const FinicyclicPresentation& p);

struct ResidualComponent {
  enum class Kind { Path, Ray, DoubleRay };
  Kind kind = Kind::Path;
  std::vector<VertexId> finite_vertices;  // surviving core vertices, sorted
  std::vector<VertexId> ray_starts;       // first vertex of each pendant ray
};

std::string to_string(ResidualComponent::Kind kind);

struct Partition {
  std::vector<VertexId> removed;  // cycle-hitting set of the core + branch vertices
  std::vector<ResidualComponent> components;  // ordered by smallest vertex
};

// Removing `removed` from the realized graph leaves finitely many
// components, each a path, a ray, or a double ray; a double ray can only
// occur as the sole component.
Partition partition_components(const FinicyclicPresentation& p);

// {"core": <graph JSON>, "rays": [attachment labels...]}
FinicyclicPresentation presentation_from_json(const nlohmann::json& j);
nlohmann::json presentation_to_json(const FinicyclicPresentation& p);
FinicyclicPresentation load_presentation(const std::filesystem::path& path);

nlohmann::json classification_to_json(const ClassificationReport& report);
nlohmann::json partition_to_json(const Partition& partition);

}  // namespace metricdim
