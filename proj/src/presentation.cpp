#include "metricdim/presentation.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>

#include "label_format.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"
#include "metricdim/io.hpp"

namespace metricdim {

namespace {

using labels::pad;
using labels::parse_padded;

// rayMM-JJJJ
std::optional<std::pair<int, int>> parse_ray_label(const VertexId& v) {
  const auto& s = v.str();
  if (s.size() != 10 || s.compare(0, 3, "ray") != 0 || s[5] != '-') return std::nullopt;
  const auto m = parse_padded({s.data() + 3, 2}, 2);
  const auto j = parse_padded({s.data() + 6, 4}, 4);
  if (!m || !j || *m < 1 || *j < 1) return std::nullopt;
  return {{*m, *j}};
}

std::map<VertexId, std::vector<int>> attachments_by_vertex(
    const FinicyclicPresentation& p) {
  std::map<VertexId, std::vector<int>> out;
  for (std::size_t i = 0; i < p.ray_attachments.size(); ++i) {
    out[p.ray_attachments[i]].push_back(static_cast<int>(i) + 1);
  }
  return out;
}

int realized_degree(const FinicyclicPresentation& p, int core_index,
                    const std::map<VertexId, std::vector<int>>& attach) {
  const auto it = attach.find(p.core.label(core_index));
  const int rays = it == attach.end() ? 0 : static_cast<int>(it->second.size());
  return p.core.degree(core_index) + rays;
}

}  // namespace

void validate(const FinicyclicPresentation& p) {
  if (p.core.order() == 0) throw InputError("presentation core is empty");
  if (!is_connected(p.core)) throw InputError("presentation core is disconnected");
  if (static_cast<int>(p.ray_attachments.size()) > 99) {
    throw InputError("too many ray attachments (max 99)");
  }
  for (const auto& a : p.ray_attachments) {
    if (!p.core.contains(a)) {
      throw InputError("ray attachment not in core: " + a.str());
    }
  }
  for (const auto& v : p.core.vertices()) {
    if (parse_ray_label(v)) {
      throw InputError("core label collides with ray labels: " + v.str());
    }
  }
}

VertexId ray_vertex(int attachment_index, int j) {
  return VertexId("ray" + pad(attachment_index, 2) + "-" + pad(j, 4));
}

std::vector<VertexId> realized_branch_vertices(const FinicyclicPresentation& p) {
  const auto attach = attachments_by_vertex(p);
  std::vector<VertexId> out;
  for (int i = 0; i < p.core.order(); ++i) {
    if (realized_degree(p, i, attach) >= 3) out.push_back(p.core.label(i));
  }
  return out;
}

InfiniteGraphOracle realize(const FinicyclicPresentation& p) {
  validate(p);
  const Graph core = p.core;
  const auto attach = attachments_by_vertex(p);
  const int n_rays = static_cast<int>(p.ray_attachments.size());
  std::vector<VertexId> attach_vertex(p.ray_attachments);

  OracleMetadata md;
  md.name = "presentation";
  md.end_count = n_rays;
  md.finicyclic = true;
  md.branch_count = static_cast<int>(realized_branch_vertices(p).size());

  return InfiniteGraphOracle(
      core.label(0),
      [core, attach, attach_vertex, n_rays](const VertexId& v) -> std::vector<VertexId> {
        if (core.contains(v)) {
          auto out = core.neighbors(v);
          if (auto it = attach.find(v); it != attach.end()) {
            for (int m : it->second) out.push_back(ray_vertex(m, 1));
          }
          return out;
        }
        const auto parsed = parse_ray_label(v);
        if (!parsed || parsed->first > n_rays) {
          throw InputError("vertex not in realized graph: " + v.str());
        }
        const auto [m, j] = *parsed;
        if (j == 1) return {attach_vertex[m - 1], ray_vertex(m, 2)};
        return {ray_vertex(m, j - 1), ray_vertex(m, j + 1)};
      },
      md);
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

// Shared fact-to-verdict rules. `ends`/`branch` may be unknown (nullopt);
// `ends_at_least` marks a lower bound.
ClassificationReport classify_from_facts(std::optional<int> ends,
                                         bool ends_at_least,
                                         std::optional<int> branch,
                                         bool branch_infinite,
                                         std::optional<bool> finicyclic) {
  ClassificationReport r;
  r.end_count = ends;
  r.end_count_at_least = ends_at_least;
  r.branch_count = branch;
  r.branch_count_infinite = branch_infinite;

  const bool branch_finite = branch.has_value() && !branch_infinite;
  const bool is_finite_graph = ends.has_value() && !ends_at_least && *ends == 0;

  if (is_finite_graph) {
    r.weak_dimension_finite = Tri::Yes;
    r.strong_dimension_finite = Tri::Yes;
    r.justification.emplace_back(
        "the realized graph is finite; both dimensions are finite and the "
        "exact finite-graph solvers apply",
        "finite-graph");
    return r;
  }

  if (branch_finite) {
    r.weak_dimension_finite = Tri::Yes;
    r.justification.emplace_back(
        "a locally finite graph with finitely many branch vertices has "
        "finite weak dimension",
        "finitely-many-branch-vertices");
  } else if (branch_infinite && finicyclic.value_or(false)) {
    r.weak_dimension_finite = Tri::No;
    r.justification.emplace_back(
        "a graph with finitely many cycles and infinitely many branch "
        "vertices has infinite weak dimension",
        "finicyclic-infinite-branch");
  } else {
    r.justification.emplace_back(
        "weak dimension is not determined by the declared structure",
        "weak-undetermined");
  }

  const bool multi_ended =
      ends.has_value() && (*ends >= 2 || (ends_at_least && *ends >= 2));
  if (multi_ended) {
    r.strong_dimension_finite = Tri::No;
    r.justification.emplace_back(
        "a graph with at least two ends has infinite strong dimension",
        "multiple-ends");
  } else if (r.weak_dimension_finite == Tri::No) {
    r.strong_dimension_finite = Tri::No;
    r.justification.emplace_back(
        "strong dimension is at least weak dimension", "strong-at-least-weak");
  } else if (ends.has_value() && !ends_at_least && *ends == 1 && branch_finite &&
             finicyclic.value_or(false)) {
    r.strong_dimension_finite = Tri::Yes;
    r.justification.emplace_back(
        "a one-ended graph with finitely many cycles and finitely many "
        "branch vertices has finite strong dimension",
        "one-end-finite-branch");
  } else {
    r.justification.emplace_back(
        "strong dimension is not determined by the declared structure",
        "strong-undetermined");
  }
  return r;
}

}  // namespace

ClassificationReport classify(const FinicyclicPresentation& p) {
  validate(p);
  const int ends = static_cast<int>(p.ray_attachments.size());
  const int branch = static_cast<int>(realized_branch_vertices(p).size());
  return classify_from_facts(ends, false, branch, false, true);
}

ClassificationReport classify(const InfiniteGraphOracle& oracle) {
  const auto& md = oracle.metadata();
  std::optional<int> branch = md.branch_count;
  if (md.branch_count_infinite) branch = std::nullopt;
  return classify_from_facts(md.end_count, md.end_count_at_least, branch,
                             md.branch_count_infinite, md.finicyclic);
}

std::vector<VertexId> construct_weak_resolving_set(const FinicyclicPresentation& p) {
  validate(p);
  const auto attach = attachments_by_vertex(p);
  const auto branch = realized_branch_vertices(p);
  const int n_rays = static_cast<int>(p.ray_attachments.size());

  if (branch.empty()) {
    // Path, cycle, ray, or double ray.
    if (n_rays == 0) {
      if (p.core.order() == 1) return {};
      if (is_acyclic(p.core)) {  // path: one endpoint resolves it
        for (int i = 0; i < p.core.order(); ++i) {
          if (p.core.degree(i) == 1) return {p.core.label(i)};
        }
      }
      // cycle: two adjacent vertices
      const VertexId first = p.core.label(0);
      return {first, VertexId(p.core.neighbors(first).front())};
    }
    if (n_rays == 1) {
      // Ray; its initial vertex is the unique realized-degree-1 core vertex.
      for (int i = 0; i < p.core.order(); ++i) {
        if (realized_degree(p, i, attach) == 1) return {p.core.label(i)};
      }
      throw std::logic_error("ray presentation without an initial vertex");
    }
    // Double ray: any adjacent pair.
    const VertexId v = p.core.label(0);
    std::vector<VertexId> nbrs = p.core.neighbors(v);
    if (auto it = attach.find(v); it != attach.end()) {
      for (int m : it->second) nbrs.push_back(ray_vertex(m, 1));
    }
    std::sort(nbrs.begin(), nbrs.end());
    return {std::min(v, nbrs.front()), std::max(v, nbrs.front())};
  }

  std::set<VertexId> out(branch.begin(), branch.end());
  for (const auto& b : branch) {
    for (const auto& n : p.core.neighbors(b)) out.insert(n);
    if (auto it = attach.find(b); it != attach.end()) {
      for (int m : it->second) out.insert(ray_vertex(m, 1));
    }
  }
  return {out.begin(), out.end()};
}

Partition partition_components(const FinicyclicPresentation& p) {
  validate(p);
  const auto branch = realized_branch_vertices(p);
  std::set<VertexId> removed_set;
  for (const auto& v : forest_making_set(p.core)) removed_set.insert(v);
  for (const auto& v : branch) removed_set.insert(v);

  Partition out;
  out.removed.assign(removed_set.begin(), removed_set.end());

  const Graph residue = p.core.without_vertices(out.removed);
  const auto attach = attachments_by_vertex(p);

  for (const auto& comp : connected_components(residue)) {
    if (comp.max_degree() > 2 || !is_acyclic(comp)) {
      throw std::logic_error("residual component is not a path");
    }
    ResidualComponent rc;
    rc.finite_vertices = comp.vertices();
    for (const auto& v : comp.vertices()) {
      if (auto it = attach.find(v); it != attach.end()) {
        for (int m : it->second) rc.ray_starts.push_back(ray_vertex(m, 1));
      }
    }
    std::sort(rc.ray_starts.begin(), rc.ray_starts.end());
    switch (rc.ray_starts.size()) {
      case 0: rc.kind = ResidualComponent::Kind::Path; break;
      case 1: rc.kind = ResidualComponent::Kind::Ray; break;
      case 2: rc.kind = ResidualComponent::Kind::DoubleRay; break;
      default:
        throw std::logic_error("residual component with three or more rays");
    }
    out.components.push_back(std::move(rc));
  }

  // Rays whose attachment vertex was removed become bare ray components.
  for (std::size_t i = 0; i < p.ray_attachments.size(); ++i) {
    if (removed_set.count(p.ray_attachments[i])) {
      ResidualComponent rc;
      rc.kind = ResidualComponent::Kind::Ray;
      rc.ray_starts.push_back(ray_vertex(static_cast<int>(i) + 1, 1));
      out.components.push_back(std::move(rc));
    }
  }

  const auto smallest = [](const ResidualComponent& rc) {
    VertexId best;
    bool have = false;
    for (const auto& v : rc.finite_vertices) {
      if (!have || v < best) best = v, have = true;
    }
    for (const auto& v : rc.ray_starts) {
      if (!have || v < best) best = v, have = true;
    }
    return best;
  };
  std::sort(out.components.begin(), out.components.end(),
            [&](const auto& a, const auto& b) { return smallest(a) < smallest(b); });

  for (const auto& rc : out.components) {
    if (rc.kind == ResidualComponent::Kind::DoubleRay &&
        (out.components.size() != 1 || !out.removed.empty())) {
      throw std::logic_error("double-ray component must be the sole component");
    }
  }
  return out;
}

std::vector<VertexId> construct_strong_resolving_set(const FinicyclicPresentation& p) {
  validate(p);
  const int ends = static_cast<int>(p.ray_attachments.size());
  if (ends == 0) {
    throw InputError("the realized graph is finite; use the finite strong solver");
  }
  if (ends >= 2) {
    throw InfeasibleError(
        "strong dimension is infinite: the realized graph has " +
        std::to_string(ends) +
        " ends, and any graph with at least two ends has no finite strong "
        "resolving set");
  }

  const Partition partition = partition_components(p);
  std::set<VertexId> out(partition.removed.begin(), partition.removed.end());
  const ResidualComponent* ray_component = nullptr;
  for (const auto& rc : partition.components) {
    switch (rc.kind) {
      case ResidualComponent::Kind::Path:
        out.insert(rc.finite_vertices.begin(), rc.finite_vertices.end());
        break;
      case ResidualComponent::Kind::Ray:
        if (ray_component) throw std::logic_error("one end but two ray components");
        ray_component = &rc;
        break;
      case ResidualComponent::Kind::DoubleRay:
        throw std::logic_error("double ray in a one-ended presentation");
    }
  }
  if (!ray_component) throw std::logic_error("one end but no ray component");

  // Initial vertex of the residual ray: the unique vertex with one neighbor
  // inside the component (counting its pendant ray), or the pendant ray's
  // first vertex when the attachment itself was removed.
  if (ray_component->finite_vertices.empty()) {
    out.insert(ray_component->ray_starts.front());
  } else {
    const auto attach = attachments_by_vertex(p);
    std::vector<int> keep;
    for (const auto& v : ray_component->finite_vertices) keep.push_back(p.core.index_of(v));
    const Graph comp = p.core.induced(keep);
    std::optional<VertexId> initial;
    for (int i = 0; i < comp.order(); ++i) {
      const auto it = attach.find(comp.label(i));
      const int rays_here = it == attach.end() ? 0 : static_cast<int>(it->second.size());
      if (comp.degree(i) + rays_here == 1) {
        initial = comp.label(i);
        break;
      }
    }
    if (!initial) throw std::logic_error("ray component without an initial vertex");
    out.insert(*initial);
  }
  return {out.begin(), out.end()};
}

std::string to_string(ResidualComponent::Kind kind) {
  switch (kind) {
    case ResidualComponent::Kind::Path: return "path";
    case ResidualComponent::Kind::Ray: return "ray";
    case ResidualComponent::Kind::DoubleRay: return "double_ray";
  }
  return "path";
}

FinicyclicPresentation presentation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("core") || !j.contains("rays")) {
    throw InputError("presentation JSON must be an object with \"core\" and \"rays\"");
  }
  FinicyclicPresentation p;
  p.core = graph_from_json(j.at("core"));
  for (const auto& r : j.at("rays")) {
    if (!r.is_string()) throw InputError("ray attachments must be labels");
    p.ray_attachments.emplace_back(r.get<std::string>());
  }
  validate(p);
  return p;
}

nlohmann::json presentation_to_json(const FinicyclicPresentation& p) {
  nlohmann::json j;
  j["core"] = graph_to_json(p.core);
  j["rays"] = nlohmann::json::array();
  for (const auto& a : p.ray_attachments) j["rays"].push_back(a.str());
  return j;
}

FinicyclicPresentation load_presentation(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return presentation_from_json(j);
}

nlohmann::json classification_to_json(const ClassificationReport& report) {
  nlohmann::json j;
  j["weak_dimension_finite"] = to_string(report.weak_dimension_finite);
  j["strong_dimension_finite"] = to_string(report.strong_dimension_finite);
  if (report.end_count) {
    j["end_count"] = (report.end_count_at_least ? ">=" : "") +
                     std::to_string(*report.end_count);
  } else {
    j["end_count"] = "unknown";
  }
  if (report.branch_count_infinite) {
    j["branch_count"] = "INFINITE";
  } else if (report.branch_count) {
    j["branch_count"] = std::to_string(*report.branch_count);
  } else {
    j["branch_count"] = "unknown";
  }
  j["justification"] = nlohmann::json::array();
  for (const auto& [claim, rule] : report.justification) {
    j["justification"].push_back({{"claim", claim}, {"rule", rule}});
  }
  return j;
}

nlohmann::json partition_to_json(const Partition& partition) {
  nlohmann::json j;
  j["removed"] = nlohmann::json::array();
  for (const auto& v : partition.removed) j["removed"].push_back(v.str());
  j["components"] = nlohmann::json::array();
  for (const auto& rc : partition.components) {
    nlohmann::json c;
    c["kind"] = to_string(rc.kind);
    c["vertices"] = nlohmann::json::array();
    for (const auto& v : rc.finite_vertices) c["vertices"].push_back(v.str());
    c["ray_starts"] = nlohmann::json::array();
    for (const auto& v : rc.ray_starts) c["ray_starts"].push_back(v.str());
    j["components"].push_back(std::move(c));
  }
  return j;
}

}  // namespace metricdim
