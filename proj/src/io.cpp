#include "metricdim/io.hpp"

#include <fstream>
#include <sstream>

#include "metricdim/errors.hpp"

namespace metricdim {

Graph graph_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges")) {
    throw InputError("graph JSON must be an object with \"vertices\" and \"edges\"");
  }
  std::vector<VertexId> vertices;
  for (const auto& v : j.at("vertices")) {
    if (!v.is_string()) throw InputError("vertex labels must be strings");
    vertices.emplace_back(v.get<std::string>());
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string()) {
      throw InputError("each edge must be a two-element array of labels");
    }
    edges.emplace_back(VertexId(e[0].get<std::string>()),
                       VertexId(e[1].get<std::string>()));
  }
  return Graph(std::move(vertices), edges);
}

nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (const auto& v : g.vertices()) j["vertices"].push_back(v.str());
  j["edges"] = nlohmann::json::array();
  for (const auto& [a, b] : g.edge_list()) {
    j["edges"].push_back({a.str(), b.str()});
  }
  return j;
}

Graph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return graph_from_json(j);
}

std::string quote_dot(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string graph_to_dot(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (const auto& v : g.vertices()) os << "  " << quote_dot(v.str()) << ";\n";
  for (const auto& [a, b] : g.edge_list()) {
    os << "  " << quote_dot(a.str()) << " -- " << quote_dot(b.str()) << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json ball_to_json(const CertifiedBall& ball) {
  nlohmann::json j;
  j["graph"] = graph_to_json(ball.graph);
  j["radius"] = ball.radius;
  j["basepoint"] = ball.basepoint.str();
  nlohmann::json depth = nlohmann::json::object();
  for (int i = 0; i < ball.graph.order(); ++i) {
    depth[ball.graph.label(i).str()] = ball.depth[i];
  }
  j["depth"] = std::move(depth);
  j["boundary"] = nlohmann::json::array();
  for (const auto& v : ball.boundary) j["boundary"].push_back(v.str());
  return j;
}

nlohmann::json dimension_to_json(const DimensionResult& result) {
  nlohmann::json j;
  j["method"] = to_string(result.method);
  if (result.value) {
    j["value"] = *result.value;
  } else {
    j["value"] = "INFINITE";
  }
  if (result.witness) {
    j["witness"] = nlohmann::json::array();
    for (const auto& v : result.witness->vertices) j["witness"].push_back(v.str());
    j["witness_verified"] = result.witness->verified;
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

std::string ball_to_dot(const CertifiedBall& ball) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int i = 0; i < ball.graph.order(); ++i) {
    os << "  " << quote_dot(ball.graph.label(i).str()) << " [depth=" << ball.depth[i]
       << "];\n";
  }
  for (const auto& [a, b] : ball.graph.edge_list()) {
    os << "  " << quote_dot(a.str()) << " -- " << quote_dot(b.str()) << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace metricdim
