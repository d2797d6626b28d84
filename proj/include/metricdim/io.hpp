#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "metricdim/ball.hpp"
#include "metricdim/graph.hpp"

namespace metricdim {

// {"vertices": ["a", ...], "edges": [["a","b"], ...]} with string labels;
// each unordered edge listed once. Serialization is canonical: vertices
// sorted, edges as [min,max] in lexicographic order.
Graph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const Graph& g);

Graph load_graph(const std::filesystem::path& path);

std::string graph_to_dot(const Graph& g);

nlohmann::json ball_to_json(const CertifiedBall& ball);
std::string ball_to_dot(const CertifiedBall& ball);

nlohmann::json dimension_to_json(const DimensionResult& result);

std::string quote_dot(const std::string& s);

}  // namespace metricdim
