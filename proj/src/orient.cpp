#include "metricdim/orient.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"
#include "metricdim/io.hpp"

namespace metricdim {

namespace {

void prefixes_rec(const CertifiedBall& ball, const std::vector<int>& row,
                  const std::vector<char>& cert, int current, int horizon,
                  std::vector<int>& path, bool all_certified,
                  std::vector<GeodesicRayPrefix>& out) {
  const Graph& g = ball.graph;
  if (static_cast<int>(path.size()) - 1 == horizon) {
    const bool extendable = std::any_of(
        g.neighbors(current).begin(), g.neighbors(current).end(),
        [&](int x) { return row[x] == horizon + 1; });
    if (!extendable) return;
    GeodesicRayPrefix prefix;
    for (int i : path) prefix.vertices.push_back(g.label(i));
    prefix.certified = all_certified;
    out.push_back(std::move(prefix));
    return;
  }
  const int pos = static_cast<int>(path.size());
  for (int x : g.neighbors(current)) {  // ascending index = ascending label
    if (row[x] != pos) continue;
    path.push_back(x);
    prefixes_rec(ball, row, cert, x, horizon, path, all_certified && cert[x], out);
    path.pop_back();
  }
}

}  // namespace

std::vector<GeodesicRayPrefix> geodesic_prefixes(const CertifiedBall& ball,
                                                 const VertexId& w, int horizon) {
  if (horizon < 1) throw InputError("horizon must be at least 1");
  if (horizon > ball.radius) throw InputError("horizon exceeds the ball radius");
  const auto wi = ball.graph.find(w);
  if (!wi) throw InputError("vertex outside ball: " + w.str());

  const auto row = bfs_from(ball.graph, *wi);
  std::vector<char> cert(ball.graph.order(), 0);
  for (int i = 0; i < ball.graph.order(); ++i) {
    cert[i] = ball.distance_certified(*wi, i, row[i]);
  }
  std::vector<GeodesicRayPrefix> out;
  std::vector<int> path{*wi};
  prefixes_rec(ball, row, cert, *wi, horizon, path, true, out);
  return out;  // DFS in label order yields lexicographic prefix order
}

std::vector<GeodesicRayPrefix> geodesic_prefixes(const InfiniteGraphOracle& oracle,
                                                 const VertexId& w, int horizon,
                                                 int radius) {
  return geodesic_prefixes(build_ball(oracle, radius), w, horizon);
}

OrientedGraph geodesic_orientation(const CertifiedBall& ball,
                                   const std::vector<VertexId>& w_set,
                                   int horizon) {
  struct Votes {
    bool fwd_any = false, fwd_cert = false;  // min -> max
    bool bwd_any = false, bwd_cert = false;
  };
  std::map<std::pair<int, int>, Votes> votes;
  const Graph& g = ball.graph;

  for (const auto& w : w_set) {
    for (const auto& prefix : geodesic_prefixes(ball, w, horizon)) {
      for (std::size_t i = 1; i < prefix.vertices.size(); ++i) {
        const int a = g.index_of(prefix.vertices[i - 1]);
        const int b = g.index_of(prefix.vertices[i]);
        auto& v = votes[std::minmax(a, b)];
        if (a < b) {
          v.fwd_any = true;
          v.fwd_cert = v.fwd_cert || prefix.certified;
        } else {
          v.bwd_any = true;
          v.bwd_cert = v.bwd_cert || prefix.certified;
        }
      }
    }
  }

  OrientedGraph og;
  og.base = g;
  for (int u = 0; u < g.order(); ++u) {
    for (int v : g.neighbors(u)) {
      if (v <= u) continue;
      const auto it = votes.find({u, v});
      if (it != votes.end() && it->second.fwd_cert && !it->second.bwd_any) {
        og.directed.emplace_back(g.label(u), g.label(v));
      } else if (it != votes.end() && it->second.bwd_cert && !it->second.fwd_any) {
        og.directed.emplace_back(g.label(v), g.label(u));
      } else {
        og.undirected.emplace_back(g.label(u), g.label(v));
      }
    }
  }
  return og;
}

OrientedGraph geodesic_orientation(const InfiniteGraphOracle& oracle,
                                   const std::vector<VertexId>& w_set,
                                   int horizon, int radius) {
  return geodesic_orientation(build_ball(oracle, radius), w_set, horizon);
}

std::vector<std::pair<VertexId, VertexId>> find_bad_pairs(const OrientedGraph& og) {
  const Graph& g = og.base;
  const int n = g.order();
  std::vector<std::vector<int>> out_arcs(n);
  for (const auto& [a, b] : og.directed) {
    out_arcs[g.index_of(a)].push_back(g.index_of(b));
  }
  for (const auto& [a, b] : og.undirected) {
    const int ai = g.index_of(a), bi = g.index_of(b);
    out_arcs[ai].push_back(bi);
    out_arcs[bi].push_back(ai);
  }

  std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    std::deque<int> queue{s};
    reach[s][s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : out_arcs[u]) {
        if (!reach[s][v]) {
          reach[s][v] = 1;
          queue.push_back(v);
        }
      }
    }
  }

  std::vector<std::pair<VertexId, VertexId>> bad;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!reach[u][v] && !reach[v][u]) bad.emplace_back(g.label(u), g.label(v));
    }
  }
  return bad;
}

ExplorationReport explore_bad_pairs(const InfiniteGraphOracle& oracle,
                                    std::vector<std::vector<VertexId>> family,
                                    int horizon, int radius) {
  const CertifiedBall ball = build_ball(oracle, radius);
  for (auto& w_set : family) std::sort(w_set.begin(), w_set.end());
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  ExplorationReport report;
  report.horizon = horizon;
  report.radius = radius;
  for (const auto& w_set : family) {
    ExplorationEntry entry;
    entry.w_set = w_set;
    entry.bad_pairs = find_bad_pairs(geodesic_orientation(ball, w_set, horizon));
    entry.strong_check = verify_resolving_on_ball(ball, w_set, ResolveMode::Strong);
    report.entries.push_back(std::move(entry));
  }
  return report;
}

std::string oriented_to_dot(const OrientedGraph& og) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (const auto& v : og.base.vertices()) os << "  " << quote_dot(v.str()) << ";\n";
  for (const auto& [a, b] : og.directed) {
    os << "  " << quote_dot(a.str()) << " -> " << quote_dot(b.str()) << ";\n";
  }
  for (const auto& [a, b] : og.undirected) {
    os << "  " << quote_dot(a.str()) << " -> " << quote_dot(b.str())
       << " [dir=none];\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::json oriented_to_json(const OrientedGraph& og) {
  nlohmann::json j;
  j["directed"] = nlohmann::json::array();
  for (const auto& [a, b] : og.directed) j["directed"].push_back({a.str(), b.str()});
  j["undirected"] = nlohmann::json::array();
  for (const auto& [a, b] : og.undirected) {
    j["undirected"].push_back({a.str(), b.str()});
  }
  return j;
}

nlohmann::json bad_pairs_report(const OrientedGraph& og, const CertifiedBall& ball,
                                const std::vector<VertexId>& w_set, int horizon) {
  const std::set<VertexId> boundary(ball.boundary.begin(), ball.boundary.end());
  nlohmann::json j;
  j["W"] = nlohmann::json::array();
  for (const auto& w : w_set) j["W"].push_back(w.str());
  j["horizon"] = horizon;
  j["radius"] = ball.radius;
  j["bad_pairs"] = nlohmann::json::array();
  int horizon_limited = 0;
  for (const auto& [a, b] : find_bad_pairs(og)) {
    const bool limited = boundary.count(a) > 0 || boundary.count(b) > 0;
    horizon_limited += limited;
    j["bad_pairs"].push_back(
        {{"u", a.str()}, {"v", b.str()}, {"horizon_limited", limited}});
  }
  j["horizon_limited_pairs"] = horizon_limited;
  return j;
}

nlohmann::json exploration_to_json(const ExplorationReport& report) {
  nlohmann::json j;
  j["label"] = "evidence, not proof";
  j["horizon"] = report.horizon;
  j["radius"] = report.radius;
  j["entries"] = nlohmann::json::array();
  for (const auto& entry : report.entries) {
    nlohmann::json e;
    e["W"] = nlohmann::json::array();
    for (const auto& w : entry.w_set) e["W"].push_back(w.str());
    e["bad_pair_exists"] = !entry.bad_pairs.empty();
    e["bad_pairs"] = nlohmann::json::array();
    for (const auto& [a, b] : entry.bad_pairs) {
      e["bad_pairs"].push_back({a.str(), b.str()});
    }
    e["strongly_resolves_certified"] = entry.strong_check.ok();
    e["pairs"] = {{"resolved", entry.strong_check.resolved},
                  {"unresolved", entry.strong_check.unresolved},
                  {"undetermined", entry.strong_check.undetermined}};
    j["entries"].push_back(std::move(e));
  }
  return j;
}

}  // namespace metricdim
