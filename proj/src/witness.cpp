#include "metricdim/witness.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "metricdim/ball.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"

namespace metricdim {

namespace {

constexpr int kMaxWitnessRadius = 4096;

bool strong_by_dist(int dwu, int dwv, int duv) {
  return dwu == dwv + duv || dwv == dwu + duv;
}

std::optional<WitnessCertificate> try_strong_witness(
    const CertifiedBall& ball, const std::vector<VertexId>& w_set,
    const std::vector<VertexId>& augmented) {
  const Graph& g = ball.graph;
  std::vector<int> s_idx;
  for (const auto& s : augmented) {
    const auto i = g.find(s);
    if (!i) return std::nullopt;
    s_idx.push_back(*i);
  }
  std::vector<std::vector<int>> rows;
  for (int s : s_idx) rows.push_back(bfs_from(g, s));

  int m = 0;
  for (std::size_t i = 0; i < s_idx.size(); ++i) {
    for (std::size_t j = i + 1; j < s_idx.size(); ++j) {
      const int d = rows[i][s_idx[j]];
      if (!ball.distance_certified(s_idx[i], s_idx[j], d)) return std::nullopt;
      m = std::max(m, d);
    }
  }

  // Smallest index on the given pendant ray whose certified distance to the
  // whole augmented set exceeds m.
  const auto find_far = [&](int ray) -> std::optional<int> {
    for (int j = 1;; ++j) {
      const auto ci = g.find(ray_vertex(ray, j));
      if (!ci) return std::nullopt;  // ran off the ball
      int dmin = std::numeric_limits<int>::max();
      for (std::size_t s = 0; s < s_idx.size(); ++s) {
        const int d = rows[s][*ci];
        if (!ball.distance_certified(s_idx[s], *ci, d)) {
          dmin = -1;
          break;
        }
        dmin = std::min(dmin, d);
      }
      if (dmin < 0) return std::nullopt;
      if (dmin > m) return *ci;
    }
  };
  const auto ui = find_far(1);
  const auto vi = find_far(2);
  if (!ui || !vi) return std::nullopt;

  const auto du_row = bfs_from(g, *ui);
  const int duv = du_row[*vi];
  if (!ball.distance_certified(*ui, *vi, duv)) return std::nullopt;

  WitnessCertificate cert;
  cert.mode = ResolveMode::Strong;
  cert.u = g.label(*ui);
  cert.v = g.label(*vi);
  cert.distance_uv = duv;
  cert.radius = ball.radius;
  cert.max_internal_distance = m;

  for (const auto& w : w_set) {
    const int wi = g.index_of(w);
    const auto w_row = bfs_from(g, wi);
    const int dwu = w_row[*ui];
    const int dwv = w_row[*vi];
    if (!ball.distance_certified(wi, *ui, dwu) ||
        !ball.distance_certified(wi, *vi, dwv)) {
      return std::nullopt;
    }
    if (dwu >= duv || dwv >= duv || strong_by_dist(dwu, dwv, duv)) {
      throw std::logic_error("strong witness violates the separator bound at " +
                             w.str());
    }
    cert.entries.push_back({w, dwu, dwv});
  }
  return cert;
}

}  // namespace

WitnessCertificate strong_unresolved_witness(const FinicyclicPresentation& p,
                                             const std::vector<VertexId>& w_set) {
  validate(p);
  const int ends = static_cast<int>(p.ray_attachments.size());
  if (ends < 2) {
    throw InfeasibleError(
        "unresolved-pair search requires at least two ends; a one-ended "
        "presentation has a finite strong resolving set");
  }
  const auto oracle = realize(p);
  for (const auto& w : w_set) oracle.neighbors(w);  // validates membership

  std::set<VertexId> s_set(w_set.begin(), w_set.end());
  for (const auto& c : p.core.vertices()) s_set.insert(c);
  const std::vector<VertexId> augmented(s_set.begin(), s_set.end());

  for (int radius = 8; radius <= kMaxWitnessRadius; radius *= 2) {
    if (auto cert = try_strong_witness(build_ball(oracle, radius), w_set, augmented)) {
      cert->separator = p.core.vertices();
      return *cert;
    }
  }
  throw std::logic_error("witness search exceeded the radius cap");
}

namespace {

std::optional<WitnessCertificate> try_weak_witness(
    const CertifiedBall& ball, const InfiniteGraphOracle& oracle,
    const std::vector<VertexId>& w_set) {
  const Graph& g = ball.graph;
  const auto& spine = oracle.metadata().spine;

  // Projection of w onto the spine: the last index attaining the certified
  // minimum distance. The scan may stop once the distance has climbed two
  // past the minimum, which the declared comb shape makes final.
  int threshold = 1;
  std::vector<std::vector<int>> w_rows;
  for (const auto& w : w_set) {
    const auto wi = g.find(w);
    if (!wi) return std::nullopt;
    const auto row = bfs_from(g, *wi);
    int best = std::numeric_limits<int>::max();
    int last_argmin = -1;
    bool settled = false;
    for (int i = 0;; ++i) {
      const auto si = g.find(spine(i));
      if (!si) return std::nullopt;
      const int d = row[*si];
      if (!ball.distance_certified(*wi, *si, d)) return std::nullopt;
      if (d < best) best = d;
      if (d == best) last_argmin = i;
      if (d >= best + 2) {
        settled = true;
        break;
      }
    }
    if (!settled) return std::nullopt;
    threshold = std::max(threshold, last_argmin + 1);
    w_rows.push_back(row);
  }

  // First branch vertex of the spine at or past the threshold.
  int branch_index = -1;
  for (int i = threshold;; ++i) {
    if (!g.find(spine(i))) return std::nullopt;
    if (oracle.neighbors(spine(i)).size() >= 3) {
      branch_index = i;
      break;
    }
  }
  const VertexId prev = spine(branch_index - 1);
  const VertexId next = spine(branch_index + 1);
  VertexId off_spine;
  for (const auto& n : oracle.neighbors(spine(branch_index))) {
    if (n != prev && n != next) {
      off_spine = n;
      break;
    }
  }

  const auto ui = g.find(next);
  const auto vi = g.find(off_spine);
  if (!ui || !vi) return std::nullopt;

  WitnessCertificate cert;
  cert.mode = ResolveMode::Weak;
  cert.u = g.label(*ui);
  cert.v = g.label(*vi);
  cert.radius = ball.radius;
  cert.spine_threshold = threshold;
  const auto u_row = bfs_from(g, *ui);
  cert.distance_uv = u_row[*vi];
  if (!ball.distance_certified(*ui, *vi, cert.distance_uv)) return std::nullopt;

  for (std::size_t k = 0; k < w_set.size(); ++k) {
    const int wi = g.index_of(w_set[k]);
    const int dwu = w_rows[k][*ui];
    const int dwv = w_rows[k][*vi];
    if (!ball.distance_certified(wi, *ui, dwu) ||
        !ball.distance_certified(wi, *vi, dwv)) {
      return std::nullopt;
    }
    if (dwu != dwv) {
      throw std::logic_error("weak witness pair is not equidistant from " +
                             w_set[k].str());
    }
    cert.entries.push_back({w_set[k], dwu, dwv});
  }
  return cert;
}

}  // namespace

WitnessCertificate weak_unresolved_witness(const InfiniteGraphOracle& oracle,
                                           const std::vector<VertexId>& w_set) {
  const auto& md = oracle.metadata();
  if (!md.spine || !md.branch_count_infinite || md.finicyclic != true) {
    throw InputError(
        "weak witness search needs a generator declaring a spine ray with "
        "infinitely many branch vertices and finitely many cycles");
  }
  for (const auto& w : w_set) oracle.neighbors(w);  // validates membership

  for (int radius = 8; radius <= kMaxWitnessRadius; radius *= 2) {
    if (auto cert = try_weak_witness(build_ball(oracle, radius), oracle, w_set)) {
      return *cert;
    }
  }
  throw std::logic_error("witness search exceeded the radius cap");
}

nlohmann::json witness_to_json(const WitnessCertificate& cert) {
  nlohmann::json j;
  j["mode"] = to_string(cert.mode);
  j["u"] = cert.u.str();
  j["v"] = cert.v.str();
  j["distance_uv"] = cert.distance_uv;
  j["radius"] = cert.radius;
  if (cert.max_internal_distance) {
    j["max_internal_distance"] = *cert.max_internal_distance;
  }
  if (cert.spine_threshold) j["spine_threshold"] = *cert.spine_threshold;
  if (!cert.separator.empty()) {
    j["separator"] = nlohmann::json::array();
    for (const auto& s : cert.separator) j["separator"].push_back(s.str());
  }
  j["witnesses"] = nlohmann::json::array();
  for (const auto& e : cert.entries) {
    j["witnesses"].push_back({{"w", e.w.str()},
                              {"distance_to_u", e.distance_to_u},
                              {"distance_to_v", e.distance_to_v}});
  }
  return j;
}

}  // namespace metricdim
