#include <doctest.h>

#include <map>
#include <set>

#include "metricdim/ball.hpp"
#include "metricdim/errors.hpp"
#include "metricdim/oracle.hpp"
#include "metricdim/orient.hpp"
#include "metricdim/presentation.hpp"
#include "test_helpers.hpp"

using namespace metricdim;
using namespace testutil;

namespace {

using Edge = std::pair<VertexId, VertexId>;

std::set<Edge> directed_set(const OrientedGraph& og) {
  return {og.directed.begin(), og.directed.end()};
}

}  // namespace

TEST_CASE("geodesic_prefixes") {
  SUBCASE("ray: exactly one prefix") {
    const auto prefixes = geodesic_prefixes(make_ray(), V("v0000"), 4, 8);
    REQUIRE(prefixes.size() == 1);
    CHECK(prefixes[0].vertices ==
          std::vector<VertexId>{V("v0000"), V("v0001"), V("v0002"), V("v0003"),
                                V("v0004")});
    CHECK(prefixes[0].certified);
  }
  SUBCASE("3-spider from the center: one prefix per arm") {
    const auto prefixes = geodesic_prefixes(make_spider(3), V("c"), 2, 6);
    CHECK(prefixes.size() == 3);
  }
  SUBCASE("ladder from v1 at horizon three") {
    // Top rail straight, or cross the rung at column 0, 1, or 2.
    const auto prefixes = geodesic_prefixes(make_ladder(), V("v1"), 3, 8);
    REQUIRE(prefixes.size() == 4);
    for (const auto& p : prefixes) {
      CHECK(p.certified);
      const auto ball = build_ball(make_ladder(), 8);
      const auto row = bfs_from(ball.graph, ball.graph.index_of(V("v1")));
      for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        CHECK(row[ball.graph.index_of(p.vertices[i])] == static_cast<int>(i));
      }
    }
  }
  SUBCASE("prefixes that cannot extend are dropped") {
    // Tadpole: going around the cycle stalls, only the tail continues.
    const auto oracle = realize({cycle_graph(4), {V("c0")}});
    const auto prefixes = geodesic_prefixes(oracle, V("c0"), 4, 10);
    REQUIRE(prefixes.size() == 1);
    CHECK(prefixes[0].vertices[1] == V("ray01-0001"));
  }
  SUBCASE("horizon validation") {
    CHECK_THROWS_AS(geodesic_prefixes(make_ray(), V("v0000"), 9, 8), InputError);
    CHECK_THROWS_AS(geodesic_prefixes(make_ray(), V("v9999"), 2, 8), InputError);
  }
}

TEST_CASE("geodesic_orientation on the ray is the natural orientation") {
  const auto og = geodesic_orientation(make_ray(), {V("v0000")}, 5, 9);
  const auto directed = directed_set(og);
  for (int i = 0; i < 5; ++i) {
    CHECK(directed.count({V("v000" + std::to_string(i)),
                          V("v000" + std::to_string(i + 1))}) == 1);
  }
  // Nothing is ever directed backwards.
  for (const auto& [a, b] : og.directed) CHECK(a.str() < b.str());
  CHECK(find_bad_pairs(og).empty());
}

TEST_CASE("double ray with the basepoint: both sides point away") {
  const auto og = geodesic_orientation(make_double_ray(), {V("v+0000")}, 4, 9);
  const auto directed = directed_set(og);
  CHECK(directed.count({V("v+0000"), V("v+0001")}) == 1);
  CHECK(directed.count({V("v-0001"), V("v-0002")}) == 1);
  // The two sides are mutually unreachable, so bad pairs appear.
  const auto bad = find_bad_pairs(og);
  CHECK_FALSE(bad.empty());
  const std::set<Edge> bad_set(bad.begin(), bad.end());
  CHECK(bad_set.count({V("v+0001"), V("v-0001")}) == 1);
}

TEST_CASE("empty W leaves everything undirected and mutually reachable") {
  const auto og = geodesic_orientation(make_ladder(), {}, 4, 8);
  CHECK(og.directed.empty());
  CHECK(og.undirected.size() == static_cast<std::size_t>(og.base.edge_count()));
  CHECK(find_bad_pairs(og).empty());
}

TEST_CASE("bad pairs are irreflexive, symmetric, and lexicographic") {
  const auto og = geodesic_orientation(make_broken_ladder(), {V("v1"), V("v2")}, 6, 10);
  const auto bad = find_bad_pairs(og);
  for (std::size_t i = 0; i < bad.size(); ++i) {
    CHECK(bad[i].first < bad[i].second);
    if (i > 0) CHECK(bad[i - 1] < bad[i]);
  }
}

TEST_CASE("broken ladder reproduces the rightward rails and the bad pair") {
  const auto ball = build_ball(make_broken_ladder(), 10);
  const auto og = geodesic_orientation(ball, {V("v1"), V("v2")}, 6);

  const auto rail = [](const VertexId& v) {
    if (v == V("v1")) return 't';
    if (v == V("v2")) return 'b';
    return v.str()[0];
  };
  for (const auto& [a, b] : og.directed) {
    // Every directed edge is a rail edge pointing away from the starts.
    CHECK(rail(a) == rail(b));
  }
  const auto directed = directed_set(og);
  CHECK(directed.count({V("v1"), V("t0001")}) == 1);
  CHECK(directed.count({V("v2"), V("b0001")}) == 1);
  CHECK(directed.count({V("t0005"), V("t0006")}) == 1);
  CHECK(directed.count({V("b0005"), V("b0006")}) == 1);

  // Rungs stay undirected.
  for (const auto& [a, b] : og.directed) {
    const bool rung = (a == V("v1") && b == V("v2")) ||
                      (a.str()[0] == 't' && b.str()[0] == 'b');
    CHECK_FALSE(rung);
  }

  const auto bad = find_bad_pairs(og);
  const std::set<Edge> bad_set(bad.begin(), bad.end());
  CHECK(bad_set.count({V("b0003"), V("t0003")}) == 1);
}

TEST_CASE("orientation consistency under larger horizon and radius") {
  const std::vector<VertexId> w_set{V("v1"), V("v2")};
  const auto small = geodesic_orientation(make_broken_ladder(), w_set, 4, 8);
  const auto large = geodesic_orientation(make_broken_ladder(), w_set, 6, 12);
  const auto large_directed = directed_set(large);
  for (const auto& [a, b] : small.directed) {
    // A certified direction may dissolve into undirected, never flip.
    CHECK(large_directed.count({b, a}) == 0);
  }
}

TEST_CASE("explore_bad_pairs") {
  SUBCASE("broken ladder: every small W from the left block leaves a bad pair") {
    const auto oracle = make_broken_ladder();
    std::vector<std::vector<VertexId>> family;
    const std::vector<VertexId> pool{V("v1"), V("t0001"), V("v2"),
                                     V("b0001"), V("t0002"), V("b0002")};
    for (std::size_t i = 0; i < pool.size(); ++i) {
      family.push_back({pool[i]});
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        family.push_back({pool[i], pool[j]});
      }
    }
    const auto report = explore_bad_pairs(oracle, family, 8, 12);
    CHECK(report.entries.size() == family.size());
    for (const auto& entry : report.entries) {
      CHECK_FALSE(entry.bad_pairs.empty());
    }
  }
  SUBCASE("ray: the basepoint leaves no bad pair and strongly resolves") {
    const auto report = explore_bad_pairs(make_ray(), {{V("v0000")}}, 6, 10);
    REQUIRE(report.entries.size() == 1);
    CHECK(report.entries[0].bad_pairs.empty());
    CHECK(report.entries[0].strong_check.ok());
  }
  SUBCASE("tadpole with its constructed strong set: record the outcome") {
    const FinicyclicPresentation p{cycle_graph(4), {V("c0")}};
    const auto w_set = construct_strong_resolving_set(p);
    const auto report = explore_bad_pairs(realize(p), {w_set}, 6, 12);
    REQUIRE(report.entries.size() == 1);
    // The set strongly resolves every certified pair of the ball...
    CHECK(report.entries[0].strong_check.ok());
    // ...yet the orientation it induces does have a bad pair: the two cycle
    // neighbors of the removed vertex can reach the tail but not each other.
    const std::set<Edge> bad(report.entries[0].bad_pairs.begin(),
                             report.entries[0].bad_pairs.end());
    CHECK(bad.count({V("c1"), V("c3")}) == 1);
  }
}

TEST_CASE("oriented exports") {
  const auto og = geodesic_orientation(make_ray(), {V("v0000")}, 3, 6);
  const auto dot = oriented_to_dot(og);
  CHECK(dot.find("digraph G {") == 0);
  CHECK(dot.find("\"v0000\" -> \"v0001\";") != std::string::npos);
  CHECK(dot.find("[dir=none]") != std::string::npos);  // boundary-side edges

  const auto j = oriented_to_json(og);
  CHECK(j.contains("directed"));
  CHECK(j.contains("undirected"));
}
