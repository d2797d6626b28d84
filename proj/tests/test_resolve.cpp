#include <doctest.h>

#include <random>

#include "metricdim/errors.hpp"
#include "metricdim/graph_algorithms.hpp"
#include "metricdim/resolve.hpp"
#include "test_helpers.hpp"

using namespace metricdim;
using namespace testutil;

TEST_CASE("weakly_resolves") {
  const Graph c4 = cycle_graph(4);
  CHECK(weakly_resolves(c4, V("c0"), V("c0"), V("c1")));  // w == u
  CHECK_FALSE(weakly_resolves(c4, V("c1"), V("c0"), V("c2")));  // antipodal pair

  const Graph ladder = ladder_graph(4);
  CHECK(weakly_resolves(ladder, V("v1"), V("t1"), V("b1")));  // 1 vs 2

  const Graph two({V("a"), V("b"), V("c"), V("d")},
                  {{V("a"), V("b")}, {V("c"), V("d")}});
  CHECK_THROWS_WITH_AS(weakly_resolves(two, V("a"), V("b"), V("c")),
                       "metric undefined: graph is disconnected", InputError);
}

TEST_CASE("strongly_resolves") {
  const Graph p3 = path_graph(3);
  CHECK(strongly_resolves(p3, V("v0"), V("v2"), V("v1")));  // collinear

  const Graph c4 = cycle_graph(4);
  CHECK_FALSE(strongly_resolves(c4, V("c1"), V("c0"), V("c2")));

  const Graph c5 = cycle_graph(5);
  CHECK(strongly_resolves(c5, V("c0"), V("c1"), V("c2")));  // d(0,2)=d(0,1)+d(1,2)

  // w in {u, v} resolves both ways.
  CHECK(strongly_resolves(c5, V("c1"), V("c1"), V("c3")));
  CHECK(strongly_resolves(c5, V("c3"), V("c1"), V("c3")));
}

TEST_CASE("strong implies weak pointwise") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph g = random_connected_graph(rng, 3 + rng_below(rng, 5), 40);
    for (const auto& w : g.vertices()) {
      for (const auto& u : g.vertices()) {
        for (const auto& v : g.vertices()) {
          if (u >= v) continue;
          if (w == u || w == v) {
            CHECK(strongly_resolves(g, w, u, v));
            CHECK(weakly_resolves(g, w, u, v));
          } else if (strongly_resolves(g, w, u, v)) {
            CHECK(weakly_resolves(g, w, u, v));
          }
        }
      }
    }
  }
}

TEST_CASE("is_resolving_set") {
  const Graph spider = spider_graph(3, 2);
  SUBCASE("the whole vertex set always resolves") {
    CHECK(is_resolving_set(spider, spider.vertices(), ResolveMode::Weak).resolving);
    CHECK(is_resolving_set(spider, spider.vertices(), ResolveMode::Strong).resolving);
  }
  SUBCASE("ladder truncations with the two rail starts") {
    for (int cols : {3, 5, 8}) {
      CHECK(is_resolving_set(ladder_graph(cols), {V("v1"), V("v2")},
                             ResolveMode::Weak)
                .resolving);
    }
  }
  SUBCASE("single arm tip fails with the symmetric counterexample") {
    const auto check = is_resolving_set(spider, {V("a1-2")}, ResolveMode::Weak);
    CHECK_FALSE(check.resolving);
    REQUIRE(check.counterexample.has_value());
    CHECK(check.counterexample->first == V("a2-1"));
    CHECK(check.counterexample->second == V("a3-1"));
  }
}

TEST_CASE("metric_dimension_exact") {
  SUBCASE("paths have dimension one, witnessed by an endpoint") {
    const auto r = metric_dimension_exact(path_graph(5));
    CHECK(r.value == 1);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness->vertices == std::vector<VertexId>{V("v0")});
    CHECK(r.witness->verified);
  }
  SUBCASE("finite 3-spider has dimension two") {
    CHECK(metric_dimension_exact(spider_graph(3, 3)).value == 2);
  }
  SUBCASE("Petersen graph has dimension three") {
    CHECK(metric_dimension_exact(petersen_graph()).value == 3);
  }
  SUBCASE("single vertex needs nothing") {
    CHECK(metric_dimension_exact(Graph({V("x")}, {})).value == 0);
  }
  SUBCASE("size limit") {
    CHECK_THROWS_AS(metric_dimension_exact(ladder_graph(10)), SizeLimitError);
    CHECK(metric_dimension_exact(ladder_graph(10), 20).value == 2);
  }
  SUBCASE("witness is the lexicographically least minimum set") {
    const auto r = metric_dimension_exact(cycle_graph(5));
    CHECK(r.value == 2);
    CHECK(r.witness->vertices == std::vector<VertexId>{V("c0"), V("c1")});
  }
}

TEST_CASE("strong_metric_dimension_exact cross-checks subset search with "
          "the mutual-maximal-distance vertex cover") {
  CHECK(strong_metric_dimension_exact(path_graph(6)).value == 1);
  CHECK(strong_metric_dimension_exact(complete_graph(4)).value == 3);
  CHECK(strong_metric_dimension_exact(cycle_graph(6)).value == 3);

  SUBCASE("mutual-maximal-distance graph shapes") {
    const Graph mmd_path = mutual_max_distance_graph(path_graph(4));
    CHECK(mmd_path.edge_count() == 1);  // the two endpoints
    const Graph mmd_k4 = mutual_max_distance_graph(complete_graph(4));
    CHECK(mmd_k4.edge_count() == 6);  // every pair
    CHECK(minimum_vertex_cover_size(mmd_k4) == 3);
  }
  SUBCASE("random graphs agree between the two routes") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      const Graph g = random_connected_graph(rng, 2 + rng_below(rng, 6), 45);
      CHECK_NOTHROW(strong_metric_dimension_exact(g));
    }
  }
}

TEST_CASE("tree_weak_dimension") {
  CHECK_THROWS_WITH_AS(tree_weak_dimension(cycle_graph(4)), "not a tree", InputError);

  SUBCASE("paths") {
    const auto r = tree_weak_dimension(path_graph(7));
    CHECK(r.value == 1);
    CHECK(to_string(r.method) == "tree-formula");
  }
  SUBCASE("finite 3-spider: three leaves, one exterior branch vertex") {
    const auto r = tree_weak_dimension(spider_graph(3, 3));
    CHECK(r.value == 2);
    CHECK(r.witness->verified);
    CHECK(r.witness->vertices.size() == 2);
  }
  SUBCASE("double broom agrees with exact search") {
    // Path x0..x4 with two extra leaves on each endpoint.
    const Graph broom({V("x0"), V("x1"), V("x2"), V("x3"), V("x4"), V("l1"),
                       V("l2"), V("r1"), V("r2")},
                      {{V("x0"), V("x1")}, {V("x1"), V("x2")}, {V("x2"), V("x3")},
                       {V("x3"), V("x4")}, {V("x0"), V("l1")}, {V("x0"), V("l2")},
                       {V("x4"), V("r1")}, {V("x4"), V("r2")}});
    const auto by_formula = tree_weak_dimension(broom);
    const auto by_search = metric_dimension_exact(broom);
    CHECK(by_formula.value == by_search.value);
    CHECK(by_formula.value == 2);  // 4 leaves, 2 exterior branch vertices
  }
  SUBCASE("random trees agree with exact search") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 120; ++trial) {
      const Graph t = random_tree(rng, 2 + rng_below(rng, 9));
      CHECK(tree_weak_dimension(t).value == metric_dimension_exact(t).value);
    }
  }
}

TEST_CASE("tree_strong_dimension") {
  SUBCASE("paths") {
    const auto r = tree_strong_dimension(path_graph(4));
    CHECK(r.value == 1);
    CHECK(r.witness->vertices == std::vector<VertexId>{V("v0")});
  }
  SUBCASE("trivial tree") {
    const auto r = tree_strong_dimension(Graph({V("x")}, {}));
    CHECK(r.value == 0);
    CHECK(r.witness->vertices.empty());
  }
  SUBCASE("finite 3-spider: two arm tips") {
    const auto r = tree_strong_dimension(spider_graph(3, 3));
    CHECK(r.value == 2);
    CHECK(r.witness->verified);
  }
  SUBCASE("random trees agree with exact search") {
    std::mt19937 rng(37);
    for (int trial = 0; trial < 120; ++trial) {
      const Graph t = random_tree(rng, 2 + rng_below(rng, 9));
      CHECK(tree_strong_dimension(t).value == strong_metric_dimension_exact(t).value);
    }
  }
}

TEST_CASE("degree bound") {
  // Star K_{1,9}: degree 9 > 3^2 - 1, so no 2-element resolving set exists.
  const Graph star = spider_graph(9, 1);
  CHECK_FALSE(satisfies_degree_bound(star, 2));
  CHECK(satisfies_degree_bound(star, 3));
  CHECK(metric_dimension_exact(star).value == 8);

  CHECK(satisfies_degree_bound(complete_graph(4), 2));
  CHECK(satisfies_degree_bound(complete_graph(4), 100));  // huge k saturates
}

TEST_CASE("resolving-set properties on a random corpus") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_connected_graph(rng, 2 + rng_below(rng, 6), 40);
    const auto weak = metric_dimension_exact(g);
    const auto strong = strong_metric_dimension_exact(g);

    // Strong dimension dominates weak dimension.
    CHECK(*strong.value >= *weak.value);
    // A dimension of k forces max degree below 3^k.
    CHECK(satisfies_degree_bound(g, *weak.value));

    // Supersets of a verified resolving set still resolve.
    auto grown = weak.witness->vertices;
    for (const auto& v : g.vertices()) {
      if (rng_below(rng, 2) == 0) grown.push_back(v);
    }
    CHECK(is_resolving_set(g, grown, ResolveMode::Weak).resolving);
  }
}
