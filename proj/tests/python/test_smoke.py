"""Smoke tests for the python module: one happy path per operation family."""

import json

import pytest

import metricdim as md


@pytest.fixture
def p5():
    verts = [f"v{i}" for i in range(5)]
    return md.Graph(verts, [(f"v{i}", f"v{i+1}") for i in range(4)])


def test_graph_basics(p5):
    assert p5.order == 5
    assert p5.edge_count == 4
    assert md.bfs_distances(p5, "v0")["v4"] == 4
    assert md.is_tree(p5)
    d, mins = md.distance_to_set(p5, "v3", ["v0", "v1"])
    assert (d, mins) == (2, ["v1"])


def test_dimension_solvers(p5):
    assert md.metric_dimension(p5)["value"] == 1
    assert md.strong_metric_dimension(p5)["value"] == 1

    spider = md.Graph(
        ["c", "a1", "a2", "b1", "b2", "d1", "d2"],
        [("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("c", "d1"), ("d1", "d2")],
    )
    assert md.tree_weak_dimension(spider)["value"] == 2
    assert md.tree_strong_dimension(spider)["value"] == 2
    ok, counterexample = md.is_resolving_set(spider, ["a2", "b2"], "weak")
    assert ok and counterexample is None


def test_resolving_predicates(p5):
    assert md.weakly_resolves(p5, "v0", "v1", "v2")
    assert md.strongly_resolves(p5, "v0", "v2", "v1")


def test_errors():
    disconnected = md.Graph(["a", "b", "c", "d"], [("a", "b"), ("c", "d")])
    with pytest.raises(ValueError):
        md.metric_dimension(disconnected)
    with pytest.raises(md.SizeLimitError):
        md.metric_dimension(md.Graph([f"x{i:02}" for i in range(20)],
                                     [(f"x{i:02}", f"x{i+1:02}") for i in range(19)]),
                            limit=10)


def test_generators_and_balls():
    spider = md.generator("k_spider", 3)
    ball = md.ball(spider, 2)
    assert ball.graph.order == 7
    assert ball.depth()["c"] == 0
    assert md.certified_distance(spider, "a01-0001", "a02-0001", 5) == 2
    assert md.certified_distance(md.generator("ray"), "v0001", "v0006", 6) is None
    tree = md.ball(md.generator("binary_tree"), 3)
    assert tree.graph.order == 15


def test_presentations():
    core = md.Graph(["c"], [])
    spider3 = md.Presentation(core, ["c", "c", "c"])
    report = md.classify(spider3)
    assert report["weak_dimension_finite"] == "yes"
    assert report["strong_dimension_finite"] == "no"

    weak_set = md.construct_weak_resolving_set(spider3)
    assert weak_set == ["c", "ray01-0001", "ray02-0001", "ray03-0001"]
    check = md.verify_resolving_on_ball(md.ball(md.realize(spider3), 8), weak_set, "weak")
    assert check["ok"] and check["unresolved"] == 0

    with pytest.raises(md.InfeasibleError):
        md.construct_strong_resolving_set(spider3)

    parts = md.partition_components(spider3)
    assert parts["removed"] == ["c"]
    assert [c["kind"] for c in parts["components"]] == ["ray", "ray", "ray"]


def test_witnesses():
    double_ray = md.Presentation(md.Graph(["c"], []), ["c", "c"])
    cert = md.strong_unresolved_witness(double_ray, ["c"])
    assert cert["witnesses"][0]["distance_to_u"] < cert["distance_uv"]

    comb = md.generator("comb", 1)
    cert = md.weak_unresolved_witness(comb, ["s0000"])
    assert cert["u"] == "s0002"
    assert cert["v"] == "p0001-01"


def test_orientation():
    ray = md.generator("ray")
    prefixes = md.geodesic_prefixes(ray, "v0000", 4, 8)
    assert len(prefixes) == 1 and prefixes[0][1] is True

    og = md.geodesic_orientation(ray, ["v0000"], 4, 8)
    assert ("v0000", "v0001") in og["directed"]
    assert md.find_bad_pairs(ray, ["v0000"], 4, 8) == []

    broken = md.generator("broken_ladder")
    bad = md.find_bad_pairs(broken, ["v1", "v2"], 6, 10)
    assert ("b0003", "t0003") in bad


def test_json_round_trip(p5):
    text = md.graph_to_json(p5)
    again = md.graph_from_json(text)
    assert json.loads(md.graph_to_json(again)) == json.loads(text)
