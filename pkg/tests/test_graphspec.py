import itertools
import json

import pytest

from graphprod.baire import VertexPath, truncate
from graphprod.errors import UnknownVertexError, ValidationError
from graphprod.graphspec import (
    INF,
    ClopenBoxes,
    Coloring,
    FiniteExplicit,
    GraphInstance,
    fixtures,
    is_prime_power,
    parse_order,
)


def boxes(*bs, coloring=None):
    return GraphInstance(ClopenBoxes(bs), coloring or Coloring({}, INF))


def brute_edge_at_depth(g, a, b, alphabet):
    """Search for actual edges extending ``a`` and ``b``; box membership is
    decided by the first ``L`` coordinates, so extensions to length ``L`` suffice."""
    longest = max([len(p) for box in g.oracle.boxes for p in box] + [len(a)])
    extra = max(0, longest - len(a))
    for ta in itertools.product(alphabet, repeat=extra):
        for tb in itertools.product(alphabet, repeat=extra):
            u = VertexPath(a + ta, 0)
            v = VertexPath(b + tb, 0)
            if g.adjacent(u, v):
                return True
    return False


def test_prime_powers():
    assert [k for k in range(1, 30) if is_prime_power(k)] == [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]
    assert parse_order("2^3") == 8 and parse_order("inf") is INF and parse_order("9") == 9


def test_adjacent_box_examples():
    g = boxes(([0], [1]))
    assert g.adjacent(VertexPath([0, 7], 0), VertexPath([1], 3))
    assert g.adjacent(VertexPath([1], 3), VertexPath([0, 7], 0))
    assert not g.adjacent(VertexPath([2], 0), VertexPath([1], 0))
    assert g.adjacent(VertexPath([2], 0), VertexPath([2], 0))


def test_adjacent_reflexive_for_every_oracle():
    g = fixtures("free", n=3)
    for v in g.vertex_paths():
        assert g.adjacent(v, v)


def test_edge_at_depth_examples():
    g = boxes(([0], [1]))
    assert g.edge_at_depth([0, 4], [1, 9])
    assert not g.edge_at_depth([2], [1])
    assert g.edge_at_depth([5, 5], [5, 5])
    with pytest.raises(ValueError):
        g.edge_at_depth([0], [1, 2])


def test_edge_at_depth_short_prefix_meets_long_box():
    g = boxes(([0, 0, 1], [2, 2]))
    assert g.edge_at_depth([0], [2])
    assert g.edge_at_depth([0, 0], [2, 2])
    assert not g.edge_at_depth([0, 1], [2, 2])


@pytest.mark.parametrize("seed", range(4))
def test_edge_at_depth_matches_brute_force(seed):
    g = fixtures("random-boxes", seed=seed, n_boxes=3, max_box_len=3, alphabet=2)
    alphabet = (0, 1, 2)
    for n in (1, 2, 3):
        heads = list(itertools.product(alphabet, repeat=n))
        for a in heads:
            for b in heads:
                assert g.edge_at_depth(a, b) == (a == b or brute_edge_at_depth(g, a, b, alphabet)), (a, b)


def test_nonadjacency_depth_examples():
    g = boxes(([0], [1]))
    assert g.nonadjacency_depth(VertexPath([0], 0), VertexPath([2], 0)) == 1
    g = boxes(([0, 0], [0, 1]))
    u, v = VertexPath([0, 0], 0), VertexPath([0, 2], 0)
    # frozen from brute-force search at depths 1 and 2
    assert brute_edge_at_depth(g, truncate(u, 1), truncate(v, 1), (0, 1, 2))
    assert not brute_edge_at_depth(g, truncate(u, 2), truncate(v, 2), (0, 1, 2))
    assert g.nonadjacency_depth(u, v) == 2
    f = GraphInstance(FiniteExplicit({"x": VertexPath([0], 0), "y": VertexPath([1], 0)}), Coloring())
    assert f.nonadjacency_depth(VertexPath([0], 0), VertexPath([1], 0)) == 1
    with pytest.raises(ValueError):
        g.nonadjacency_depth(u, u)


def test_finite_nonadjacency_waits_for_separation():
    # x and z share depth 2 with y's neighbour, so they separate only at depth 3
    verts = {"x": VertexPath([0, 0, 1], 0), "y": VertexPath([1], 0), "z": VertexPath([0, 0, 2], 0)}
    g = GraphInstance(FiniteExplicit(verts, [("x", "y"), ("y", "x")]), Coloring())
    assert not g.adjacent(verts["z"], verts["y"])
    assert g.nonadjacency_depth(verts["z"], verts["y"]) == 3


def test_unknown_vertex():
    g = fixtures("free", n=2)
    with pytest.raises(UnknownVertexError):
        g.adjacent(VertexPath([9], 0), g.vertex_paths()[0])


def test_validate_reports():
    assert GraphInstance(ClopenBoxes([]), Coloring({0: 6}, INF)).validate() != []
    g = GraphInstance(FiniteExplicit({"x": VertexPath([0], 0), "y": VertexPath([1], 0)}, [("x", "y")]), Coloring())
    assert any("symmetric" in v for v in g.validate())
    g = GraphInstance(FiniteExplicit({"x": VertexPath([0], 0), "y": VertexPath([0, 0], 0)}), Coloring())
    assert any("share the path" in v for v in g.validate())
    assert fixtures("half-graph", size=3).validate() == []


def test_fixture_shapes():
    free = fixtures("free", n=2)
    assert free.oracle.edges == () and all(free.order_of(v) is INF for v in free.vertex_paths())
    klein = fixtures("complete", orders=[2, 2])
    a, b = klein.vertex_paths()
    assert klein.adjacent(a, b) and klein.order_of(a) == 2 and klein.order_of(b) == 2
    hg = fixtures("half-graph", size=4)
    names = hg.oracle.names
    for i in range(4):
        for j in range(4):
            assert hg.adjacent(names[f"a{i}"], names[f"b{j}"]) == (i < j)
            if i != j:
                assert not hg.adjacent(names[f"a{i}"], names[f"a{j}"])
    assert fixtures("random-boxes", seed=7) == fixtures("random-boxes", seed=7)
    with pytest.raises(ValueError):
        fixtures("complete", orders=[6])
    with pytest.raises(ValueError):
        fixtures("nope")


def test_graph_file_roundtrip(tmp_path):
    for g in (fixtures("half-graph", size=3), fixtures("random-boxes", seed=3)):
        text = json.dumps(g.to_json())
        assert GraphInstance.from_json(json.loads(text)) == g


def test_graph_file_schema():
    obj = {
        "coloring": {"table": {"0": "inf", "2": "2^1"}, "default": "inf"},
        "oracle": {"kind": "clopen_boxes", "boxes": [[[0], [1]]]},
    }
    g = GraphInstance.from_json(obj)
    assert g.order_of(VertexPath([2], 0)) == 2
    obj["coloring"]["table"]["3"] = "6"
    with pytest.raises(ValidationError):
        GraphInstance.from_json(obj)


def test_monotone_projection_on_small_boxes():
    g = fixtures("random-boxes", seed=11, n_boxes=3, max_box_len=3, alphabet=2)
    for n in range(1, 4):
        heads = list(itertools.product((0, 1, 2), repeat=n + 1))
        for a in heads:
            for b in heads:
                if g.edge_at_depth(a, b):
                    assert g.edge_at_depth(a[:n], b[:n])
