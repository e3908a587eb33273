import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from loopddg.graph import (
    GraphFormatError,
    LoopedGraph,
    Partition,
    PartitionMismatch,
    are_isomorphic,
    common_neighbour_matrix,
    common_neighbours,
    complement,
    components,
    degree,
    disjoint_union,
    dumps,
    induced,
    is_automorphism,
    n_star,
    permute,
)
from conftest import complete, complete_bipartite, components_partition, looped_complete, single


@st.composite
def looped_graphs(draw, max_v=12):
    v = draw(st.integers(0, max_v))
    upper = draw(arrays(bool, (v, v)))
    a = np.triu(upper)
    return LoopedGraph(a | a.T)


@st.composite
def graph_and_partition(draw):
    g = draw(looped_graphs())
    labels = draw(st.lists(st.integers(0, 3), min_size=g.v, max_size=g.v))
    return g, Partition.from_labels(labels)


def test_degree_examples():
    assert degree(single(True), 0) == 1
    assert degree(looped_complete(2), 0) == 2
    assert degree(complete(3), 1) == 2


def test_complement_examples(ex47):
    g = complement(complete(2))
    assert g.adj.tolist() == [[True, False], [False, True]]
    h = complement(complete_bipartite(3))
    assert set(h.degrees.tolist()) == {6 - 3}
    _, g47, _ = ex47
    assert g47.loop_count == 8
    assert complement(g47).loop_count == 0


def test_common_neighbour_examples():
    assert common_neighbours(looped_complete(2), 0, 1) == 2
    k22 = complete_bipartite(2)
    assert common_neighbours(k22, 0, 1) == 2
    assert common_neighbours(k22, 0, 2) == 0
    assert common_neighbours(k22, 3, 3) == degree(k22, 3)


def test_n_star_examples(ex47):
    assert n_star(LoopedGraph(np.zeros((4, 4), bool)), components_partition([2, 2])) == 0
    two = disjoint_union([looped_complete(2), looped_complete(2)])
    assert n_star(two, components_partition([2, 2])) == 8
    _, g, p = ex47
    assert n_star(g, p) == 8


def test_n_star_partition_mismatch():
    with pytest.raises(PartitionMismatch):
        n_star(complete(3), components_partition([2]))


def test_disjoint_union_examples():
    assert disjoint_union([]).v == 0
    g = disjoint_union([looped_complete(2), looped_complete(2)])
    assert g.v == 4 and len(components(g)) == 2
    assert disjoint_union([complete_bipartite(2), looped_complete(2)]).v == 6


def test_automorphism_examples():
    k22 = complete_bipartite(2)
    assert is_automorphism(k22, [0, 1, 2, 3])
    assert is_automorphism(k22, [1, 0, 2, 3])
    assert is_automorphism(k22, [2, 3, 0, 1])
    g = disjoint_union([single(True), single(False)])
    assert not is_automorphism(g, [1, 0])


def test_asymmetric_matrix_rejected():
    with pytest.raises(GraphFormatError):
        LoopedGraph(np.array([[0, 1], [0, 0]], bool))


def test_json_format_bit_order():
    g = LoopedGraph.from_edges(10, [(0, 0), (0, 2), (0, 9)])
    js = g.to_json()
    assert js["v"] == 10
    # row 0: bits 0, 2 and 9 set, MSB first -> 0b10100000 0b01000000
    assert js["adj_rows"][0] == "a040"
    assert js["adj_rows"][9] == "8000"


@pytest.mark.parametrize("bad", [
    {"v": 2},
    {"v": 2, "adj_rows": ["40"]},
    {"v": 2, "adj_rows": ["zz", "80"]},
    {"v": 2, "adj_rows": ["4000", "80"]},
    {"v": 2, "adj_rows": ["60", "80"]},
    {"v": 2, "adj_rows": ["40", "00"]},
    {"v": "x", "adj_rows": []},
])
def test_json_rejects_malformed(bad):
    with pytest.raises(GraphFormatError):
        LoopedGraph.from_json(bad)


def test_partition_validation():
    with pytest.raises(PartitionMismatch):
        Partition(((0, 1), (1, 2)))
    with pytest.raises(PartitionMismatch):
        Partition(((0,), (2,))).labels(3)
    with pytest.raises(GraphFormatError):
        Partition.from_json({"groups": []})


@settings(max_examples=150, deadline=None)
@given(looped_graphs())
def test_complement_involution_and_degree_sum(g):
    h = complement(g)
    assert complement(h) == g
    assert ((g.degrees + h.degrees) == g.v).all()
    assert h.loop_count == g.v - g.loop_count


@settings(max_examples=150, deadline=None)
@given(looped_graphs())
def test_json_roundtrip(g):
    text = dumps(g.to_json())
    assert LoopedGraph.from_json(json.loads(text)) == g


@settings(max_examples=100, deadline=None)
@given(looped_graphs(), st.data())
def test_common_neighbours_symmetric_and_match_matrix(g, data):
    C = common_neighbour_matrix(g)
    assert (C == C.T).all()
    assert (np.diag(C) == g.degrees).all()
    if g.v:
        x = data.draw(st.integers(0, g.v - 1))
        y = data.draw(st.integers(0, g.v - 1))
        assert common_neighbours(g, x, y) == common_neighbours(g, y, x) == C[x, y]
    assert int(np.trace(C)) == int(g.degrees.sum())


@settings(max_examples=100, deadline=None)
@given(graph_and_partition())
def test_n_star_equals_block_count(gp):
    g, p = gp
    total = sum(int(g.adj[np.ix_(c, c)].sum()) for c in p.classes)
    assert n_star(g, p) == total


@settings(max_examples=80, deadline=None)
@given(looped_graphs(max_v=9), st.randoms(use_true_random=False))
def test_permute_gives_isomorphic_graph(g, rnd):
    perm = list(range(g.v))
    rnd.shuffle(perm)
    h = permute(g, perm)
    assert are_isomorphic(g, h)
    for x in range(g.v):
        for y in range(g.v):
            assert h.adj[perm[x], perm[y]] == g.adj[x, y]


def test_isomorphism_negative():
    # same degree sequence, not isomorphic: C6 vs two triangles
    c6 = LoopedGraph.from_edges(6, [(i, (i + 1) % 6) for i in range(6)])
    tt = disjoint_union([complete(3), complete(3)])
    assert not are_isomorphic(c6, tt)
    assert not are_isomorphic(complete(3), looped_complete(3))


def test_components_and_induced():
    g = disjoint_union([complete_bipartite(2), looped_complete(2), single(False)])
    comps = components(g)
    assert comps == [[0, 1, 2, 3], [4, 5], [6]]
    assert induced(g, comps[1]) == looped_complete(2)


def test_partition_relabel():
    p = Partition(((0, 1), (2, 3)))
    assert p.relabel([3, 2, 1, 0]).classes == ((2, 3), (0, 1))
    assert Partition.from_labels([1, 0, 1, 0]).classes == ((0, 2), (1, 3))
