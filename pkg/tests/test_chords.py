import pytest
from hypothesis import given, strategies as st

from toricgraph.bases import graver
from toricgraph.chords import (
    ChordKind,
    chords_of,
    classified_chords,
    classify_chord,
    effective_crossings,
    indispensability,
)
from toricgraph.fixtures import REMARK_1_GRAVER, REMARK_2_GRAVER, remark_graph_1, remark_graph_2
from toricgraph.graph import Graph
from toricgraph.oracle import mu_and_indispensables_oracle, vectors_of
from toricgraph.walks import Binomial, ClosedEvenWalk, NotPrimitiveError, cyclic_blocks_with_parity

from conftest import complete_graph, cycle_graph, cyclic_graphs


def by_vertices(g, seq):
    return ClosedEvenWalk.from_vertices(g, [v - 1 for v in seq])


def element(g, listing, key):
    b = Binomial.parse(listing[key], g.names)
    (el,) = [el for el in graver(g) if el.binomial == b]
    return el


def test_c4_with_diagonal():
    g = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    (f,) = chords_of(g, by_vertices(g, [1, 2, 3, 4]))
    assert f.edge == 4


def test_remark_2_square_has_no_chords():
    g = remark_graph_2()
    assert chords_of(g, ClosedEvenWalk.from_names(g, ["e4", "e6", "e7", "e5"])) == []


def test_k4_square_two_odd_chords_crossing():
    g = complete_graph(4)
    w = by_vertices(g, [1, 2, 3, 4])
    chords = classified_chords(g, w)
    assert len(chords) == 2
    assert all(f.kind is ChordKind.ODD for f in chords)
    (c,) = effective_crossings(g, w, chords)
    assert c.indices == (1, 3, 2, 4)


def test_hexagon_chords():
    g = Graph.from_edges([(i, i % 6 + 1) for i in range(1, 7)] + [(1, 4)])
    w = by_vertices(g, range(1, 7))
    (f,) = classified_chords(g, w)
    assert f.kind is ChordKind.EVEN
    assert effective_crossings(g, w, [f]) == []
    g = Graph.from_edges([(i, i % 6 + 1) for i in range(1, 7)] + [(1, 3)])
    (f,) = classified_chords(g, by_vertices(g, range(1, 7)))
    assert f.kind is ChordKind.ODD


def test_bowtie_plus_edge_is_bridge():
    g = Graph.from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3), (1, 4)])
    w = by_vertices(g, [3, 1, 2, 3, 4, 5])
    (f,) = classified_chords(g, w)
    assert f.kind is ChordKind.BRIDGE


def test_chord_at_cut_vertex_is_bridge():
    # two triangles joined by the path 3-4-5; the chord 3-5 skips the middle
    g = Graph.from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 6), (6, 7), (7, 5), (3, 5)])
    w = by_vertices(g, [3, 1, 2, 3, 4, 5, 6, 7, 5, 4])
    (f,) = classified_chords(g, w)
    assert f.kind is ChordKind.BRIDGE


def test_classify_rejects_non_chords_and_non_primitive():
    g = complete_graph(4)
    w = by_vertices(g, [1, 2, 3, 4])
    f = chords_of(g, w)[0]
    with pytest.raises(ValueError):
        classify_chord(g, w, type(f)(0, (0, 1), ((1,), (2,))))
    c4 = cycle_graph(4)
    twice = ClosedEvenWalk.from_names(c4, ["e1", "e2", "e3", "e4"] * 2)
    with pytest.raises(NotPrimitiveError):
        indispensability(c4, twice)


@pytest.mark.parametrize("key", [f"B{i}" for i in range(1, 12)])
def test_remark_1_first_eleven_indispensable(key):
    g = remark_graph_1()
    assert indispensability(g, element(g, REMARK_1_GRAVER, key).walk).indispensable


def test_remark_1_b12_not_indispensable():
    g = remark_graph_1()
    rep = indispensability(g, element(g, REMARK_1_GRAVER, "B12").walk)
    assert not rep.indispensable
    assert rep.i4
    data = rep.to_json(g)
    assert set(data) == {"I1", "I2", "I3", "I4", "indispensable"}


@pytest.mark.parametrize("key", ["B1", "B2", "B3", "B4"])
def test_remark_2_all_indispensable(key):
    g = remark_graph_2()
    el = element(g, REMARK_2_GRAVER, key)
    assert indispensability(g, el.walk).indispensable
    assert effective_crossings(g, el.walk, classified_chords(g, el.walk)) == []
    if key == "B4":
        assert el.circuit_type is None


@given(cyclic_graphs(), st.data())
def test_chord_classification_properties(g, data):
    w = data.draw(st.sampled_from([el.walk for el in graver(g)]))
    kinds = {f.edge: f.kind for f in classified_chords(g, w)}
    assert all(k in ChordKind for k in kinds.values())
    k = data.draw(st.integers(0, len(w) - 1))
    for other in (w.rotated(k), w.reversed()):
        assert {f.edge: f.kind for f in classified_chords(g, other)} == kinds
    for c in effective_crossings(g, w, classified_chords(g, w)):
        i, j, k2, l = c.indices
        assert (j - i) % 2 == 0 and (l - k2) % 2 == 0 and (i - k2) % 2 == 1
        verts = set(c.first.ends) | set(c.second.ends)
        assert any(verts <= set(b.vertices) for b in cyclic_blocks_with_parity(g, w))


@given(cyclic_graphs(max_n=6, max_edges=9))
def test_indispensables_match_fiber_oracle(g):
    _, indisp = mu_and_indispensables_oracle(g)
    structural = vectors_of(el for el in graver(g) if indispensability(g, el.walk).indispensable)
    assert structural == indisp
