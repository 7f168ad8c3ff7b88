import pytest
from hypothesis import given

from toricgraph.bases import (
    EngineBoundError,
    circuits,
    graver,
    indispensables,
    iter_circuits,
    universal_groebner,
)
from toricgraph.fixtures import (
    REMARK_1_GRAVER,
    REMARK_2_GRAVER,
    complete_bipartite_2n,
    example_g,
    remark_graph_1,
    remark_graph_2,
)
from toricgraph.oracle import circuits_oracle, graver_oracle, ugb_oracle, vectors_of
from toricgraph.robustness import subdivide_edge
from toricgraph.walks import Binomial

from conftest import complete_graph, cycle_graph, cyclic_graphs, graphs, path_graph


def listing(g, table, keys=None):
    return {Binomial.parse(table[k], g.names) for k in (keys or table)}


def binomials(elems):
    return {el.binomial for el in elems}


def test_c4_single_circuit():
    (el,) = circuits(cycle_graph(4))
    assert el.circuit_type == "C1"
    assert indispensables(cycle_graph(4)) == graver(cycle_graph(4))


def test_k23_three_circuits():
    assert len(circuits(complete_bipartite_2n(3))) == 3


def test_tree_and_odd_cycle_empty():
    assert graver(path_graph(6)) == []
    assert graver(cycle_graph(5)) == []
    assert circuits(cycle_graph(5)) == []


def test_remark_2_listing():
    g = remark_graph_2()
    assert binomials(graver(g)) == listing(g, REMARK_2_GRAVER)
    assert binomials(universal_groebner(g)) == listing(g, REMARK_2_GRAVER)
    assert binomials(indispensables(g)) == listing(g, REMARK_2_GRAVER)
    assert binomials(circuits(g)) == listing(g, REMARK_2_GRAVER, ["B1", "B2", "B3"])


def test_remark_1_listing():
    g = remark_graph_1()
    first11 = [f"B{i}" for i in range(1, 12)]
    assert binomials(graver(g)) == listing(g, REMARK_1_GRAVER)
    assert binomials(circuits(g)) == listing(g, REMARK_1_GRAVER, first11)
    assert binomials(universal_groebner(g)) == listing(g, REMARK_1_GRAVER)
    assert binomials(indispensables(g)) == listing(g, REMARK_1_GRAVER, first11)


def test_example_g_excludes_all_edge_walk():
    g = example_g()
    full = [el for el in graver(g) if len(el.binomial.support) == g.m]
    assert len(full) == 1
    assert full[0] not in universal_groebner(g)


def test_sorted_output():
    gr = graver(remark_graph_1())
    assert [el.binomial.sort_key() for el in gr] == sorted(el.binomial.sort_key() for el in gr)


def test_engine_bound():
    with pytest.raises(EngineBoundError):
        graver(complete_graph(7), max_edges=20)
    with pytest.raises(EngineBoundError):
        circuits(complete_graph(5), max_edges=5)


def test_witness_walks_give_their_binomials():
    from toricgraph.walks import binomial_of_walk
    g = remark_graph_1()
    for el in graver(g):
        assert binomial_of_walk(g, el.walk) == el.binomial


def test_circuit_shapes():
    # counted by hand: one 8-cycle; triangle and 5-cycle meeting at vertex 3,
    # and at vertex 10; disjoint odd pairs joined by 2 + 4 + 2 paths
    kinds = {}
    for kind, _ in iter_circuits(remark_graph_1()):
        kinds[kind] = kinds.get(kind, 0) + 1
    assert kinds == {"C1": 1, "C2": 2, "C3": 8}


@given(graphs(max_n=6, max_edges=10))
def test_set_inclusions_and_tags(g):
    gr = binomials(graver(g))
    ugb = binomials(universal_groebner(g))
    ind = binomials(indispensables(g))
    circ = binomials(circuits(g))
    assert circ <= ugb <= gr
    assert ind <= ugb
    for el in graver(g):
        if el.primitive_type in ("P1", "P2"):
            assert el.circuit_type == "C" + el.primitive_type[1]
        if el.indispensable:
            assert el.in_ugb


@given(cyclic_graphs(max_n=6, max_edges=10))
def test_sets_match_oracle(g):
    gr = graver(g)
    assert vectors_of(gr) == graver_oracle(g)
    assert vectors_of(circuits(g)) == circuits_oracle(g)
    assert vectors_of(el for el in gr if el.in_ugb) == ugb_oracle(g)


@given(cyclic_graphs(max_n=5, max_edges=8), graphs())
def test_subdivision_preserves_graver_size(g, _):
    for b in range(g.m):
        assert len(graver(subdivide_edge(g, b))) == len(graver(g))
