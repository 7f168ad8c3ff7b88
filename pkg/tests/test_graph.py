import itertools
import random

import networkx as nx
import pytest
from hypothesis import given

from toricgraph.fixtures import ROBUST_SEVEN, remark_graph_2
from toricgraph.graph import (
    Graph,
    GraphError,
    ParseError,
    blocks_and_cut_vertices,
    canonical_label,
    enumerate_simple_cycles,
    parse_graph,
)

from conftest import bowtie, complete_graph, cycle_graph, graphs, graphs_with_permutation, path_graph


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges)
    return h


# -- construction and parsing ----------------------------------------------------

def test_edge_list_triangle():
    g = parse_graph("1 2\n2 3\n3 1")
    assert (g.n, g.m) == (3, 3)
    assert g.names == ("e1", "e2", "e3")


def test_edge_list_names_and_comments():
    g = parse_graph("# a square\n1 2 # a\n2 3 # b\n\n3 4 # c\n4 1 # d\n")
    assert g.names == ("a", "b", "c", "d")
    assert g.edge_index("c") == 2


def test_loop_rejected():
    with pytest.raises(ParseError, match="loop") as info:
        parse_graph("1 1")
    assert info.value.line == 1


def test_duplicate_rejected_with_position():
    with pytest.raises(ParseError) as info:
        parse_graph("1 2\n2 3\n3 2\n")
    assert info.value.line == 3


@pytest.mark.parametrize("text", ["1 2 3", "1 x", "0 1"])
def test_edge_list_syntax_errors(text):
    with pytest.raises(ParseError):
        parse_graph(text)


def test_json_remark_graph_2():
    g = remark_graph_2()
    h = parse_graph(__import__("json").dumps(g.to_json()), "json")
    assert h == g
    assert h.m == 10


def test_json_errors_report_position():
    with pytest.raises(ParseError) as info:
        parse_graph('{"edges": [[1, 2],\n [2, ]]}', "json")
    assert info.value.line == 2
    with pytest.raises(ParseError):
        parse_graph('{"edges": [[1, 2], [2, 2]]}', "json")
    with pytest.raises(ParseError):
        parse_graph('[1, 2]', "json")


def test_dot_round_trip():
    text = 'graph G {\n  1 -- 2 [label="a"];\n  2 -- 3;\n  3 -- 1 [label=c]\n  4;\n}\n'
    g = parse_graph(text, "dot")
    assert g.n == 4 and g.m == 3
    assert g.names == ("a", "e2", "c")


def test_dot_chains_and_errors():
    g = parse_graph("graph { 1 -- 2 -- 3 -- 1 }", "dot")
    assert g.m == 3
    with pytest.raises(ParseError):
        parse_graph("digraph { 1 -> 2 }", "dot")
    with pytest.raises(ParseError) as info:
        parse_graph("graph {\n 1 -- 2\n 2 -- a }", "dot")
    assert info.value.line == 3


def test_unknown_format():
    with pytest.raises(ValueError):
        parse_graph("1 2", "gml")


def test_graph_rejects_non_simple():
    with pytest.raises(GraphError):
        Graph(3, ((0, 1), (1, 0)))
    with pytest.raises(GraphError):
        Graph(2, ((0, 0),))
    with pytest.raises(GraphError):
        Graph(2, ((0, 5),))


@given(graphs(max_n=7, max_edges=12))
def test_serialisations_round_trip(g):
    assert parse_graph(g.to_edge_list()).edges == g.edges
    assert parse_graph(__import__("json").dumps(g.to_json()), "json") == g


# -- blocks --------------------------------------------------------------------------

def test_blocks_c4():
    d = blocks_and_cut_vertices(cycle_graph(4))
    assert len(d.blocks) == 1 and not d.cut_vertices


def test_blocks_bowtie():
    d = blocks_and_cut_vertices(bowtie())
    assert len(d.blocks) == 2
    assert d.cut_vertices == {2}


def test_blocks_remark_graph_2():
    d = blocks_and_cut_vertices(remark_graph_2())
    assert sorted(map(sorted, d.blocks)) == [[0, 1, 2], [3, 4, 5, 6], [7, 8, 9]]
    # vertices 3 and 6 (1-based) join the blocks
    assert d.cut_vertices == {2, 5}


@given(graphs(max_n=7, max_edges=14))
def test_blocks_match_networkx(g):
    d = blocks_and_cut_vertices(g)
    h = to_nx(g)
    ours = {frozenset(frozenset(g.edges[e]) for e in b) for b in d.blocks}
    theirs = {frozenset(frozenset(e) for e in comp) for comp in nx.biconnected_component_edges(h)}
    assert ours == theirs
    assert set(d.cut_vertices) == set(nx.articulation_points(h))
    assert sum(len(b) for b in d.blocks) == g.m
    bridges = {frozenset(e) for e in nx.bridges(h)}
    assert {frozenset(g.edges[next(iter(b))]) for b in d.blocks if len(b) == 1} == bridges


# -- cycles ---------------------------------------------------------------------------

def brute_force_cycles(g):
    """Edge sets that are connected and 2-regular on their vertices."""
    out = set()
    for k in range(3, g.m + 1):
        for sub in itertools.combinations(range(g.m), k):
            deg = {}
            for e in sub:
                for v in g.edges[e]:
                    deg[v] = deg.get(v, 0) + 1
            if any(d != 2 for d in deg.values()):
                continue
            h = nx.Graph([g.edges[e] for e in sub])
            if nx.is_connected(h):
                out.add(frozenset(sub))
    return out


def test_cycles_c4_k4_tree():
    c4 = enumerate_simple_cycles(cycle_graph(4))
    assert len(c4) == 1 and len(c4[0]) == 4
    assert enumerate_simple_cycles(cycle_graph(4), "odd") == []
    k4 = complete_graph(4)
    assert len(enumerate_simple_cycles(k4, "even")) == 3
    assert len(enumerate_simple_cycles(k4, "odd")) == 4
    assert enumerate_simple_cycles(path_graph(5)) == []


@given(graphs(max_n=6, max_edges=11))
def test_cycles_match_brute_force(g):
    cycles = enumerate_simple_cycles(g)
    sets = [frozenset(c.edges) for c in cycles]
    assert len(sets) == len(set(sets))
    assert set(sets) == brute_force_cycles(g)
    for c in cycles:
        k = len(c.vertices)
        assert all(g.edge_between(c.vertices[i], c.vertices[(i + 1) % k]) == c.edges[i] for i in range(k))


# -- canonical labels ------------------------------------------------------------------

def test_canonical_c4_relabel_and_p4():
    c4 = cycle_graph(4)
    assert canonical_label(c4) == canonical_label(c4.relabel([2, 3, 0, 1]))
    assert canonical_label(c4) != canonical_label(path_graph(4))


def test_canonical_seven_vertex_fixtures_distinct():
    codes = {canonical_label(Graph.from_edges(es, 7)) for es in ROBUST_SEVEN}
    assert len(codes) == 15


@pytest.mark.parametrize("es", ROBUST_SEVEN[:5])
def test_canonical_random_permutations(es):
    g = Graph.from_edges(es, 7)
    code = canonical_label(g)
    rng = random.Random(7)
    for _ in range(100):
        perm = list(range(g.n))
        rng.shuffle(perm)
        assert canonical_label(g.relabel(perm)) == code


@given(graphs_with_permutation(max_n=7, max_edges=12))
def test_canonical_invariant_under_relabelling(gp):
    g, perm = gp
    assert canonical_label(g) == canonical_label(g.relabel(perm))


@given(graphs(min_n=5, max_n=5, max_edges=10), graphs(min_n=5, max_n=5, max_edges=10))
def test_canonical_equal_iff_isomorphic(g, h):
    assert (canonical_label(g) == canonical_label(h)) == nx.is_isomorphic(to_nx(g), to_nx(h))


def test_canonical_bound():
    with pytest.raises(GraphError):
        canonical_label(cycle_graph(11))
