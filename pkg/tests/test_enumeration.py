import itertools

import networkx as nx
import pytest
from hypothesis import given, strategies as st

from toricgraph.bases import graver
from toricgraph.enumeration import (
    AtlasEntry,
    enumerate_graphs,
    enumerate_robust_atlas,
    group_by_ideal_isomorphism,
    has_full_support,
    ideal_isomorphism,
)
from toricgraph.fixtures import complete_bipartite_2n
from toricgraph.graph import Graph, canonical_label

from conftest import complete_graph, cycle_graph, cyclic_graphs


def codes(graphs):
    return {canonical_label(g) for g in graphs}


def atlas_codes(n, min_degree, connected):
    out = set()
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n:
            continue
        if connected and (n == 0 or not nx.is_connected(h)):
            continue
        if n and min(d for _, d in h.degree()) < min_degree:
            continue
        out.add(canonical_label(Graph(n, tuple(tuple(sorted(e)) for e in h.edges()))))
    return out


def test_small_cases():
    (tri,) = enumerate_graphs(3, 2, True)
    assert tri.m == 3
    four = list(enumerate_graphs(4, 2, True))
    diamond = Graph.from_edges([(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)])
    assert codes(four) == codes([cycle_graph(4), diamond, complete_graph(4)])


@pytest.mark.parametrize("n", range(1, 8))
def test_against_networkx_atlas(n):
    for min_degree, connected in ((0, False), (2, True), (1, True)):
        ours = list(enumerate_graphs(n, min_degree, connected))
        assert len(codes(ours)) == len(ours)
        assert codes(ours) == atlas_codes(n, min_degree, connected)


@pytest.mark.parametrize("n", [4, 5])
def test_against_labelled_sweep(n):
    pairs = list(itertools.combinations(range(n), 2))
    seen = set()
    for mask in range(1 << len(pairs)):
        g = Graph(n, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
        if g.is_connected() and min(map(g.degree, range(n))) >= 2:
            seen.add(canonical_label(g))
    assert codes(enumerate_graphs(n, 2, True)) == seen


def test_bound():
    with pytest.raises(ValueError):
        list(enumerate_graphs(9))


def test_small_atlases():
    a4 = codes(e.graph for e in enumerate_robust_atlas(4))
    assert canonical_label(cycle_graph(4)) in a4
    assert canonical_label(complete_graph(4)) not in a4
    a5 = enumerate_robust_atlas(5, jobs=2)
    assert canonical_label(complete_bipartite_2n(3)) in codes(e.graph for e in a5)
    assert all(e.robust and e.full_support for e in a5)


@given(cyclic_graphs(max_n=6, max_edges=10))
def test_support_modes_agree(g):
    assert has_full_support(g, "graver") == has_full_support(g, "circuits")


def entry(g):
    return AtlasEntry(g, canonical_label(g).hex(), True, len(graver(g)), True)


def test_ideal_classes_relabelled_and_different():
    k23 = complete_bipartite_2n(3)
    moved = k23.relabel([4, 3, 2, 1, 0])
    c4 = cycle_graph(4)
    out = group_by_ideal_isomorphism([entry(k23), entry(c4), entry(moved)])
    assert [e.ideal_class_id for e in out] == [1, 2, 1]


@given(cyclic_graphs(max_n=6, max_edges=9), st.randoms(use_true_random=False))
def test_ideal_isomorphism_finds_edge_permutations(g, rnd):
    perm = list(range(g.m))
    rnd.shuffle(perm)
    # the same graph with its edges listed in another order
    h = Graph(g.n, tuple(g.edges[perm[i]] for i in range(g.m)))
    b1 = [el.binomial for el in graver(g)]
    b2 = [el.binomial for el in graver(h)]
    mapping = ideal_isomorphism(b1, b2, g.m)
    assert mapping is not None
    image = {frozenset((tuple(sorted((mapping[e], x) for e, x in enumerate(vec) if x))
                        for vec in (b.plus, b.minus))) for b in b1}
    target = {frozenset((tuple(sorted((e, x) for e, x in enumerate(vec) if x))
                         for vec in (b.plus, b.minus))) for b in b2}
    assert image == target


def test_ideal_isomorphism_rejects():
    c4 = [el.binomial for el in graver(cycle_graph(4))]
    k23 = [el.binomial for el in graver(complete_bipartite_2n(3))]
    assert ideal_isomorphism(c4, k23, 4) is None
