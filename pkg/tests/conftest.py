import itertools
import os

from hypothesis import HealthCheck, settings, strategies as st

from toricgraph.graph import Graph

settings.register_profile(
    "default", max_examples=40, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("thorough", max_examples=300, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


def complete_graph(n):
    return Graph.from_edges(list(itertools.combinations(range(1, n + 1), 2)), vertex_count=n)


def cycle_graph(n):
    return Graph.from_edges([(i, i % n + 1) for i in range(1, n + 1)])


def path_graph(n):
    return Graph.from_edges([(i, i + 1) for i in range(1, n)], vertex_count=n)


def bowtie():
    return Graph.from_edges([(1, 2), (2, 3), (3, 1), (3, 4), (4, 5), (5, 3)])


@st.composite
def graphs(draw, min_n=2, max_n=6, max_edges=10, min_edges=1):
    """Random simple graphs with at least ``min_edges`` edges."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    top = min(max_edges, len(pairs))
    chosen = draw(st.lists(st.sampled_from(pairs), min_size=min(min_edges, top), max_size=top,
                           unique=True))
    return Graph(n, tuple(chosen))


@st.composite
def cyclic_graphs(draw, max_n=6, max_edges=10):
    """Graphs with a nonzero toric ideal: n + 1 edges on n vertices force
    a component with two independent cycles."""
    n = draw(st.integers(4, max_n))
    return draw(graphs(min_n=n, max_n=n, max_edges=max_edges, min_edges=n + 1))


@st.composite
def graphs_with_permutation(draw, **kw):
    g = draw(graphs(**kw))
    perm = draw(st.permutations(range(g.n)))
    return g, list(perm)


# One line per acceptance criterion, filled in by test_acceptance.py and
# repeated at the end of the run so the verdicts are easy to find.
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
