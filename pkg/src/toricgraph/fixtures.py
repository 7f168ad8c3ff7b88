"""Reference graphs with known toric data, used by tests and the CLI."""

from __future__ import annotations

from .graph import Graph

__all__ = [
    "remark_graph_1",
    "REMARK_1_GRAVER",
    "remark_graph_2",
    "REMARK_2_GRAVER",
    "example_g",
    "example_g_prime",
    "example_g_walk",
    "example_g_prime_walk",
    "theta_graph",
    "two_squares",
    "complete_bipartite_2n",
    "ROBUST_SEVEN",
]


def remark_graph_1() -> Graph:
    """Two triangles and a square chain; twelve primitive binomials, eleven
    of them indispensable."""
    return Graph.from_edges([
        (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 7), (6, 7),
        (6, 8), (7, 9), (8, 10), (9, 10), (10, 11), (10, 12), (11, 12),
    ])


REMARK_1_GRAVER = {
    "B1": "e4*e7*e8*e12^2*e15 - e5*e6*e10^2*e13*e14",
    "B2": "e4*e7*e9*e12 - e5*e6*e10*e11",
    "B3": "e1*e5^2*e10^2*e13*e14 - e2*e3*e7^2*e12^2*e15",
    "B4": "e8*e11*e12*e15 - e9*e10*e13*e14",
    "B5": "e1*e4*e5*e8 - e2*e3*e6*e7",
    "B6": "e1*e4^2*e8^2*e12^2*e15 - e2*e3*e6^2*e10^2*e13*e14",
    "B7": "e1*e4^2*e8*e9*e12 - e2*e3*e6^2*e10*e11",
    "B8": "e1*e4^2*e9^2*e13*e14 - e2*e3*e6^2*e11^2*e15",
    "B9": "e1*e5^2*e8*e10*e11 - e2*e3*e7^2*e9*e12",
    "B10": "e4*e7*e9^2*e13*e14 - e5*e6*e8*e11^2*e15",
    "B11": "e1*e5^2*e8^2*e11^2*e15 - e2*e3*e7^2*e9^2*e13*e14",
    "B12": "e1*e4*e5*e9*e10*e13*e14 - e2*e3*e6*e7*e11*e12*e15",
}


def remark_graph_2() -> Graph:
    """Triangle, square, triangle in a chain; robust with a non-circuit
    Graver element."""
    return Graph.from_edges([
        (1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 6), (5, 6), (6, 7), (6, 8), (7, 8),
    ])


REMARK_2_GRAVER = {
    "B1": "e4*e7 - e5*e6",
    "B2": "e1*e4^2*e8*e9 - e2*e3*e6^2*e10",
    "B3": "e1*e5^2*e8*e9 - e2*e3*e7^2*e10",
    "B4": "e1*e4*e5*e8*e9 - e2*e3*e6*e7*e10",
}


def example_g() -> Graph:
    return Graph.from_edges([
        (1, 2), (2, 3), (3, 4), (4, 5), (3, 5), (3, 6), (6, 7), (7, 8), (6, 8),
        (2, 6), (2, 9), (1, 9),
    ])


def example_g_walk() -> list[int]:
    """Vertex sequence (1-based) of a primitive walk of :func:`example_g`
    using every edge once, with the central triangle on plus positions."""
    return [2, 3, 4, 5, 3, 6, 7, 8, 6, 2, 9, 1]


def example_g_prime() -> Graph:
    """:func:`example_g` with the edge 2-3 replaced by the path 2-10-11-3."""
    return Graph.from_edges([
        (1, 2), (2, 10), (10, 11), (3, 11), (3, 4), (4, 5), (3, 5), (3, 6), (6, 7),
        (7, 8), (6, 8), (2, 6), (2, 9), (1, 9),
    ])


def example_g_prime_walk() -> list[int]:
    return [2, 10, 11, 3, 4, 5, 3, 6, 7, 8, 6, 2, 9, 1]


def theta_graph() -> Graph:
    """Three paths of length three between vertices 3 and 4."""
    return Graph.from_edges([
        (3, 2), (2, 1), (1, 4), (3, 6), (6, 5), (5, 4), (3, 7), (7, 8), (8, 4),
    ])


def two_squares() -> Graph:
    """Two 4-cycles sharing the edge 3-4."""
    return Graph.from_edges([
        (1, 2), (2, 3), (3, 4), (4, 1), (5, 6), (6, 3), (4, 5),
    ])


def complete_bipartite_2n(n: int) -> Graph:
    if n < 1:
        raise ValueError("n must be positive")
    return Graph.from_edges([(a, 3 + j) for j in range(n) for a in (1, 2)], vertex_count=n + 2)


# The robust connected graphs on seven vertices with minimum degree two,
# as 1-based edge lists.
ROBUST_SEVEN: tuple[tuple[tuple[int, int], ...], ...] = (
    ((1, 2), (1, 3), (2, 4), (2, 5), (4, 3), (5, 3), (6, 3), (7, 3), (2, 6), (2, 7)),
    ((1, 2), (2, 3), (3, 4), (4, 1), (4, 5), (5, 6), (6, 7), (7, 4)),
    ((1, 2), (2, 3), (3, 4), (4, 1), (2, 7), (7, 5), (5, 6), (6, 4)),
    ((1, 2), (2, 4), (3, 4), (3, 1), (4, 1), (4, 5), (5, 6), (6, 7), (7, 5)),
    ((1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (3, 6), (3, 7), (4, 5), (5, 6), (5, 7)),
    ((1, 2), (1, 4), (2, 3), (2, 6), (2, 5), (3, 4), (4, 6), (4, 7), (5, 6), (6, 7)),
    ((1, 2), (2, 3), (3, 4), (1, 4), (1, 7), (4, 7), (1, 6), (1, 5), (4, 5), (4, 6)),
    ((1, 2), (1, 6), (1, 3), (6, 7), (7, 2), (7, 3), (4, 2), (4, 5), (5, 3), (2, 3)),
    ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (4, 6), (6, 5), (6, 7), (2, 7), (7, 3)),
    ((1, 2), (1, 7), (2, 7), (4, 5), (3, 6), (3, 7), (7, 4), (5, 7), (6, 7)),
    ((6, 7), (6, 4), (7, 5), (4, 1), (5, 3), (4, 2), (5, 2), (1, 2), (3, 2)),
    ((1, 2), (1, 3), (2, 3), (2, 5), (3, 6), (7, 5), (7, 6), (1, 4), (4, 7)),
    ((1, 2), (2, 3), (3, 4), (4, 1), (2, 4), (4, 5), (5, 6), (6, 7), (7, 4), (4, 6)),
    ((1, 2), (2, 3), (3, 4), (4, 5), (5, 1), (2, 5), (2, 6), (6, 3), (2, 7), (7, 3)),
    ((1, 2), (1, 3), (2, 4), (3, 4), (2, 5), (3, 6), (4, 5), (4, 6), (5, 7), (6, 7)),
)
