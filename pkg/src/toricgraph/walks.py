"""Closed even walks, their binomials, and the block/parity predicates on them.

A walk ``(e_1, ..., e_2k)`` contributes ``e_1 e_3 ... - e_2 e_4 ...``: edges at
odd positions form the plus monomial.  Positions are 0-based in code, so
position ``i`` is a plus edge exactly when ``i`` is even.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Sequence

from .graph import BlockDecomposition, Graph, blocks_of_edges

__all__ = [
    "WalkError",
    "NotPrimitiveError",
    "ClosedEvenWalk",
    "Binomial",
    "ZERO",
    "PrimitivityVerdict",
    "CyclicBlock",
    "binomial_of_walk",
    "classify_primitive",
    "cyclic_blocks_with_parity",
    "is_strongly_primitive",
    "in_universal_groebner",
    "circuit_type",
    "cut_vertex_sides_odd",
]


class WalkError(ValueError):
    """The edge sequence is not a closed even walk of the graph."""


class NotPrimitiveError(ValueError):
    """An operation that needs a primitive walk got a non-primitive one."""


@dataclass(frozen=True)
class ClosedEvenWalk:
    """Edge sequence plus the vertex it leaves from at each position.

    ``edges[i]`` joins ``vertices[i]`` and ``vertices[(i + 1) % len]``.
    """

    edges: tuple[int, ...]
    vertices: tuple[int, ...]

    @classmethod
    def from_vertices(cls, g: Graph, vertices: Sequence[int]) -> "ClosedEvenWalk":
        """Walk through 0-based ``vertices``, returning to the first one."""
        verts = tuple(vertices)
        if len(verts) < 2 or len(verts) % 2:
            raise WalkError(f"a closed even walk needs an even number of steps, got {len(verts)}")
        edges = []
        for i, v in enumerate(verts):
            w = verts[(i + 1) % len(verts)]
            e = g.edge_between(v, w)
            if e is None:
                raise WalkError(f"no edge between vertices {v + 1} and {w + 1}")
            edges.append(e)
        return cls(tuple(edges), verts)

    @classmethod
    def from_edges(cls, g: Graph, edges: Sequence[int], start: int | None = None) -> "ClosedEvenWalk":
        """Walk along 0-based edge indices; ``start`` resolves ambiguous starts."""
        edges = tuple(edges)
        if len(edges) < 2 or len(edges) % 2:
            raise WalkError(f"a closed even walk needs even length, got {len(edges)}")
        for e in edges:
            if not 0 <= e < g.m:
                raise WalkError(f"edge index {e} out of range")
        starts = [start] if start is not None else sorted(set(g.edges[edges[0]]))
        for s in starts:
            verts, cur, ok = [], s, True
            for e in edges:
                a, b = g.edges[e]
                if cur not in (a, b):
                    ok = False
                    break
                verts.append(cur)
                cur = b if cur == a else a
            if ok and cur == s:
                return cls(edges, tuple(verts))
        names = ", ".join(g.names[e] for e in edges)
        raise WalkError(f"({names}) is not a closed walk")

    @classmethod
    def from_names(cls, g: Graph, names: Sequence[str], start: int | None = None) -> "ClosedEvenWalk":
        return cls.from_edges(g, [g.edge_index(s) for s in names], start)

    def __len__(self) -> int:
        return len(self.edges)

    @staticmethod
    def sign(position: int) -> int:
        """+1 for plus (odd, 1-based) positions, -1 for minus positions."""
        return 1 if position % 2 == 0 else -1

    def rotated(self, k: int) -> "ClosedEvenWalk":
        k %= len(self.edges)
        return ClosedEvenWalk(self.edges[k:] + self.edges[:k], self.vertices[k:] + self.vertices[:k])

    def reversed(self) -> "ClosedEvenWalk":
        return ClosedEvenWalk(self.edges[::-1], (self.vertices[0],) + self.vertices[:0:-1])

    def canonical(self) -> "ClosedEvenWalk":
        """Rotation/reflection starting at the minimum edge, smallest sequence first."""
        low = min(self.edges)
        options = []
        for w in (self, self.reversed()):
            for k, e in enumerate(w.edges):
                if e == low:
                    options.append(w.rotated(k))
        return min(options, key=lambda w: (w.edges, w.vertices))

    def validate(self, g: Graph) -> None:
        if len(self.edges) != len(self.vertices) or len(self.edges) < 2 or len(self.edges) % 2:
            raise WalkError("walk must have an even number (>= 2) of steps")
        k = len(self.edges)
        for i, e in enumerate(self.edges):
            if not 0 <= e < g.m:
                raise WalkError(f"edge index {e} not in the graph")
            a, b = g.edges[e]
            if {a, b} != {self.vertices[i], self.vertices[(i + 1) % k]}:
                raise WalkError(f"step {i + 1} uses {g.names[e]}, which does not join "
                                f"{self.vertices[i] + 1} and {self.vertices[(i + 1) % k] + 1}")

    def text(self, g: Graph) -> str:
        return "(" + ",".join(g.names[e] for e in self.edges) + ")"

    def to_json(self, g: Graph) -> dict:
        return {"edges": [g.names[e] for e in self.edges], "vertices": [v + 1 for v in self.vertices]}


# -- binomials -----------------------------------------------------------------

class _ZeroBinomial:
    """Marker for the zero binomial of a walk whose two monomials coincide."""

    is_zero = True

    def __repr__(self) -> str:
        return "ZERO"

    def text(self, names: Sequence[str] | None = None) -> str:
        return "0"


ZERO = _ZeroBinomial()

_TERM = re.compile(r"^([A-Za-z_][A-Za-z_0-9]*)(?:\^([0-9]+))?$")


@dataclass(frozen=True, order=True)
class Binomial:
    """``x^plus - x^minus`` over the edge variables, sign-normalised.

    The plus vector is always the lexicographically larger one, so a
    binomial and its negation compare equal.
    """

    plus: tuple[int, ...]
    minus: tuple[int, ...]

    is_zero = False

    def __post_init__(self):
        plus, minus = tuple(self.plus), tuple(self.minus)
        if len(plus) != len(minus):
            raise ValueError("exponent vectors differ in length")
        if min(plus + minus, default=0) < 0:
            raise ValueError("exponents must be non-negative")
        if plus == minus:
            raise ValueError("equal monomials give the zero binomial; use ZERO")
        if plus < minus:
            plus, minus = minus, plus
        object.__setattr__(self, "plus", plus)
        object.__setattr__(self, "minus", minus)

    @classmethod
    def make(cls, plus: Sequence[int], minus: Sequence[int]) -> "Binomial | _ZeroBinomial":
        if tuple(plus) == tuple(minus):
            return ZERO
        return cls(tuple(plus), tuple(minus))

    @classmethod
    def from_vector(cls, u: Sequence[int]) -> "Binomial":
        return cls(tuple(max(x, 0) for x in u), tuple(max(-x, 0) for x in u))

    @classmethod
    def parse(cls, text: str, names: Sequence[str]) -> "Binomial":
        """Read ``"e1*e3 - e2*e4"`` style text; ``^`` marks exponents."""
        index = {s: i for i, s in enumerate(names)}
        sides = [s.strip() for s in text.split(" - ")]
        if len(sides) != 2:
            raise ValueError(f"expected 'monomial - monomial', got {text!r}")
        vecs = []
        for side in sides:
            vec = [0] * len(names)
            if side != "1":
                for term in side.split("*"):
                    m = _TERM.match(term.strip())
                    if not m or m.group(1) not in index:
                        raise ValueError(f"bad term {term!r} in {text!r}")
                    vec[index[m.group(1)]] += int(m.group(2) or 1)
            vecs.append(tuple(vec))
        return cls(*vecs)

    @classmethod
    def from_json(cls, data: dict) -> "Binomial":
        return cls(tuple(data["plus"]), tuple(data["minus"]))

    @property
    def degree(self) -> int:
        return sum(self.plus)

    @property
    def vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.plus, self.minus))

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, (a, b) in enumerate(zip(self.plus, self.minus)) if a or b)

    def sort_key(self) -> tuple:
        return (self.degree, self.plus, self.minus)

    def text(self, names: Sequence[str] | None = None) -> str:
        names = names or [f"e{i + 1}" for i in range(len(self.plus))]

        def mono(vec):
            terms = [names[i] + (f"^{x}" if x > 1 else "") for i, x in enumerate(vec) if x]
            return "*".join(terms) or "1"

        return f"{mono(self.plus)} - {mono(self.minus)}"

    def to_json(self) -> dict:
        return {"plus": list(self.plus), "minus": list(self.minus)}


def binomial_of_walk(g: Graph, w: ClosedEvenWalk) -> "Binomial | _ZeroBinomial":
    plus, minus = [0] * g.m, [0] * g.m
    for i, e in enumerate(w.edges):
        (plus if i % 2 == 0 else minus)[e] += 1
    return Binomial.make(plus, minus)


# -- structure of the walk's subgraph ----------------------------------------------

@dataclass(frozen=True)
class _Block:
    edges: frozenset[int]
    vertices: frozenset[int]
    is_cycle: bool


class _WalkStructure:
    """Blocks, cut vertices and edge occurrences of one walk."""

    def __init__(self, g: Graph, w: ClosedEvenWalk):
        w.validate(g)
        self.g = g
        self.w = w
        self.occurrences: dict[int, list[int]] = {}
        for i, e in enumerate(w.edges):
            self.occurrences.setdefault(e, []).append(i)
        self.decomposition: BlockDecomposition = blocks_of_edges(g, self.occurrences)
        self.blocks: list[_Block] = []
        for b in self.decomposition.blocks:
            verts = frozenset(v for e in b for v in g.edges[e])
            deg = {v: 0 for v in verts}
            for e in b:
                for v in g.edges[e]:
                    deg[v] += 1
            cyc = len(b) >= 3 and all(d == 2 for d in deg.values())
            self.blocks.append(_Block(b, verts, cyc))
        self.cut_vertices = self.decomposition.cut_vertices
        self.positions: dict[int, list[int]] = {}
        for i, v in enumerate(w.vertices):
            self.positions.setdefault(v, []).append(i)

    def blocks_at(self, v: int) -> list[int]:
        return [k for k, b in enumerate(self.blocks) if v in b.vertices]

    def is_sink(self, k: int, v: int) -> bool:
        """Two traversals of block-``k`` edges at ``v`` share a parity."""
        g = self.g
        counts = [0, 0]
        for e in self.blocks[k].edges:
            if v in g.edges[e]:
                for i in self.occurrences[e]:
                    counts[i % 2] += 1
        return max(counts) >= 2

    def sinks(self, k: int) -> frozenset[int]:
        return frozenset(v for v in self.blocks[k].vertices if self.is_sink(k, v))

    @cached_property
    def verdict(self) -> "PrimitivityVerdict":
        g, w = self.g, self.w
        if binomial_of_walk(g, w) is ZERO:
            return PrimitivityVerdict("NotPrimitive", 0, "the walk's binomial is zero")
        for b in self.blocks:
            if not (b.is_cycle or len(b.edges) == 1):
                return PrimitivityVerdict(
                    "NotPrimitive", 1, "block is neither a cycle nor a cut edge",
                    edges=tuple(sorted(b.edges)))
        single = {next(iter(b.edges)) for b in self.blocks if len(b.edges) == 1}
        for e, occ in sorted(self.occurrences.items()):
            if len(occ) > 1 and (e not in single or len(occ) != 2):
                why = ("is not a cut edge" if e not in single
                       else f"is traversed {len(occ)} times")
                return PrimitivityVerdict("NotPrimitive", 2, f"multiple edge {g.names[e]} {why}",
                                          edges=(e,))
        for v in sorted(self.cut_vertices):
            at = self.blocks_at(v)
            if len(at) != 2:
                return PrimitivityVerdict(
                    "NotPrimitive", 3, f"cut vertex {v + 1} lies in {len(at)} blocks", vertex=v)
            for k in at:
                if not self.is_sink(k, v):
                    return PrimitivityVerdict(
                        "NotPrimitive", 3, f"cut vertex {v + 1} is not a sink of a block",
                        vertex=v, edges=tuple(sorted(self.blocks[k].edges)))
        cyclic = [b for b in self.blocks if b.is_cycle]
        if len(self.blocks) == 1:
            return PrimitivityVerdict("P1", None, "even cycle")
        if len(cyclic) == 2 and len(self.blocks) == 2:
            return PrimitivityVerdict("P2", None, "two odd cycles sharing one vertex")
        return PrimitivityVerdict("P3", None, "cycles joined through cut vertices")


@lru_cache(maxsize=8192)
def _structure(g: Graph, w: ClosedEvenWalk) -> _WalkStructure:
    return _WalkStructure(g, w)


# -- primitivity ---------------------------------------------------------------

@dataclass(frozen=True)
class PrimitivityVerdict:
    """Outcome of the three-condition primitivity test.

    ``condition`` names the first failing condition (1, 2 or 3; 0 for a zero
    binomial) and is ``None`` for primitive walks.
    """

    kind: str
    condition: int | None
    detail: str
    edges: tuple[int, ...] = ()
    vertex: int | None = None

    @property
    def primitive(self) -> bool:
        return self.kind != "NotPrimitive"


@dataclass(frozen=True)
class CyclicBlock:
    edges: tuple[int, ...]
    vertices: tuple[int, ...]
    sinks: frozenset[int]
    pure: bool

    def __len__(self) -> int:
        return len(self.edges)


def classify_primitive(g: Graph, w: ClosedEvenWalk) -> PrimitivityVerdict:
    """P1/P2/P3 when the walk's binomial is primitive, else the failing condition.

    The three conditions: every block of the walk's subgraph is a cycle or a
    cut edge; repeated edges are cut edges traversed exactly twice; every
    cut vertex lies in exactly two blocks and is a sink of both.
    """
    return _structure(g, w).verdict


def _primitive_structure(g: Graph, w: ClosedEvenWalk) -> _WalkStructure:
    s = _structure(g, w)
    if not s.verdict.primitive:
        raise NotPrimitiveError(f"walk {w.text(g)} is not primitive: {s.verdict.detail}")
    return s


def cyclic_blocks_with_parity(g: Graph, w: ClosedEvenWalk) -> list[CyclicBlock]:
    s = _primitive_structure(g, w)
    out = []
    for k, b in enumerate(s.blocks):
        if not b.is_cycle:
            continue
        signs = {s.occurrences[e][0] % 2 for e in b.edges}
        out.append(CyclicBlock(tuple(sorted(b.edges)), tuple(sorted(b.vertices)),
                               s.sinks(k), len(signs) == 1))
    return out


def is_strongly_primitive(g: Graph, w: ClosedEvenWalk) -> tuple[bool, tuple[int, int, int] | None]:
    """No cyclic block has two sinks joined by one of its edges.

    Returns the verdict and, on failure, ``(edge, sink, sink)``.
    """
    for cb in cyclic_blocks_with_parity(g, w):
        for e in cb.edges:
            a, b = g.edges[e]
            if a in cb.sinks and b in cb.sinks:
                return False, (e, a, b)
    return True, None


def in_universal_groebner(g: Graph, w: ClosedEvenWalk) -> bool:
    return not any(cb.pure for cb in cyclic_blocks_with_parity(g, w))


def circuit_type(g: Graph, w: ClosedEvenWalk) -> str | None:
    """C1/C2/C3 for primitive walks whose subgraph has the circuit shape."""
    s = _primitive_structure(g, w)
    cyclic = sum(b.is_cycle for b in s.blocks)
    if cyclic == 1:
        return "C1"
    if cyclic == 2:
        return "C2" if len(s.blocks) == 2 else "C3"
    return None


def cut_vertex_sides_odd(g: Graph, w: ClosedEvenWalk) -> bool:
    """Each cut vertex splits the walk's subgraph into two parts whose
    cyclic blocks carry an odd number of edges in total."""
    s = _primitive_structure(g, w)
    cyc_edges = {e for b in s.blocks if b.is_cycle for e in b.edges}
    for v in s.cut_vertices:
        for k in s.blocks_at(v):
            # the side through block k: flood from k's edges without crossing v
            side_edges: set[int] = set()
            frontier = [x for x in s.blocks[k].vertices if x != v]
            seen = {v, *frontier}
            side_edges |= s.blocks[k].edges
            while frontier:
                x = frontier.pop()
                for e in g.incident[x]:
                    if e in s.occurrences and e not in side_edges:
                        side_edges.add(e)
                        y = g.other_end(e, x)
                        if y not in seen:
                            seen.add(y)
                            frontier.append(y)
            if len(side_edges & cyc_edges) % 2 == 0:
                return False
    return True
