"""Circuits, Graver basis, universal Groebner basis and indispensable binomials
of a graph, each element carrying a witness walk."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .chords import indispensability
from .graph import Cycle, Graph, enumerate_simple_cycles
from .walks import (
    Binomial,
    ClosedEvenWalk,
    binomial_of_walk,
    circuit_type,
    classify_primitive,
    in_universal_groebner,
)

__all__ = [
    "EngineBoundError",
    "BasisElement",
    "DEFAULT_MAX_EDGES",
    "iter_circuits",
    "circuits",
    "graver",
    "universal_groebner",
    "indispensables",
]

DEFAULT_MAX_EDGES = 21


class EngineBoundError(ValueError):
    """The graph is larger than the enumeration engine is configured for."""


@dataclass(frozen=True)
class BasisElement:
    binomial: Binomial
    walk: ClosedEvenWalk
    primitive_type: str
    circuit_type: str | None
    in_ugb: bool
    indispensable: bool

    @property
    def tags(self) -> tuple[str, ...]:
        out = [self.primitive_type]
        if self.circuit_type:
            out.append(self.circuit_type)
        if self.in_ugb:
            out.append("UGB")
        if self.indispensable:
            out.append("Indispensable")
        return tuple(out)


def _element(g: Graph, w: ClosedEvenWalk) -> BasisElement:
    verdict = classify_primitive(g, w)
    return BasisElement(
        binomial=binomial_of_walk(g, w),
        walk=w.canonical(),
        primitive_type=verdict.kind,
        circuit_type=circuit_type(g, w),
        in_ugb=in_universal_groebner(g, w),
        indispensable=indispensability(g, w).indispensable,
    )


def _check_bound(g: Graph, max_edges: int) -> None:
    if g.m > max_edges:
        raise EngineBoundError(f"graph has {g.m} edges; the engine bound is {max_edges}")


@lru_cache(maxsize=64)
def _cycles(g: Graph) -> tuple[Cycle, ...]:
    return tuple(enumerate_simple_cycles(g))


# -- circuits -----------------------------------------------------------------

def _rotate_to(c: Cycle, v: int) -> list[int]:
    k = c.vertices.index(v)
    return list(c.vertices[k:] + c.vertices[:k])


def _connecting_paths(g: Graph, c1: Cycle, c2: Cycle) -> Iterator[list[int]]:
    """Simple paths from ``c1`` to ``c2`` touching each cycle only at an end."""
    blocked = c1.vertex_mask | c2.vertex_mask
    for a in c1.vertices:
        path = [a]
        stack = [iter(g.neighbors(a))]
        used = 1 << a
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                used &= ~(1 << path.pop())
                continue
            if c2.vertex_mask >> y & 1:
                yield path + [y]
            elif not (blocked | used) >> y & 1:
                path.append(y)
                used |= 1 << y
                stack.append(iter(g.neighbors(y)))


def iter_circuits(g: Graph) -> Iterator[tuple[str, ClosedEvenWalk]]:
    """Circuit walks by shape: even cycles, then odd-cycle pairs at one
    vertex, then disjoint odd-cycle pairs joined by a path.

    Lazy, so callers looking for one offending circuit can stop early.
    """
    cycles = _cycles(g)
    for c in cycles:
        if len(c) % 2 == 0:
            yield "C1", ClosedEvenWalk(c.edges, c.vertices)
    odd = [c for c in cycles if len(c) % 2]
    for i, c1 in enumerate(odd):
        for c2 in odd[i + 1:]:
            common = c1.vertex_mask & c2.vertex_mask
            if common and common & (common - 1) == 0:
                v = common.bit_length() - 1
                yield "C2", ClosedEvenWalk.from_vertices(g, _rotate_to(c1, v) + _rotate_to(c2, v))
    for i, c1 in enumerate(odd):
        for c2 in odd[i + 1:]:
            if c1.vertex_mask & c2.vertex_mask:
                continue
            for path in _connecting_paths(g, c1, c2):
                # around c1 from a, along the path to b, around c2, back along the path
                seq = _rotate_to(c1, path[0]) + path[:-1] + _rotate_to(c2, path[-1]) + path[:0:-1]
                yield "C3", ClosedEvenWalk.from_vertices(g, seq)


def circuits(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> list[BasisElement]:
    _check_bound(g, max_edges)
    return list(_circuit_elements(g))


@lru_cache(maxsize=64)
def _circuit_elements(g: Graph) -> tuple[BasisElement, ...]:
    seen: dict[Binomial, BasisElement] = {}
    for _, w in iter_circuits(g):
        b = binomial_of_walk(g, w)
        if b not in seen:
            seen[b] = _element(g, w)
    return tuple(sorted(seen.values(), key=lambda el: el.binomial.sort_key()))


# -- Graver basis by walk search ------------------------------------------------------

def _primitive_walks(g: Graph) -> dict[Binomial, ClosedEvenWalk]:
    """Closed even walks whose binomials are primitive, one per binomial.

    Each walk is rooted at its smallest edge.  The search only follows walks
    meeting necessary conditions of primitivity: every edge used at most twice
    (the second time backwards, at the same parity), every vertex visited at
    most twice with an odd closed stretch between the visits, and a stretch
    closed off that way is never entered again.  Survivors are confirmed by
    :func:`classify_primitive`.
    """
    n, m = g.n, g.m
    inc = g.incident
    ends = g.edges
    found: dict[Binomial, ClosedEvenWalk] = {}
    rejected: set[ClosedEvenWalk] = set()

    for e0 in range(m):
        for s, t0 in (ends[e0], ends[e0][::-1]):
            ev = [e0]
            vs = [s, t0]
            use = [0] * m
            use[e0] = 1
            first_from = [-1] * m
            first_pos = [-1] * m
            first_from[e0], first_pos[e0] = s, 0
            visits = [0] * n
            visit_pos = [-1] * n
            visits[s], visit_pos[s] = 1, 0
            visits[t0], visit_pos[t0] = 1, 1
            state = {"closed": 0, "s_pass": -1}

            def record():
                w = ClosedEvenWalk(tuple(ev), tuple(vs[:-1]))
                b = binomial_of_walk(g, w)
                if b.is_zero or b in found or w in rejected:
                    return
                if classify_primitive(g, w).primitive:
                    found[b] = w
                else:
                    rejected.add(w)

            def extend(x: int) -> None:
                t = len(ev)
                prev = ev[-1]
                for e in inc[x]:
                    if e < e0 or e == prev or use[e] == 2:
                        continue
                    a, b = ends[e]
                    y = b if x == a else a
                    if use[e] == 1 and (first_from[e] != y or (t - first_pos[e]) % 2):
                        continue
                    if y == s:
                        if (t + 1) % 2 == 0:
                            if e != e0:
                                ev.append(e)
                                vs.append(y)
                                record()
                                ev.pop()
                                vs.pop()
                            continue
                        if visits[s] != 1:
                            continue
                        # pass through the start: positions 1..t are one side
                        closed_before = state["closed"]
                        for v in vs[1:t + 1]:
                            state["closed"] |= 1 << v
                        state["s_pass"] = t + 1
                        visits[s] = 2
                        _push(e, y, t)
                        extend(y)
                        _pop(e, t)
                        visits[s] = 1
                        state["s_pass"] = -1
                        state["closed"] = closed_before
                        continue
                    if state["closed"] >> y & 1 or visits[y] == 2:
                        continue
                    if visits[y] == 1:
                        q = visit_pos[y]
                        if (t + 1 - q) % 2 == 0 or q < state["s_pass"] < t + 1:
                            continue
                        closed_before = state["closed"]
                        for v in vs[q + 1:t + 1]:
                            state["closed"] |= 1 << v
                        visits[y] = 2
                        _push(e, y, t)
                        extend(y)
                        _pop(e, t)
                        visits[y] = 1
                        state["closed"] = closed_before
                    else:
                        visits[y], visit_pos[y] = 1, t + 1
                        _push(e, y, t)
                        extend(y)
                        _pop(e, t)
                        visits[y], visit_pos[y] = 0, -1

            def _push(e: int, y: int, t: int) -> None:
                ev.append(e)
                vs.append(y)
                use[e] += 1
                if use[e] == 1:
                    first_from[e], first_pos[e] = vs[-2], t

            def _pop(e: int, t: int) -> None:
                if use[e] == 1:
                    first_from[e], first_pos[e] = -1, -1
                use[e] -= 1
                ev.pop()
                vs.pop()

            extend(t0)
    return found


@lru_cache(maxsize=64)
def _graver_elements(g: Graph) -> tuple[BasisElement, ...]:
    walks = _primitive_walks(g)
    elems = [_element(g, w) for w in walks.values()]
    return tuple(sorted(elems, key=lambda el: el.binomial.sort_key()))


def graver(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> list[BasisElement]:
    """One element per primitive binomial, sorted by degree then exponents."""
    _check_bound(g, max_edges)
    return list(_graver_elements(g))


def universal_groebner(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> list[BasisElement]:
    return [el for el in graver(g, max_edges) if el.in_ugb]


def indispensables(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> list[BasisElement]:
    return [el for el in graver(g, max_edges) if el.indispensable]
