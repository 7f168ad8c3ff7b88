"""Small graphs up to isomorphism, the robust atlas, and grouping of graphs
whose toric ideals agree after renaming edge variables."""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace
from itertools import combinations
from typing import Iterator, Sequence

from .bases import circuits, graver
from .graph import Graph, canonical_label
from .robustness import is_robust
from .walks import Binomial

__all__ = [
    "MAX_VERTICES",
    "AtlasEntry",
    "enumerate_graphs",
    "SUPPORT_MODES",
    "has_full_support",
    "enumerate_robust_atlas",
    "ideal_isomorphism",
    "group_by_ideal_isomorphism",
]

log = logging.getLogger(__name__)

MAX_VERTICES = 8


def _check_n(n: int) -> None:
    if not 0 <= n <= MAX_VERTICES:
        raise ValueError(f"graph enumeration supports 0..{MAX_VERTICES} vertices, got {n}")


def enumerate_graphs(n: int, min_degree: int = 0, connected: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class on ``n`` vertices passing the filters.

    Classes are grown one edge at a time from the empty graph and deduplicated
    by canonical code at every size, so the labelled graphs are never listed.
    Graphs come out ordered by edge count, then canonical code.
    """
    _check_n(n)
    pairs = list(combinations(range(n), 2))
    level: dict[bytes, Graph] = {canonical_label(Graph(n, ())): Graph(n, ())}
    for m in range(len(pairs) + 1):
        for code in sorted(level):
            g = level[code]
            if min(map(g.degree, range(n)), default=min_degree) >= min_degree and \
                    (not connected or g.is_connected()):
                yield g
        if m == len(pairs):
            break
        nxt: dict[bytes, Graph] = {}
        for g in level.values():
            present = set(g.edges)
            for p in pairs:
                if p in present:
                    continue
                h = Graph(n, tuple(sorted(g.edges + (p,))))
                c = canonical_label(h)
                if c not in nxt:
                    nxt[c] = h
        level = nxt


SUPPORT_MODES = ("graver", "circuits")


def has_full_support(g: Graph, mode: str = "graver") -> bool:
    """Every edge variable occurs in some Graver element (``mode="graver"``)
    or in some circuit (``mode="circuits"``).

    Each Graver support is a union of circuit supports, so the two modes
    always agree; both are kept so the claim can be tested.
    """
    if mode not in SUPPORT_MODES:
        raise ValueError(f"unknown support mode {mode!r}")
    covered: set[int] = set()
    for el in (graver(g) if mode == "graver" else circuits(g)):
        covered |= el.binomial.support
    return len(covered) == g.m


@dataclass(frozen=True)
class AtlasEntry:
    graph: Graph
    code: str
    robust: bool
    graver_size: int
    full_support: bool
    ideal_class_id: int | None = None

    def to_json(self) -> dict:
        return {
            "code": self.code,
            "graph": self.graph.to_json(),
            "robust": self.robust,
            "graver_size": self.graver_size,
            "full_support": self.full_support,
            "ideal_class_id": self.ideal_class_id,
        }


def _atlas_check(g: Graph, support_mode: str = "graver") -> AtlasEntry | None:
    if not is_robust(g) or not has_full_support(g, support_mode):
        return None
    return AtlasEntry(g, canonical_label(g).hex(), True, len(graver(g)), True)


def enumerate_robust_atlas(n: int, jobs: int = 1, group: bool = True,
                           support_mode: str = "graver") -> list[AtlasEntry]:
    """Connected graphs on ``n`` vertices with minimum degree two whose toric
    ideal is robust and has full support, one per isomorphism class."""
    _check_n(n)
    candidates = list(enumerate_graphs(n, min_degree=2, connected=True))
    log.info("%d candidate graphs on %d vertices", len(candidates), n)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_atlas_check, candidates, [support_mode] * len(candidates),
                                    chunksize=8))
    else:
        results = [_atlas_check(g, support_mode) for g in candidates]
    entries = [e for e in results if e is not None]
    return group_by_ideal_isomorphism(entries) if group else entries


# -- ideal isomorphism -----------------------------------------------------------

def _terms(b: Binomial) -> frozenset[tuple[tuple[int, int], ...]]:
    return frozenset(tuple((e, x) for e, x in enumerate(vec) if x) for vec in (b.plus, b.minus))


def _edge_signature(binomials: Sequence[Binomial], e: int) -> tuple:
    return tuple(sorted((b.degree, b.plus[e] + b.minus[e]) for b in binomials
                        if b.plus[e] or b.minus[e]))


def ideal_isomorphism(b1: Sequence[Binomial], b2: Sequence[Binomial], m: int) -> dict[int, int] | None:
    """An edge bijection carrying the binomial set ``b1`` onto ``b2``, or ``None``.

    Both sets live on ``m`` edge variables.  Edges are matched only to edges
    with the same signature (degrees and exponents of the binomials they
    occur in), and a binomial is checked as soon as its support is mapped.
    """
    if len(b1) != len(b2) or sorted(b.degree for b in b1) != sorted(b.degree for b in b2):
        return None
    sig1 = [_edge_signature(b1, e) for e in range(m)]
    sig2 = [_edge_signature(b2, e) for e in range(m)]
    if sorted(sig1) != sorted(sig2):
        return None
    target = {_terms(b) for b in b2}
    order = sorted(range(m), key=lambda e: (sum(s == sig1[e] for s in sig1), e))
    pos = {e: k for k, e in enumerate(order)}
    due: list[list[Binomial]] = [[] for _ in range(m)]
    for b in b1:
        if b.support:
            due[max(pos[e] for e in b.support)].append(b)
    image: dict[int, int] = {}
    taken: set[int] = set()

    def mapped(b: Binomial) -> frozenset:
        return frozenset(tuple(sorted((image[e], x) for e, x in side)) for side in _terms(b))

    def search(k: int) -> bool:
        if k == m:
            return True
        e = order[k]
        for f in range(m):
            if f in taken or sig2[f] != sig1[e]:
                continue
            image[e] = f
            taken.add(f)
            if all(mapped(b) in target for b in due[k]) and search(k + 1):
                return True
            taken.discard(f)
            del image[e]
        return False

    return dict(image) if search(0) else None


def group_by_ideal_isomorphism(entries: Sequence[AtlasEntry]) -> list[AtlasEntry]:
    """Label entries with ideal classes, numbered from 1 in order of first
    appearance."""
    reps: list[tuple[int, Graph, list[Binomial]]] = []
    out = []
    for entry in entries:
        bins = [el.binomial for el in graver(entry.graph)]
        cls = None
        for cid, g, rb in reps:
            if g.m == entry.graph.m and ideal_isomorphism(bins, rb, g.m) is not None:
                cls = cid
                break
        if cls is None:
            cls = len(reps) + 1
            reps.append((cls, entry.graph, bins))
        out.append(replace(entry, ideal_class_id=cls))
    return out
