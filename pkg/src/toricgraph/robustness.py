"""Robustness of toric graph ideals, decided three independent ways, plus the
subdivision operation and the checkable side results that go with it."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .bases import DEFAULT_MAX_EDGES, EngineBoundError, graver, iter_circuits, universal_groebner
from .chords import ChordKind, classified_chords, effective_crossings
from .graph import Graph
from .walks import Binomial, ClosedEvenWalk, binomial_of_walk, cyclic_blocks_with_parity

__all__ = [
    "ROUTES",
    "RouteDisagreement",
    "ConditionResult",
    "RobustnessReport",
    "check_r_conditions",
    "is_robust",
    "robustness_report",
    "subdivide_edge",
    "QuadraticCheck",
    "quadratic_circuit_condition",
    "dividing_pair",
]

ROUTES = ("circuits", "indispensability", "oracle", "all")


class RouteDisagreement(RuntimeError):
    """Two decision routes gave different robustness verdicts."""

    def __init__(self, routes: dict[str, bool], graph: Graph):
        self.routes = dict(routes)
        self.graph = graph
        verdicts = ", ".join(f"{k}={v}" for k, v in routes.items())
        super().__init__(f"robustness routes disagree ({verdicts}) on {graph!r}")


@dataclass(frozen=True)
class ConditionResult:
    holds: bool
    witness: dict[str, Any] | None = None


@dataclass
class RobustnessReport:
    conditions: dict[str, ConditionResult]
    routes: dict[str, bool] = field(default_factory=dict)

    @property
    def verdict(self) -> bool:
        if self.routes:
            return next(iter(self.routes.values()))
        return all(c.holds for c in self.conditions.values())

    def to_json(self) -> dict:
        out: dict[str, Any] = {
            name: {"holds": c.holds, "witness": c.witness} for name, c in self.conditions.items()
        }
        out["verdict"] = self.verdict
        out["routes"] = dict(self.routes)
        return out


def _walk_json(g: Graph, w: ClosedEvenWalk) -> dict:
    return {"walk": w.text(g), "binomial": binomial_of_walk(g, w).text(g.names)}


def _chord_json(g: Graph, f) -> dict:
    return {"edge": g.names[f.edge], "ends": [f.ends[0] + 1, f.ends[1] + 1]}


@dataclass(frozen=True)
class _CircuitInfo:
    walk: ClosedEvenWalk
    edge_mask: int
    vertex_mask: int
    cyclic_edges: frozenset[int]


def check_r_conditions(g: Graph, max_edges: int = DEFAULT_MAX_EDGES,
                       stop_early: bool = False) -> RobustnessReport:
    """Test the four circuit conditions R1-R4, keeping the first witness of
    each failure.

    R1: no circuit has an even chord.  R2: no circuit has a bridge.
    R3: no circuit has an effective crossing.  R4: no two circuits meet in
    exactly one edge and its two ends, with that edge in a cyclic block of
    both.  With ``stop_early`` the scan ends at the first failure and the
    unchecked conditions are reported as holding.
    """
    if g.m > max_edges:
        raise EngineBoundError(f"graph has {g.m} edges; the engine bound is {max_edges}")
    found: dict[str, dict] = {}
    infos: list[_CircuitInfo] = []
    seen: set[Binomial] = set()

    def report() -> RobustnessReport:
        return RobustnessReport({
            name: ConditionResult(name not in found, found.get(name))
            for name in ("R1", "R2", "R3", "R4")
        })

    for _, w in iter_circuits(g):
        b = binomial_of_walk(g, w)
        if b in seen:
            continue
        seen.add(b)
        if not ("R1" in found and "R2" in found and "R3" in found):
            chords = classified_chords(g, w)
            for f in chords:
                key = "R1" if f.kind is ChordKind.EVEN else "R2" if f.kind is ChordKind.BRIDGE else None
                if key and key not in found:
                    found[key] = {"circuit": _walk_json(g, w), "chord": _chord_json(g, f)}
            if "R3" not in found:
                crossings = effective_crossings(g, w, chords)
                if crossings:
                    c = crossings[0]
                    found["R3"] = {"circuit": _walk_json(g, w),
                                   "chords": [_chord_json(g, c.first), _chord_json(g, c.second)],
                                   "indices": list(c.indices)}
            if stop_early and found:
                return report()
        edge_mask = vertex_mask = 0
        for e in w.edges:
            edge_mask |= 1 << e
        for v in w.vertices:
            vertex_mask |= 1 << v
        cyc = frozenset(e for cb in cyclic_blocks_with_parity(g, w) for e in cb.edges)
        infos.append(_CircuitInfo(w, edge_mask, vertex_mask, cyc))

    by_edge: dict[int, list[_CircuitInfo]] = {}
    for info in infos:
        for e in info.cyclic_edges:
            by_edge.setdefault(e, []).append(info)
    for e, group in sorted(by_edge.items()):
        if "R4" in found:
            break
        a, b = g.edges[e]
        ends = (1 << a) | (1 << b)
        for i, c1 in enumerate(group):
            for c2 in group[i + 1:]:
                if c1.edge_mask & c2.edge_mask == 1 << e and c1.vertex_mask & c2.vertex_mask == ends:
                    found["R4"] = {"circuits": [_walk_json(g, c1.walk), _walk_json(g, c2.walk)],
                                   "edge": g.names[e]}
                    break
            if "R4" in found:
                break
    return report()


def _indispensability_route(g: Graph, max_edges: int) -> bool:
    return all(el.indispensable for el in graver(g, max_edges))


def _oracle_route(g: Graph) -> bool:
    from .oracle import graver_oracle, mu_and_indispensables_oracle

    gr = graver_oracle(g)
    mu, indisp = mu_and_indispensables_oracle(g)
    return mu == len(gr) and indisp == gr


def robustness_report(g: Graph, route: str = "circuits",
                      max_edges: int = DEFAULT_MAX_EDGES) -> RobustnessReport:
    """Full report.  The R conditions are always listed; ``routes`` holds the
    verdict of each route asked for.  Route ``all`` raises
    :class:`RouteDisagreement` if the routes differ."""
    if route not in ROUTES:
        raise ValueError(f"unknown route {route!r}; expected one of {', '.join(ROUTES)}")
    rep = check_r_conditions(g, max_edges)
    names = ("circuits", "indispensability", "oracle") if route == "all" else (route,)
    for name in names:
        if name == "circuits":
            rep.routes[name] = all(c.holds for c in rep.conditions.values())
        elif name == "indispensability":
            rep.routes[name] = _indispensability_route(g, max_edges)
        else:
            rep.routes[name] = _oracle_route(g)
    if len(set(rep.routes.values())) > 1:
        raise RouteDisagreement(rep.routes, g)
    return rep


def is_robust(g: Graph, route: str = "circuits", max_edges: int = DEFAULT_MAX_EDGES) -> bool:
    """Whether the Graver basis of ``g`` minimally generates its toric ideal.

    Graphs whose ideal is zero count as robust.  Disconnected graphs need no
    special treatment: every route works per component automatically.
    """
    if route == "circuits":
        rep = check_r_conditions(g, max_edges, stop_early=True)
        return all(c.holds for c in rep.conditions.values())
    return robustness_report(g, route, max_edges).verdict


# -- subdivision and side results ---------------------------------------------------

def subdivide_edge(g: Graph, b: int) -> Graph:
    """Replace edge ``b`` by a path of three edges through two new vertices.

    The new edges take ``b``'s place in the edge order, named with suffixes
    ``a``, ``'`` and ``c``.
    """
    if not 0 <= b < g.m:
        raise IndexError(f"edge index {b} out of range for a graph with {g.m} edges")
    u, v = g.edges[b]
    x, y = g.n, g.n + 1
    name = g.names[b]
    edges = g.edges[:b] + ((u, x), (x, y), (y, v)) + g.edges[b + 1:]
    names = g.names[:b] + (name + "a", name + "'", name + "c") + g.names[b + 1:]
    return Graph(g.n + 2, edges, names)


@dataclass(frozen=True)
class QuadraticCheck:
    applicable: bool
    holds: bool | None
    reason: str = ""
    witness: tuple[ClosedEvenWalk, ClosedEvenWalk] | None = None


def quadratic_circuit_condition(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> QuadraticCheck:
    """For robust graphs whose Graver basis is quadratic: any two circuits
    share no edge, or exactly two edges of opposite sign.

    When the precondition fails the result says so instead of raising.
    """
    gr = graver(g, max_edges)
    if any(el.binomial.degree != 2 for el in gr):
        return QuadraticCheck(False, None, "Graver basis has elements of degree above 2")
    if not is_robust(g, "circuits", max_edges):
        return QuadraticCheck(False, None, "graph is not robust")
    walks = [el.walk for el in gr if el.circuit_type]
    for i, w1 in enumerate(walks):
        for w2 in walks[i + 1:]:
            shared = set(w1.edges) & set(w2.edges)
            if not shared:
                continue
            ok = len(shared) == 2 and all(
                len({w.edges.index(e) % 2 for e in shared}) == 2 for w in (w1, w2))
            if not ok:
                return QuadraticCheck(True, False, "circuits overlap badly", (w1, w2))
    return QuadraticCheck(True, True)


def dividing_pair(g: Graph, max_edges: int = DEFAULT_MAX_EDGES) -> tuple[Binomial, Binomial] | None:
    """A pair of universal Groebner elements where a term of the first
    divides a term of the second, or ``None``."""
    terms = [(el.binomial, t) for el in universal_groebner(g, max_edges)
             for t in (el.binomial.plus, el.binomial.minus)]
    for b1, t1 in terms:
        for b2, t2 in terms:
            if b1 != b2 and all(x <= y for x, y in zip(t1, t2)):
                return b1, b2
    return None
