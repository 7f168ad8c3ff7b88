"""Chords of primitive walks: bridges, even and odd chords, effective crossings,
and the four-part indispensability test built from them."""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace
from itertools import combinations

from .graph import Graph
from .walks import ClosedEvenWalk, _primitive_structure, _structure, is_strongly_primitive

__all__ = [
    "ChordKind",
    "Chord",
    "CrossingPair",
    "IndispensabilityReport",
    "chords_of",
    "classify_chord",
    "classified_chords",
    "effective_crossings",
    "indispensability",
]


class ChordKind(enum.Enum):
    BRIDGE = "bridge"
    EVEN = "even"
    ODD = "odd"


@dataclass(frozen=True)
class Chord:
    edge: int
    ends: tuple[int, int]
    # 1-based walk positions i at which v_i is the corresponding end
    positions: tuple[tuple[int, ...], tuple[int, ...]]
    kind: ChordKind | None = None


@dataclass(frozen=True)
class CrossingPair:
    first: Chord
    second: Chord
    indices: tuple[int, int, int, int]


def chords_of(g: Graph, w: ClosedEvenWalk) -> list[Chord]:
    """Edges of ``g`` off the walk whose two ends both lie on it."""
    s = _structure(g, w)
    out = []
    for e, (a, b) in enumerate(g.edges):
        if e in s.occurrences or a not in s.positions or b not in s.positions:
            continue
        pos = (tuple(i + 1 for i in s.positions[a]), tuple(i + 1 for i in s.positions[b]))
        out.append(Chord(e, (a, b), pos))
    return out


def classify_chord(g: Graph, w: ClosedEvenWalk, f: Chord) -> ChordKind:
    """Bridge if the ends sit in different blocks of the walk; otherwise even
    or odd by the parity of the position gap between the ends."""
    s = _primitive_structure(g, w)
    a, b = f.ends
    if f.edge in s.occurrences or a not in s.positions or b not in s.positions:
        raise ValueError(f"{g.names[f.edge]} is not a chord of {w.text(g)}")
    if a in s.cut_vertices or b in s.cut_vertices:
        return ChordKind.BRIDGE
    if not set(s.blocks_at(a)) & set(s.blocks_at(b)):
        return ChordKind.BRIDGE
    gaps = {abs(i - j) % 2 for i in s.positions[a] for j in s.positions[b]}
    if len(gaps) != 1:
        raise AssertionError(f"chord {g.names[f.edge]} has no well-defined parity")
    return ChordKind.EVEN if gaps.pop() == 1 else ChordKind.ODD


def classified_chords(g: Graph, w: ClosedEvenWalk) -> list[Chord]:
    return [replace(f, kind=classify_chord(g, w, f)) for f in chords_of(g, w)]


def effective_crossings(g: Graph, w: ClosedEvenWalk, chords: list[Chord]) -> list[CrossingPair]:
    """Pairs of odd chords ``(v_i, v_j)``, ``(v_k, v_l)`` with ``i - k`` odd
    whose endpoints interleave along the walk."""
    odd = [f for f in chords if f.kind is ChordKind.ODD]
    out = []
    for f, h in combinations(odd, 2):
        found = None
        for i0 in f.positions[0]:
            for j0 in f.positions[1]:
                i, j = sorted((i0, j0))
                for k0 in h.positions[0]:
                    for l0 in h.positions[1]:
                        k, l = sorted((k0, l0))
                        if (j - i) % 2 or (l - k) % 2 or (i - k) % 2 == 0:
                            continue
                        if i < k < j < l or k < i < l < j:
                            found = (i, j, k, l)
        if found:
            out.append(CrossingPair(f, h, found))
    return out


@dataclass(frozen=True)
class IndispensabilityReport:
    even_chords: tuple[Chord, ...]
    bridges: tuple[Chord, ...]
    crossings: tuple[CrossingPair, ...]
    strongly_primitive: bool
    adjacent_sinks: tuple[int, int, int] | None

    @property
    def i1(self) -> bool:
        return not self.even_chords

    @property
    def i2(self) -> bool:
        return not self.bridges

    @property
    def i3(self) -> bool:
        return not self.crossings

    @property
    def i4(self) -> bool:
        return self.strongly_primitive

    @property
    def indispensable(self) -> bool:
        return self.i1 and self.i2 and self.i3 and self.i4

    def to_json(self, g: Graph) -> dict:
        def chord(f):
            return {"edge": g.names[f.edge], "ends": [f.ends[0] + 1, f.ends[1] + 1]}

        return {
            "I1": {"holds": self.i1, "even_chords": [chord(f) for f in self.even_chords]},
            "I2": {"holds": self.i2, "bridges": [chord(f) for f in self.bridges]},
            "I3": {"holds": self.i3, "crossings": [
                {"chords": [chord(c.first), chord(c.second)], "indices": list(c.indices)}
                for c in self.crossings]},
            "I4": {"holds": self.i4, "adjacent_sinks": None if self.adjacent_sinks is None else {
                "edge": g.names[self.adjacent_sinks[0]],
                "sinks": [self.adjacent_sinks[1] + 1, self.adjacent_sinks[2] + 1]}},
            "indispensable": self.indispensable,
        }


def indispensability(g: Graph, w: ClosedEvenWalk) -> IndispensabilityReport:
    chords = classified_chords(g, w)
    strong, witness = is_strongly_primitive(g, w)
    return IndispensabilityReport(
        even_chords=tuple(f for f in chords if f.kind is ChordKind.EVEN),
        bridges=tuple(f for f in chords if f.kind is ChordKind.BRIDGE),
        crossings=tuple(effective_crossings(g, w, chords)),
        strongly_primitive=strong,
        adjacent_sinks=witness,
    )
