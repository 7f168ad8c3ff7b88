"""Simple undirected graphs with stable edge labels.

Vertices are 0-based internally and 1-based in every text format.  Edge
``i`` carries the variable ``e{i+1}`` unless explicit names are given.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "BlockDecomposition",
    "Cycle",
    "parse_graph",
    "blocks_and_cut_vertices",
    "blocks_of_edges",
    "enumerate_simple_cycles",
    "canonical_label",
]


class GraphError(ValueError):
    """Raised for graphs that are not finite, simple and undirected."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        object.__setattr__(self, "edges", edges)
        if self.vertex_count < 0:
            raise GraphError("negative vertex count")
        seen = set()
        for i, (u, v) in enumerate(edges):
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphError(f"edge {i + 1} ({u + 1}, {v + 1}) has a vertex out of range")
            if u == v:
                raise GraphError(f"edge {i + 1} is a loop at vertex {u + 1}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"edge {i + 1} repeats the pair ({u + 1}, {v + 1})")
            seen.add(key)
        if not self.names:
            object.__setattr__(self, "names", tuple(f"e{i + 1}" for i in range(len(edges))))
        else:
            names = tuple(str(s) for s in self.names)
            if len(names) != len(edges):
                raise GraphError(f"{len(names)} names given for {len(edges)} edges")
            if len(set(names)) != len(names):
                raise GraphError("edge names must be distinct")
            object.__setattr__(self, "names", names)

    @classmethod
    def from_edges(cls, edges: Iterable[Sequence[int]], vertex_count: int | None = None,
                   names: Sequence[str] | None = None) -> "Graph":
        """Build a graph from 1-based vertex pairs."""
        pairs = [(int(u) - 1, int(v) - 1) for u, v in edges]
        if vertex_count is None:
            vertex_count = 1 + max((max(p) for p in pairs), default=-1)
        return cls(vertex_count, tuple(pairs), tuple(names or ()))

    @property
    def n(self) -> int:
        return self.vertex_count

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex, in increasing order."""
        inc: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for i, (u, v) in enumerate(self.edges):
            inc[u].append(i)
            inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def _pair_index(self) -> dict[tuple[int, int], int]:
        return {(min(u, v), max(u, v)): i for i, (u, v) in enumerate(self.edges)}

    @cached_property
    def adjacency_masks(self) -> tuple[int, ...]:
        masks = [0] * self.vertex_count
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def edge_between(self, u: int, v: int) -> int | None:
        return self._pair_index.get((min(u, v), max(u, v)))

    def other_end(self, e: int, v: int) -> int:
        a, b = self.edges[e]
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v + 1} is not an endpoint of {self.names[e]}")

    def degree(self, v: int) -> int:
        return len(self.incident[v])

    def neighbors(self, v: int) -> list[int]:
        return [self.other_end(e, v) for e in self.incident[v]]

    def edge_index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise GraphError(f"unknown edge name {name!r}") from None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``; edge order kept."""
        return Graph(self.vertex_count, tuple((perm[u], perm[v]) for u, v in self.edges), self.names)

    def components(self) -> list[list[int]]:
        seen = [False] * self.vertex_count
        out = []
        for s in range(self.vertex_count):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in self.neighbors(x):
                    if not seen[y]:
                        seen[y] = True
                        stack.append(y)
            out.append(sorted(comp))
        return out

    def is_connected(self) -> bool:
        return self.vertex_count <= 1 or len(self.components()) == 1

    def is_bipartite_component(self, comp: Iterable[int]) -> bool:
        comp = list(comp)
        color = {comp[0]: 0}
        stack = [comp[0]]
        while stack:
            x = stack.pop()
            for y in self.neighbors(x):
                if y not in color:
                    color[y] = 1 - color[x]
                    stack.append(y)
                elif color[y] == color[x]:
                    return False
        return True

    def to_json(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "edges": [[u + 1, v + 1] for u, v in self.edges],
            "names": list(self.names),
        }

    def to_edge_list(self) -> str:
        return "".join(f"{u + 1} {v + 1} # {name}\n" for (u, v), name in zip(self.edges, self.names))

    def __repr__(self) -> str:
        body = ", ".join(f"{u + 1}-{v + 1}" for u, v in self.edges)
        return f"Graph(n={self.vertex_count}, edges=[{body}])"


# -- parsing -----------------------------------------------------------------

_INT = re.compile(r"[0-9]+")


def _simple(n: int, pairs: list[tuple[int, int]], names: list[str] | None,
            where: list[tuple[int, int]]) -> Graph:
    seen: dict[tuple[int, int], int] = {}
    for k, (u, v) in enumerate(pairs):
        line, col = where[k]
        if u == v:
            raise ParseError(f"loop at vertex {u + 1} (graph must be simple)", line, col)
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(f"duplicate edge {u + 1} {v + 1} (graph must be simple)", line, col)
        seen[key] = k
    return Graph(n, tuple(pairs), tuple(names) if names else ())


def _parse_edge_list(text: str) -> Graph:
    pairs, names, where = [], [], []
    named = 0
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, _, comment = raw.partition("#")
        if not body.strip():
            continue
        tokens = body.split()
        if len(tokens) != 2:
            raise ParseError(f"expected 'u v', got {body.strip()!r}", lineno)
        vals = []
        for tok in tokens:
            if not _INT.fullmatch(tok) or int(tok) < 1:
                raise ParseError(f"vertex ids must be positive integers, got {tok!r}",
                                 lineno, raw.index(tok) + 1)
            vals.append(int(tok) - 1)
        name = comment.strip()
        named += bool(name)
        pairs.append((vals[0], vals[1]))
        names.append(name or f"e{len(pairs)}")
        where.append((lineno, 1))
    n = 1 + max((max(p) for p in pairs), default=-1)
    return _simple(n, pairs, names if named else None, where)


def _parse_json(text: str) -> Graph:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or "edges" not in data:
        raise ParseError("expected an object with an 'edges' array", 1)
    pairs, where = [], []
    for k, item in enumerate(data["edges"]):
        if (not isinstance(item, list) or len(item) != 2
                or not all(isinstance(x, int) and x >= 1 for x in item)):
            raise ParseError(f"edges[{k}] must be a pair of positive integers", 1)
        pairs.append((item[0] - 1, item[1] - 1))
        where.append((1, 1))
    n = data.get("vertices")
    top = 1 + max((max(p) for p in pairs), default=-1)
    if n is None:
        n = top
    elif not isinstance(n, int) or n < top:
        raise ParseError(f"'vertices' must be an integer >= {top}", 1)
    names = data.get("names")
    if names is not None and (not isinstance(names, list) or len(names) != len(pairs)):
        raise ParseError("'names' must list one name per edge", 1)
    return _simple(n, pairs, names, where)


_DOT_TOKEN = re.compile(r"""
    (?P<ws>\s+|//[^\n]*|/\*.*?\*/|\#[^\n]*)
  | (?P<id>[A-Za-z_][A-Za-z_0-9]*|-?[0-9]+(?:\.[0-9]+)?)
  | (?P<str>"(?:[^"\\]|\\.)*")
  | (?P<op>--|->|[{}\[\];,=])
""", re.X | re.S)


def _dot_tokens(text: str) -> list[tuple[str, str, int, int]]:
    toks, pos = [], 0
    while pos < len(text):
        m = _DOT_TOKEN.match(text, pos)
        line = text.count("\n", 0, pos) + 1
        col = pos - (text.rfind("\n", 0, pos) + 1) + 1
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", line, col)
        if m.lastgroup != "ws":
            val = m.group()
            if m.lastgroup == "str":
                val = val[1:-1]
            toks.append((m.lastgroup, val, line, col))
        pos = m.end()
    return toks


def _parse_dot(text: str) -> Graph:
    toks = _dot_tokens(text)
    i = 0

    def expect(kind, value=None):
        nonlocal i
        if i >= len(toks):
            last = toks[-1] if toks else ("", "", 1, 1)
            raise ParseError(f"unexpected end of input, expected {value or kind}", last[2], last[3])
        tok = toks[i]
        if tok[0] != kind and not (kind == "id" and tok[0] == "str") or (value and tok[1] != value):
            raise ParseError(f"expected {value or kind}, got {tok[1]!r}", tok[2], tok[3])
        i += 1
        return tok

    def peek(value):
        return i < len(toks) and toks[i][1] == value

    if i < len(toks) and toks[i][1] == "strict":
        i += 1
    head = expect("id")
    if head[1] != "graph":
        raise ParseError("only undirected 'graph' blocks are supported", head[2], head[3])
    if not peek("{"):
        expect("id")
    expect("op", "{")
    pairs, names, where, named = [], [], [], False
    top = -1

    def node(tok):
        if tok[0] not in ("id", "str") or not re.fullmatch(r"[0-9]+", tok[1]) or int(tok[1]) < 1:
            raise ParseError(f"node ids must be positive integers, got {tok[1]!r}", tok[2], tok[3])
        return int(tok[1]) - 1

    def attrs():
        nonlocal i
        out = {}
        while peek("["):
            i += 1
            while not peek("]"):
                key = expect("id")[1]
                expect("op", "=")
                out[key] = expect("id")[1]
                if peek(",") or peek(";"):
                    i += 1
            expect("op", "]")
        return out

    while not peek("}"):
        if i >= len(toks):
            expect("op", "}")
        tok = toks[i]
        if tok[1] in ("node", "edge", "graph") and i + 1 < len(toks) and toks[i + 1][1] == "[":
            i += 1
            attrs()
        elif tok[0] in ("id", "str") and i + 1 < len(toks) and toks[i + 1][1] == "=":
            i += 3
        else:
            i += 1
            chain = [node(tok)]
            while peek("--") or peek("->"):
                op = toks[i]
                if op[1] == "->":
                    raise ParseError("directed edge in undirected graph", op[2], op[3])
                i += 1
                nxt = toks[i] if i < len(toks) else tok
                i += 1
                chain.append(node(nxt))
            top = max(top, *chain)
            a = attrs()
            for u, v in zip(chain, chain[1:]):
                pairs.append((u, v))
                label = a.get("label")
                named |= label is not None
                names.append(label or f"e{len(pairs)}")
                where.append((tok[2], tok[3]))
        if peek(";") or peek(","):
            i += 1
    expect("op", "}")
    return _simple(top + 1, pairs, names if named else None, where)


def parse_graph(text: str, format: str = "edge-list") -> Graph:
    """Parse a graph from ``edge-list``, ``json`` or ``dot`` text.

    Vertex ids in the text are 1-based.  Edges keep their input order, which
    fixes the variable indices.  Loops and repeated pairs raise
    :class:`ParseError` with the offending position.
    """
    parsers = {"edge-list": _parse_edge_list, "json": _parse_json, "dot": _parse_dot}
    if format not in parsers:
        raise ValueError(f"unknown graph format {format!r}")
    return parsers[format](text)


# -- blocks ------------------------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]
    # (block index, cut vertex) incidences of the block-cut tree
    block_tree: tuple[tuple[int, int], ...]

    def block_vertices(self, g: Graph) -> list[frozenset[int]]:
        return [frozenset(v for e in b for v in g.edges[e]) for b in self.blocks]


def blocks_of_edges(g: Graph, edge_ids: Iterable[int]) -> BlockDecomposition:
    """Blocks and cut vertices of the subgraph of ``g`` spanned by ``edge_ids``.

    Iterative Hopcroft-Tarjan over an edge stack.  Isolated vertices of the
    subgraph are ignored; each returned block is a set of edge indices.
    """
    edge_set = sorted(set(edge_ids))
    adj: dict[int, list[tuple[int, int]]] = {}
    for e in edge_set:
        u, v = g.edges[e]
        adj.setdefault(u, []).append((v, e))
        adj.setdefault(v, []).append((u, e))
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[frozenset[int]] = []
    counter = 0
    for root in sorted(adj):
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        edge_stack: list[int] = []
        # frames: (vertex, parent edge, neighbour iterator)
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            x, pe, it = stack[-1]
            advanced = False
            for y, e in it:
                if e == pe:
                    continue
                if y not in disc:
                    disc[y] = low[y] = counter
                    counter += 1
                    edge_stack.append(e)
                    stack.append((y, e, iter(adj[y])))
                    advanced = True
                    break
                if disc[y] < disc[x]:
                    edge_stack.append(e)
                    low[x] = min(low[x], disc[y])
            if advanced:
                continue
            stack.pop()
            if stack:
                p = stack[-1][0]
                low[p] = min(low[p], low[x])
                if low[x] >= disc[p]:
                    comp = []
                    while True:
                        f = edge_stack.pop()
                        comp.append(f)
                        if f == pe:
                            break
                    blocks.append(frozenset(comp))
    blocks.sort(key=min)
    membership: dict[int, list[int]] = {}
    for bi, b in enumerate(blocks):
        for v in {v for e in b for v in g.edges[e]}:
            membership.setdefault(v, []).append(bi)
    cuts = frozenset(v for v, bs in membership.items() if len(bs) >= 2)
    tree = tuple(sorted((bi, v) for v in cuts for bi in membership[v]))
    return BlockDecomposition(tuple(blocks), cuts, tree)


def blocks_and_cut_vertices(g: Graph) -> BlockDecomposition:
    return blocks_of_edges(g, range(g.m))


# -- cycles ------------------------------------------------------------------

@dataclass(frozen=True)
class Cycle:
    """A simple cycle; ``edges[i]`` joins ``vertices[i]`` and ``vertices[i+1]``."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_mask(self) -> int:
        return sum(1 << v for v in self.vertices)

    @cached_property
    def edge_mask(self) -> int:
        return sum(1 << e for e in self.edges)


def enumerate_simple_cycles(g: Graph, parity: str = "any") -> list[Cycle]:
    """Every simple cycle of ``g`` once, up to rotation and reflection.

    A cycle is reported starting at its smallest vertex and oriented so that
    the second vertex is smaller than the last.  ``parity`` filters on the
    number of edges: ``"even"``, ``"odd"`` or ``"any"``.
    """
    if parity not in ("even", "odd", "any"):
        raise ValueError(f"parity must be even, odd or any, not {parity!r}")
    want = {"even": 0, "odd": 1}.get(parity)
    found: list[Cycle] = []
    adj = [sorted(g.neighbors(v)) for v in range(g.n)]
    for s in range(g.n):
        path = [s]
        on_path = 1 << s
        stack = [iter([y for y in adj[s] if y > s])]
        while stack:
            y = next(stack[-1], None)
            if y is None:
                stack.pop()
                on_path &= ~(1 << path.pop())
                continue
            path.append(y)
            on_path |= 1 << y
            # close back to s; path[1] < y keeps one of the two orientations
            if len(path) >= 3 and path[1] < y and g.edge_between(y, s) is not None:
                if want is None or len(path) % 2 == want:
                    verts = tuple(path)
                    es = tuple(g.edge_between(verts[i], verts[(i + 1) % len(verts)])
                               for i in range(len(verts)))
                    found.append(Cycle(verts, es))
            stack.append(iter([z for z in adj[y] if z > s and not on_path >> z & 1]))
    found.sort(key=lambda c: (len(c), c.vertices))
    return found


# -- canonical labelling -------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Equitable refinement: split cells by neighbour counts into every cell."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            keyed: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                key = tuple(bin(adj[v] & m).count("1") for m in masks)
                keyed.setdefault(key, []).append(v)
            out.extend(keyed[k] for k in sorted(keyed))
        if len(out) == len(cells):
            return out
        cells = out


def canonical_label(g: Graph, max_vertices: int = 10) -> bytes:
    """Bytes identifying the isomorphism class of ``g``.

    Individualisation-refinement over degree-seeded equitable partitions; the
    code is the lexicographically smallest upper-triangle adjacency string
    among all leaves of the search tree.
    """
    n = g.n
    if n > max_vertices:
        raise GraphError(f"canonical labelling is limited to {max_vertices} vertices, got {n}")
    adj = g.adjacency_masks
    best: tuple[int, ...] | None = None

    def code(order: list[int]) -> tuple[int, ...]:
        return tuple(1 if adj[order[i]] >> order[j] & 1 else 0
                     for i in range(n) for j in range(i + 1, n))

    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(g.degree(v), []).append(v)
    start = _refine(adj, [by_degree[d] for d in sorted(by_degree)])

    stack = [start]
    while stack:
        cells = stack.pop()
        target = next((k for k, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            c = code([c[0] for c in cells])
            if best is None or c < best:
                best = c
            continue
        cell = cells[target]
        for v in reversed(cell):
            rest = [u for u in cell if u != v]
            stack.append(_refine(adj, cells[:target] + [[v], rest] + cells[target + 1:]))
    bits = "".join(map(str, best or ()))
    return bytes([n]) + int("1" + bits, 2).to_bytes((len(bits) + 8) // 8, "big")

