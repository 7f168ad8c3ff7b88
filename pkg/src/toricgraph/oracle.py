"""Brute-force reference computations on the integer kernel of the incidence
matrix.  Nothing here looks at walks, blocks or chords, so these results can
be used to check the structural engine.

Kernel vectors are tuples indexed by edge, sign-normalised so that the
positive part is lexicographically larger than the negative part.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .graph import Graph
from .walks import Binomial, ClosedEvenWalk

__all__ = [
    "OracleError",
    "incidence_matrix",
    "matrix_rank",
    "normalize",
    "graver_oracle",
    "circuits_oracle",
    "fiber",
    "mu_and_indispensables_oracle",
    "ugb_oracle",
    "walk_of_vector",
    "vectors_of",
]

log = logging.getLogger(__name__)

KernelVector = tuple[int, ...]
ORACLE_MAX_EDGES = 21


class OracleError(ValueError):
    pass


def _check(g: Graph) -> None:
    if g.m > ORACLE_MAX_EDGES:
        raise OracleError(f"graph has {g.m} edges; the oracle bound is {ORACLE_MAX_EDGES}")


def incidence_matrix(g: Graph) -> list[list[int]]:
    """Vertex-by-edge 0/1 matrix."""
    a = [[0] * g.m for _ in range(g.n)]
    for e, (u, v) in enumerate(g.edges):
        a[u][e] = a[v][e] = 1
    return a


def matrix_rank(rows: Sequence[Sequence[int]]) -> int:
    """Exact rank over the rationals."""
    mat = [[Fraction(x) for x in r] for r in rows]
    rank, cols = 0, len(mat[0]) if mat else 0
    for c in range(cols):
        piv = next((i for i in range(rank, len(mat)) if mat[i][c] != 0), None)
        if piv is None:
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][c] != 0:
                f = mat[i][c] / mat[rank][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    return rank


def normalize(u: Sequence[int]) -> KernelVector:
    return Binomial.from_vector(u).vector


def _in_kernel(g: Graph, u: Sequence[int]) -> bool:
    sums = [0] * g.n
    for e, (a, b) in enumerate(g.edges):
        sums[a] += u[e]
        sums[b] += u[e]
    return not any(sums)


# -- Graver basis ----------------------------------------------------------------------

def _edge_order(g: Graph) -> list[int]:
    """Edges in an order that finishes off vertices early."""
    seen, rank = set(), {}
    for root in range(g.n):
        if root in seen:
            continue
        queue = [root]
        seen.add(root)
        while queue:
            v = queue.pop(0)
            rank[v] = len(rank)
            for w in g.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
    return sorted(range(g.m), key=lambda e: (max(rank[x] for x in g.edges[e]),
                                             min(rank[x] for x in g.edges[e])))


@lru_cache(maxsize=32)
def _graver_box(g: Graph, box: int) -> frozenset[KernelVector]:
    m = g.m
    order = _edge_order(g)
    ends = [g.edges[e] for e in order]
    remaining = [0] * g.n
    for a, b in ends:
        remaining[a] += 1
        remaining[b] += 1
    resid = [0] * g.n
    x = [0] * m                      # indexed by DFS position
    # known elements, both signs, filed under the last DFS position of their support
    buckets: list[list[list[tuple[int, int]]]] = [[] for _ in range(m)]
    found: list[KernelVector] = []
    state = {"abs": 0, "used": 0}

    def dominated(p: int) -> bool:
        for h in buckets[p]:
            for q, val in h:
                xv = x[q]
                if (val > 0 and xv < val) or (val < 0 and xv > val):
                    break
            else:
                return True
        return False

    def add(vec: list[int]) -> None:
        sparse = [(q, vec[q]) for q in range(m) if vec[q]]
        last = sparse[-1][0]
        buckets[last].append(sparse)
        buckets[last].append([(q, -v) for q, v in sparse])
        u = [0] * m
        for q, v in sparse:
            u[order[q]] = v
        found.append(normalize(u))

    def dfs(p: int, limit: int, started: bool) -> None:
        if p == m:
            if started and state["used"] == limit:
                add(x)
            return
        a, b = ends[p]
        remaining[a] -= 1
        remaining[b] -= 1
        values = range(-box, box + 1) if started else range(0, box + 1)
        for val in values:
            ra, rb = resid[a] + val, resid[b] + val
            if abs(ra) > box * remaining[a] or abs(rb) > box * remaining[b]:
                continue
            delta = abs(ra) - abs(resid[a]) + abs(rb) - abs(resid[b])
            used = state["used"] + abs(val)
            total = state["abs"] + delta
            if used + (total + 1) // 2 > limit:
                continue
            x[p] = val
            resid[a], resid[b] = ra, rb
            state["abs"], state["used"] = total, used
            if not (val and dominated(p)):
                dfs(p + 1, limit, started or val != 0)
            state["abs"] -= delta
            state["used"] -= abs(val)
            resid[a] -= val
            resid[b] -= val
            x[p] = 0
        remaining[a] += 1
        remaining[b] += 1

    for limit in range(2, box * m + 1, 2):
        dfs(0, limit, False)
    return frozenset(found)


def graver_oracle(g: Graph, box: int = 2, certify: bool = False) -> frozenset[KernelVector]:
    """Conformally minimal nonzero kernel vectors with entries in ``[-box, box]``.

    Vectors are produced in order of increasing 1-norm; a vector is kept
    unless it conformally dominates one found earlier.  With ``certify`` the
    search is repeated with a wider box until two runs agree.
    """
    _check(g)
    if g.m == 0:
        return frozenset()
    result = _graver_box(g, box)
    while certify:
        wider = _graver_box(g, box + 1)
        if wider == result:
            break
        log.warning("Graver box %d was too narrow; widening", box)
        box, result = box + 1, wider
    return result


# -- circuits ---------------------------------------------------------------------------

def circuits_oracle(g: Graph, box: int = 2) -> frozenset[KernelVector]:
    """Kernel vectors of inclusion-minimal support.

    Every circuit is in the Graver basis, so the support-minimal Graver
    vectors are exactly the circuits; each is double-checked by confirming
    that its support columns span a kernel of dimension one.
    """
    gr = graver_oracle(g, box)
    supports = {u: frozenset(i for i, x in enumerate(u) if x) for u in gr}
    out = set()
    a = incidence_matrix(g)
    for u, s in supports.items():
        if any(t < s for t in supports.values()):
            continue
        cols = sorted(s)
        if matrix_rank([[row[c] for c in cols] for row in a]) != len(cols) - 1:
            raise AssertionError(f"support of {u} does not carry a one-dimensional kernel")
        out.add(u)
    return frozenset(out)


# -- fibers, mu and indispensables ---------------------------------------------------------

def fiber(g: Graph, degree: Sequence[int]) -> list[tuple[int, ...]]:
    """All exponent vectors ``x >= 0`` with vertex degrees ``degree``."""
    order = _edge_order(g)
    ends = [g.edges[e] for e in order]
    remaining = [0] * g.n
    for a, b in ends:
        remaining[a] += 1
        remaining[b] += 1
    resid = list(degree)
    if any(r and not remaining[v] for v, r in enumerate(resid)):
        return []
    x = [0] * g.m
    out = []

    def dfs(p: int) -> None:
        if p == len(ends):
            out.append(tuple(x))
            return
        a, b = ends[p]
        remaining[a] -= 1
        remaining[b] -= 1
        for val in range(min(resid[a], resid[b]) + 1):
            resid[a] -= val
            resid[b] -= val
            if not ((remaining[a] == 0 and resid[a]) or (remaining[b] == 0 and resid[b])):
                x[order[p]] = val
                dfs(p + 1)
            resid[a] += val
            resid[b] += val
        x[order[p]] = 0
        remaining[a] += 1
        remaining[b] += 1

    dfs(0)
    return out


def _degree_of(g: Graph, mono: Sequence[int]) -> tuple[int, ...]:
    deg = [0] * g.n
    for e, (a, b) in enumerate(g.edges):
        deg[a] += mono[e]
        deg[b] += mono[e]
    return tuple(deg)


class _UnionFind:
    def __init__(self, k: int):
        self.parent = list(range(k))

    def find(self, i: int) -> int:
        while self.parent[i] != i:
            self.parent[i] = self.parent[self.parent[i]]
            i = self.parent[i]
        return i

    def union(self, i: int, j: int) -> None:
        self.parent[self.find(i)] = self.find(j)

    def groups(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for i in range(len(self.parent)):
            out.setdefault(self.find(i), []).append(i)
        return sorted(out.values())


def _components_gcd(points: list[tuple[int, ...]]) -> list[list[int]]:
    uf = _UnionFind(len(points))
    by_var: dict[int, int] = {}
    for i, p in enumerate(points):
        for e, x in enumerate(p):
            if x:
                if e in by_var:
                    uf.union(i, by_var[e])
                else:
                    by_var[e] = i
    return uf.groups()


def _components_moves(points: list[tuple[int, ...]], moves: list[tuple[tuple[int, ...], tuple[int, ...]]]
                      ) -> list[list[int]]:
    index = {p: i for i, p in enumerate(points)}
    uf = _UnionFind(len(points))
    for i, p in enumerate(points):
        for lhs, rhs in moves:
            for src, dst in ((lhs, rhs), (rhs, lhs)):
                if all(a >= s for a, s in zip(p, src)):
                    q = tuple(a - s + d for a, s, d in zip(p, src, dst))
                    uf.union(i, index[q])
    return uf.groups()


def mu_and_indispensables_oracle(g: Graph, method: str = "gcd", reverse: bool = False,
                                 box: int = 2) -> tuple[int, frozenset[KernelVector]]:
    """Minimal number of generators of the toric ideal, and its indispensable
    binomials, from the fibers at the degrees of the Graver elements.

    ``method="gcd"`` joins monomials of a fiber sharing a variable;
    ``method="moves"`` joins monomials connected by moves of the generators
    chosen at lower degrees.  ``reverse`` flips the generator choice of the
    moves method; neither choice changes the answer.
    """
    if method not in ("gcd", "moves"):
        raise ValueError(f"unknown method {method!r}")
    gr = graver_oracle(g, box)
    degrees = sorted({_degree_of(g, Binomial.from_vector(u).plus) for u in gr},
                     key=lambda d: (sum(d), d))
    mu = 0
    indisp = set()
    chosen: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    total = None
    batch: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    for deg in degrees:
        if sum(deg) != total:
            chosen.extend(batch)
            batch, total = [], sum(deg)
        points = fiber(g, deg)
        if method == "gcd":
            comps = _components_gcd(points)
        else:
            comps = _components_moves(points, chosen)
        mu += len(comps) - 1
        if len(points) == 2 and len(comps) == 2:
            indisp.add(normalize([a - b for a, b in zip(*points)]))
        reps = [points[c[0]] for c in comps]
        if reverse:
            reps.reverse()
        batch.extend((reps[0], r) for r in reps[1:])
    return mu, frozenset(indisp)


# -- universal Groebner basis ---------------------------------------------------------

def ugb_oracle(g: Graph, box: int = 2, tol: float = 1e-9) -> frozenset[KernelVector]:
    """Graver vectors whose segment is an edge of the polytope of its fiber.

    The segment ``[p, q]`` is an edge iff the midpoint of ``p`` and ``q``
    has no convex representation giving weight to other fiber points; that is
    decided by a linear program.
    """
    from scipy.optimize import linprog

    out = set()
    for u in graver_oracle(g, box):
        b = Binomial.from_vector(u)
        p, q = b.plus, b.minus
        others = [x for x in fiber(g, _degree_of(g, p)) if x not in (p, q)]
        if not others:
            out.add(u)
            continue
        pts = [p, q] + others
        a_eq = [[pt[e] for pt in pts] for e in range(g.m)] + [[1] * len(pts)]
        b_eq = [(p[e] + q[e]) / 2 for e in range(g.m)] + [1]
        c = [0, 0] + [-1] * len(others)
        res = linprog(c, A_eq=a_eq, b_eq=b_eq, bounds=(0, None), method="highs")
        if res.status != 0:
            raise OracleError(f"linear program failed for {b.text()}: {res.message}")
        if -res.fun <= tol:
            out.add(u)
    return frozenset(out)


# -- vectors back to walks ------------------------------------------------------------

def walk_of_vector(g: Graph, u: Sequence[int]) -> ClosedEvenWalk:
    """A closed walk through the support of ``u`` taking each edge ``|u_e|``
    times, positive edges at odd positions and negative ones at even."""
    if len(u) != g.m or not any(u):
        raise OracleError("need a nonzero vector with one entry per edge")
    if not _in_kernel(g, u):
        raise OracleError("vector is not in the kernel of the incidence matrix")
    left = [abs(x) for x in u]
    length = sum(left)
    edges: list[int] = []
    verts: list[int] = []
    start_edge = next(e for e, x in enumerate(u) if x > 0)

    def dfs(v: int, start: int) -> bool:
        if len(edges) == length:
            return v == start
        want = 1 if len(edges) % 2 == 0 else -1
        for e in g.incident[v]:
            if left[e] and u[e] * want > 0:
                left[e] -= 1
                edges.append(e)
                verts.append(v)
                if dfs(g.other_end(e, v), start):
                    return True
                edges.pop()
                verts.pop()
                left[e] += 1
        return False

    for s in g.edges[start_edge]:
        if dfs(s, s):
            return ClosedEvenWalk(tuple(edges), tuple(verts))
    raise OracleError("support admits no closed alternating walk")


def vectors_of(items: Iterable) -> frozenset[KernelVector]:
    """Kernel vectors of binomials or basis elements, for comparison with the oracle."""
    out = set()
    for it in items:
        b = getattr(it, "binomial", it)
        out.add(b.vector)
    return frozenset(out)
