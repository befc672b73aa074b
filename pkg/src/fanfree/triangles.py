"""Triangle bookkeeping: counts, codegrees, lifts to 3-uniform systems.

The lift of a graph is the 3-uniform hypergraph whose edges are exactly the
vertex sets of triangles; it is how graph statements get transported to
hypergraph Turán territory.  Also implements the two classical counting
identities used as cross-checks everywhere else (Goodman's complement
identity and the cherry/triangle degree identity).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .graph import Graph, GraphInputError, bits


@dataclass(frozen=True)
class TriangleTable:
    """All triangles of a graph plus the codegree of every edge."""

    n: int
    triangles: tuple[tuple[int, int, int], ...]  # lexicographic, u<v<w
    codegree: dict[tuple[int, int], int]  # keyed by (u, v), u<v, edges only

    @property
    def count(self) -> int:
        return len(self.triangles)


def codegree(g: Graph, u: int, v: int) -> int:
    """|N(u) ∩ N(v)| for distinct vertices (edge not required)."""
    if u == v:
        raise GraphInputError("codegree needs two distinct vertices")
    g._check_vertex(u)
    g._check_vertex(v)
    return (g.adj[u] & g.adj[v]).bit_count()


def count_triangles(g: Graph) -> TriangleTable:
    tris: list[tuple[int, int, int]] = []
    codeg: dict[tuple[int, int], int] = {}
    for u in range(g.n):
        row_u = g.adj[u]
        for v in bits(row_u >> (u + 1) << (u + 1)):
            common = row_u & g.adj[v]
            codeg[(u, v)] = common.bit_count()
            above = common >> (v + 1) << (v + 1)
            for w in bits(above):
                tris.append((u, v, w))
    return TriangleTable(g.n, tuple(tris), codeg)


def triangle_count(g: Graph) -> int:
    """Just the number, skipping the table."""
    total = 0
    for u, v in g.edges():
        total += (g.adj[u] & g.adj[v] >> (v + 1) << (v + 1)).bit_count()
    return total


# -- 3-uniform triple systems -------------------------------------------


@dataclass(frozen=True)
class TripleSystem:
    """A 3-uniform hypergraph on vertices 0..n-1."""

    n: int
    triples: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        seen = set()
        for t in self.triples:
            if len(set(t)) != 3:
                raise GraphInputError(f"degenerate triple {t}")
            if tuple(sorted(t)) != t:
                raise GraphInputError(f"triple {t} not sorted")
            if t[0] < 0 or t[2] >= self.n:
                raise GraphInputError(f"triple {t} outside 0..{self.n - 1}")
            if t in seen:
                raise GraphInputError(f"duplicate triple {t}")
            seen.add(t)

    def to_text(self) -> str:
        """One 'u v w' line per triple, sorted."""
        return "".join(f"{u} {v} {w}\n" for u, v, w in sorted(self.triples))

    @classmethod
    def from_text(cls, text: str, n: int | None = None) -> "TripleSystem":
        triples = []
        top = -1
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if len(parts) != 3:
                raise GraphInputError(f"line {lineno}: expected 3 vertices, got {len(parts)}")
            try:
                t = tuple(sorted(int(p) for p in parts))
            except ValueError:
                raise GraphInputError(f"line {lineno}: non-integer vertex") from None
            triples.append(t)
            top = max(top, t[2])
        size = top + 1 if n is None else n
        return cls(size, tuple(sorted(set(triples))))

    def link(self, v: int) -> Graph:
        """Link graph of v: edge {a, b} for every triple {v, a, b}."""
        adj = [0] * self.n
        for t in self.triples:
            if v in t:
                a, b = (x for x in t if x != v)
                adj[a] |= 1 << b
                adj[b] |= 1 << a
        return Graph(self.n, adj)


def lift(g: Graph) -> TripleSystem:
    """Triple system of the triangles of g."""
    return TripleSystem(g.n, count_triangles(g).triangles)


# -- identities ----------------------------------------------------------


@dataclass(frozen=True)
class GoodmanReport:
    lhs: int
    rhs: int
    holds: bool
    triangles: int
    complement_triangles: int


def goodman_check(g: Graph) -> GoodmanReport:
    """N(K3,G) + N(K3,Ḡ) + (1/2)·Σ_v d(v)(n-1-d(v))  ==  C(n,3)."""
    from .graph import complement

    n = g.n
    t = triangle_count(g)
    tc = triangle_count(complement(g))
    mixed = Fraction(sum(d * (n - 1 - d) for d in (row.bit_count() for row in g.adj)), 2)
    lhs = Fraction(t + tc) + mixed
    rhs = n * (n - 1) * (n - 2) // 6
    if lhs.denominator != 1:  # cannot happen on a valid graph; belt and braces
        return GoodmanReport(-1, rhs, False, t, tc)
    return GoodmanReport(int(lhs), rhs, int(lhs) == rhs, t, tc)


def cherry_count(g: Graph) -> int:
    """Number of induced 2-edge paths (cherries)."""
    total = 0
    for v in range(g.n):
        row = g.adj[v]
        d = row.bit_count()
        inner = 0
        for a in bits(row):
            inner += (row & g.adj[a]).bit_count()
        # inner counted each adjacent pair inside N(v) twice
        total += d * (d - 1) // 2 - inner // 2
    return total


def cherry_identity_check(g: Graph) -> tuple[int, int, bool]:
    """Σ_v C(d(v),2) == cherries + 3·triangles; returns (lhs, rhs, holds)."""
    lhs = sum(d * (d - 1) // 2 for d in (row.bit_count() for row in g.adj))
    rhs = cherry_count(g) + 3 * triangle_count(g)
    return lhs, rhs, lhs == rhs
