"""Extremal constructions and the closed-form triangle counts they attain.

The maximizers for triangles under a forbidden k-fan come in two families:

  * odd k:   all non-edges between an independent set and two disjoint K_k
             ("two cliques under a blanket of apexes");
  * even k:  the same blanket over a single rigid graph H_k on 2k-1 vertices
             with degree sequence (k-1, ..., k-1, k-2).

H_k is two K_{k-1}'s {u_i}, {v_i} plus one extra vertex x, with a partial
matching u_i v_i (i <= k/2-1) between the cliques and x picking up the slack
(x ~ u_i for i >= k/2, x ~ v_i for i >= k/2+1).  Its "co-bipartite dual"
H'_k — complete bipartite K_{k-1,k-1} minus a (k/2-1)-matching, plus a vertex
z joined to the matching's endpoints — is the triangle-minimizer for the same
degree sequence.  For k=2 the maximizer is simply a packing of K_4's.

Closed forms are returned as FormulaResult carrying the n-threshold from
which exactness is asserted (4k^3 for the fan formulas; the 3-uniform star
formulas only promise "sufficiently large", encoded as valid_from=None).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .graph import (
    Graph,
    GraphInputError,
    complete_graph,
    disjoint_union,
    empty_graph,
    from_edges,
    join,
)


class Kind(enum.Enum):
    ODD_EXTREMAL = "odd-extremal"
    EVEN_EXTREMAL = "even-extremal"
    HK = "hk"
    HK_PRIME = "hk-prime"
    GL = "gl"
    K4_PACKING = "k4-packing"


@dataclass(frozen=True)
class ConstructionSpec:
    kind: Kind
    k: int
    n: int | None = None  # required for the extremal/packing kinds

    def __post_init__(self):
        k, n = self.k, self.n
        if self.kind is Kind.K4_PACKING:
            if k != 2:
                raise GraphInputError("K4 packings are the k=2 construction")
            if n is None or n < 3:
                raise GraphInputError("K4 packing needs n >= 3")
            return
        if self.kind is Kind.ODD_EXTREMAL:
            if k < 3 or k % 2 == 0:
                raise GraphInputError("odd-extremal needs odd k >= 3")
            if n is None or n < 2 * k:
                raise GraphInputError("odd-extremal needs n >= 2k")
            return
        if k < 4 or k % 2:
            raise GraphInputError(f"{self.kind.value} needs even k >= 4")
        if self.kind is Kind.EVEN_EXTREMAL:
            if n is None or n < 2 * k:
                raise GraphInputError("even-extremal needs n >= 2k")
        elif n is not None and n != 2 * k - 1:
            raise GraphInputError(f"{self.kind.value} lives on exactly 2k-1 vertices")


@dataclass(frozen=True)
class FormulaResult:
    value: int
    valid_from: int | None  # None: exact only for sufficiently large n
    formula_id: str


def build_hk(k: int) -> Graph:
    """H_k on 2k-1 vertices: u-clique 0..k-2, v-clique k-1..2k-3, x last."""
    ConstructionSpec(Kind.HK, k)
    u = list(range(k - 1))
    v = list(range(k - 1, 2 * k - 2))
    x = 2 * k - 2
    edges = [(a, b) for i, a in enumerate(u) for b in u[i + 1 :]]
    edges += [(a, b) for i, a in enumerate(v) for b in v[i + 1 :]]
    half = k // 2
    edges += [(u[i], v[i]) for i in range(half - 1)]  # matching u_i v_i, i <= k/2-1
    edges += [(u[i], x) for i in range(half - 1, k - 1)]  # x ~ u_i, i >= k/2
    edges += [(v[i], x) for i in range(half, k - 1)]  # x ~ v_i, i >= k/2+1
    return from_edges(2 * k - 1, edges)


def build_hk_prime(k: int) -> Graph:
    """H'_k: K_{k-1,k-1} with the matching x_i y_i (i <= k/2-1) subdivided
    through one shared vertex z (parts 0..k-2 and k-1..2k-3, z last)."""
    ConstructionSpec(Kind.HK_PRIME, k)
    xs = list(range(k - 1))
    ys = list(range(k - 1, 2 * k - 2))
    z = 2 * k - 2
    half = k // 2
    edges = [
        (xs[i], ys[j])
        for i in range(k - 1)
        for j in range(k - 1)
        if i != j or i >= half - 1
    ]
    edges += [(xs[i], z) for i in range(half - 1)]
    edges += [(ys[i], z) for i in range(half - 1)]
    return from_edges(2 * k - 1, edges)


def build_gl(k: int) -> Graph:
    """Same graph described bottom-up: complete bipartite minus a
    (k/2-1)-matching, plus z on the missed endpoints; z is vertex 0 here."""
    ConstructionSpec(Kind.GL, k)
    xs = list(range(1, k))
    ys = list(range(k, 2 * k - 1))
    half = k // 2
    edges = [
        (xs[i], ys[j]) for i in range(k - 1) for j in range(k - 1) if i != j
    ]
    edges += [(xs[i], ys[i]) for i in range(half - 1, k - 1)]
    edges += [(0, xs[i]) for i in range(half - 1)]
    edges += [(0, ys[i]) for i in range(half - 1)]
    return from_edges(2 * k - 1, edges)


def build(spec: ConstructionSpec) -> Graph:
    """Materialize a construction; vertex orders are pinned (cliques / core
    first, apex blanket last) so reports are reproducible."""
    k, n = spec.k, spec.n
    if spec.kind is Kind.HK:
        return build_hk(k)
    if spec.kind is Kind.HK_PRIME:
        return build_hk_prime(k)
    if spec.kind is Kind.GL:
        return build_gl(k)
    if spec.kind is Kind.ODD_EXTREMAL:
        core = disjoint_union(complete_graph(k), complete_graph(k))
        return join(core, empty_graph(n - 2 * k))
    if spec.kind is Kind.EVEN_EXTREMAL:
        return join(build_hk(k), empty_graph(n - (2 * k - 1)))
    # K4 packing: floor(n/4) K4's, a triangle if 3 spare, isolated rest
    g = empty_graph(0)
    left = n
    while left >= 4:
        g = disjoint_union(g, complete_graph(4))
        left -= 4
    if left == 3:
        g = disjoint_union(g, complete_graph(3))
        left = 0
    return disjoint_union(g, empty_graph(left))


def extremal_construction(n: int, k: int) -> Graph:
    """The triangle-maximizing k-fan-free construction for this parity."""
    if k == 2:
        return build(ConstructionSpec(Kind.K4_PACKING, 2, n))
    if k % 2:
        return build(ConstructionSpec(Kind.ODD_EXTREMAL, k, n))
    return build(ConstructionSpec(Kind.EVEN_EXTREMAL, k, n))


# -- closed forms --------------------------------------------------------


def ex_k3_fan(n: int, k: int) -> FormulaResult:
    """Maximum number of triangles in a k-fan-free graph on n vertices."""
    if k < 2:
        raise GraphInputError("fan order k must be >= 2")
    if k == 2:
        if n < 5:
            raise GraphInputError("k=2 formula needs n >= 5")
        return FormulaResult(4 * (n // 4) + (1 if n % 4 == 3 else 0), 5, "fan-triangles-packing")
    if k % 2:
        if n < 2 * k + 1:
            raise GraphInputError("odd-k formula needs n >= 2k+1")
        value = (n - 2 * k) * k * (k - 1) + 2 * comb(k, 3)
        return FormulaResult(value, 4 * k**3, "fan-triangles-odd")
    if n < 2 * k:
        raise GraphInputError("even-k formula needs n >= 2k")
    value = (n - 2 * k + 1) * (k * (2 * k - 3) // 2) + 2 * comb(k - 1, 3) + (k // 2 - 1) ** 2
    return FormulaResult(value, 4 * k**3, "fan-triangles-even")


def ex3_star(n: int, k: int) -> FormulaResult:
    """Maximum size of a 3-uniform system on n vertices with no k triples
    pairwise sharing exactly one common vertex (a k-star)."""
    if k < 2:
        raise GraphInputError("star order k must be >= 2")
    if k == 2:
        if n < 3:
            raise GraphInputError("k=2 star formula needs n >= 3")
        drop = (0, 1, 2, 2)[n % 4]
        return FormulaResult(n - drop, 3, "star-triples-exact")
    if k % 2:
        if n < 2 * k + 1:
            raise GraphInputError("odd-k star formula needs n >= 2k+1")
        value = (n - 2 * k) * k * (k - 1) + 2 * comb(k, 3)
        return FormulaResult(value, None, "star-triples-odd")
    if n < 2 * k - 1:
        raise GraphInputError("even-k star formula needs n >= 2k-1")
    value = (
        (n - 2 * k + 1) * (((2 * k - 1) * (k - 1) - 1) // 2)
        + (2 * k - 2) * comb(k - 1, 2)
        + comb(k - 2, 2)
        - (k - 2) * (k - 4) // 2
        + k // 2
    )
    return FormulaResult(value, None, "star-triples-even")


# -- degree-sequence triangle bounds ------------------------------------


@dataclass(frozen=True)
class DegseqBounds:
    """Triangle bounds over graphs with degrees (k-1,...,k-1,k-2) on
    2k-1-2s vertices (s heads removed)."""

    k: int
    s: int
    max_value: int | Fraction
    min_value: int | None  # only pinned for s=0
    dichotomy_floor: int | None  # s=0: any non-minimizer has at least this many
    max_witness: Graph | None
    min_witness: Graph | None


def degseq_triangle_bounds(k: int, s: int = 0) -> DegseqBounds:
    if k < 4 or k % 2:
        raise GraphInputError("degree-sequence bounds need even k >= 4")
    if not 0 <= s <= k // 2 - 1:
        raise GraphInputError(f"s must lie in 0..k/2-1, got {s}")
    half = k // 2
    if s == 0:
        return DegseqBounds(
            k=k,
            s=0,
            max_value=2 * comb(k - 1, 3) + (half - 1) ** 2,
            min_value=(half - 2) * (half - 1),
            dichotomy_floor=(half - 1) ** 2 - 1,
            max_witness=build_hk(k),
            min_witness=build_hk_prime(k),
        )
    raw = Fraction(2 * k - 1 - 2 * s, 6) * (
        (k - 1) * (k - 2) - (k - 1 - 2 * s) * (2 * s + 1)
    ) + Fraction(1, 2) - s
    value: int | Fraction = int(raw) if raw.denominator == 1 else raw
    return DegseqBounds(
        k=k, s=s, max_value=value, min_value=None, dichotomy_floor=None,
        max_witness=None, min_witness=None,
    )
