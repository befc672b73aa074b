"""Edge classes and triangle weight functions, as executable invariants.

Every edge of a graph is Heavy / Medium / Light by its codegree (>= 2k-1,
in [k, 2k-2], or <= k-1).  Each triangle then distributes total weight 1 over
its three edges by rules that depend only on the multiset of its edge
classes; the weight of an edge in a triangle is "received" by the opposite
vertex.  Summing what a vertex receives over all triangles through it gives
f(v), and conservation  Σ_v f(v) = N(K3, G)  holds by construction.

Two schemes:
  * basic    — the three-case rule (all 1/3 / heavy gets 1 / light gets 0).
  * refined  — same, except triangles with no Heavy edge split unevenly:
               (M,L,L) gives the lights 1/4 and the medium 1/2, and (M,M,L)
               gives the mediums 3/8 and the light 1/4.

The bound suite (`lemma_suite`) turns the structural inequalities satisfied
by fan-free graphs into checks: heavy/medium counts per vertex, per-edge
received-weight sums, and for even k the exact per-vertex ceiling
f(v) <= k(k-3/2) with its rigid equality structure (`tight_vertex_profile`).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import CapacityError, Graph, GraphInputError, PreconditionError, bits, induced
from .matching import contains_fan, matching_number, tutte_berge_value
from .triangles import TriangleTable, count_triangles

F0 = Fraction(0)
F1 = Fraction(1)
THIRD = Fraction(1, 3)
HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)
THREE_EIGHTHS = Fraction(3, 8)


class EdgeClass(enum.Enum):
    HEAVY = "heavy"
    MEDIUM = "medium"
    LIGHT = "light"


class Scheme(enum.Enum):
    BASIC = "basic"
    REFINED = "refined"


@dataclass(frozen=True)
class EdgeClassification:
    k: int
    classes: dict[tuple[int, int], EdgeClass]  # keyed (u,v), u<v
    codegree: dict[tuple[int, int], int]
    flagged_zero: frozenset[tuple[int, int]]  # codegree-0 edges, Light by convention

    def of(self, u: int, v: int) -> EdgeClass:
        key = (u, v) if u < v else (v, u)
        if key not in self.classes:
            raise GraphInputError(f"({u},{v}) is not an edge")
        return self.classes[key]


def classify_edges(g: Graph, k: int, table: TriangleTable | None = None) -> EdgeClassification:
    if k < 2:
        raise GraphInputError("edge classes need k >= 2")
    if table is None:
        table = count_triangles(g)
    classes: dict[tuple[int, int], EdgeClass] = {}
    zeros = []
    for e, cod in table.codegree.items():
        if cod >= 2 * k - 1:
            classes[e] = EdgeClass.HEAVY
        elif cod >= k:
            classes[e] = EdgeClass.MEDIUM
        else:
            classes[e] = EdgeClass.LIGHT
            if cod == 0:
                zeros.append(e)
    return EdgeClassification(k, classes, dict(table.codegree), frozenset(zeros))


def triangle_edge_weights(
    cls_a: EdgeClass, cls_b: EdgeClass, cls_c: EdgeClass, scheme: Scheme
) -> tuple[Fraction, Fraction, Fraction]:
    """Weight of each of the three edges of one triangle, preserving order.

    Depends only on the multiset of classes (checked exhaustively in tests).
    """
    trio = (cls_a, cls_b, cls_c)
    n_heavy = trio.count(EdgeClass.HEAVY)
    n_light = trio.count(EdgeClass.LIGHT)
    if n_heavy and n_light:
        if n_light == 2:  # heavy + two lights: heavy takes everything
            return tuple(F1 if c is EdgeClass.HEAVY else F0 for c in trio)
        # heavy + light + (heavy or medium): light drops, the rest split
        return tuple(F0 if c is EdgeClass.LIGHT else HALF for c in trio)
    if scheme is Scheme.REFINED and n_heavy == 0 and n_light:
        n_medium = trio.count(EdgeClass.MEDIUM)
        if n_medium == 1 and n_light == 2:
            return tuple(HALF if c is EdgeClass.MEDIUM else QUARTER for c in trio)
        if n_medium == 2 and n_light == 1:
            return tuple(THREE_EIGHTHS if c is EdgeClass.MEDIUM else QUARTER for c in trio)
    return (THIRD, THIRD, THIRD)


@dataclass(frozen=True)
class WeightLedger:
    """Per-triangle vertex weights plus the per-vertex totals f and loss."""

    k: int
    scheme: Scheme
    per_triangle: dict[tuple[tuple[int, int, int], int], Fraction]
    f: dict[int, Fraction]
    loss: dict[int, Fraction]  # k(k-3/2) - f(v)

    @property
    def total(self) -> Fraction:
        return sum(self.f.values(), F0)


def weigh(
    g: Graph,
    k: int,
    scheme: Scheme = Scheme.BASIC,
    classification: EdgeClassification | None = None,
    table: TriangleTable | None = None,
) -> WeightLedger:
    if table is None:
        table = count_triangles(g)
    if classification is None:
        classification = classify_edges(g, k, table)
    per: dict[tuple[tuple[int, int, int], int], Fraction] = {}
    f = {v: F0 for v in range(g.n)}
    cls = classification.classes
    for t in table.triangles:
        u, v, w = t
        # edge opposite each vertex, in vertex order
        opp = ((v, w), (u, w), (u, v))
        wa, wb, wc = triangle_edge_weights(cls[opp[0]], cls[opp[1]], cls[opp[2]], scheme)
        per[(t, u)] = wa
        per[(t, v)] = wb
        per[(t, w)] = wc
        f[u] += wa
        f[v] += wb
        f[w] += wc
    ceiling = Fraction(k * (2 * k - 3), 2)
    loss = {v: ceiling - f[v] for v in range(g.n)}
    return WeightLedger(k, scheme, per, f, loss)


def edge_weight_sum(ledger: WeightLedger, g: Graph, u: int, v: int) -> Fraction:
    """Total weight u receives from the triangles containing edge uv."""
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u},{v}) is not an edge")
    total = F0
    for x in bits(g.adj[u] & g.adj[v]):
        t = tuple(sorted((u, v, x)))
        total += ledger.per_triangle[(t, u)]
    return total


# -- the bound suite -----------------------------------------------------


@dataclass(frozen=True)
class VertexClassCounts:
    heavy: int
    medium: int
    light: int


def vertex_class_counts(g: Graph, classification: EdgeClassification, v: int) -> VertexClassCounts:
    h = m = l = 0
    for w in bits(g.adj[v]):
        c = classification.of(v, w)
        if c is EdgeClass.HEAVY:
            h += 1
        elif c is EdgeClass.MEDIUM:
            m += 1
        else:
            l += 1
    return VertexClassCounts(h, m, l)


@dataclass(frozen=True)
class TightVertexProfile:
    """Structure forced at a vertex attaining f(v) = k(k-3/2) (even k)."""

    vertex: int
    x_set: tuple[int, ...]  # Tutte–Berge minimizer inside G[N(v)], original labels
    component_sizes: tuple[int, ...]  # of G[N(v)] - X, descending
    big_component_degrees: tuple[int, ...]
    x_independent_and_regular: bool  # X independent, every x has k-1 neighbors in G[N(v)]
    shape_ok: bool  # big comp has degrees (k-1,...,k-1,k-2) and the right co-structure
    all_inner_heavy: bool  # every edge inside G[N(v)] is Heavy
    all_spokes_light: bool  # every edge v-w is Light
    max_inner_degree_ok: bool  # Δ(G[N(v)]) == k-1

    @property
    def passes(self) -> bool:
        return (
            self.x_independent_and_regular
            and self.shape_ok
            and self.all_inner_heavy
            and self.all_spokes_light
            and self.max_inner_degree_ok
        )


def tight_vertex_profile(
    g: Graph,
    k: int,
    v: int,
    classification: EdgeClassification | None = None,
    ledger: WeightLedger | None = None,
) -> TightVertexProfile:
    if k < 4 or k % 2:
        raise GraphInputError("tight profiles are defined for even k >= 4")
    if ledger is None:
        ledger = weigh(g, k, Scheme.BASIC, classification=classification)
    ceiling = Fraction(k * (2 * k - 3), 2)
    if ledger.f.get(v) != ceiling:
        raise PreconditionError(
            f"vertex {v} has f={ledger.f.get(v)}, not the ceiling {ceiling}", witness=v
        )
    if classification is None:
        classification = classify_edges(g, k)
    nbrs = g.neighbors(v)
    h = induced(g, nbrs)  # h vertex i  <->  original nbrs[i]
    live = [i for i in range(h.n) if h.adj[i]]
    if len(live) > 20:
        raise CapacityError(
            f"tight-profile minimizer search is 2^d; {len(live)} non-isolated "
            "neighborhood vertices > 20"
        )

    # minimizing X for the Tutte–Berge expression on h (smallest, then lex);
    # isolated vertices never belong to a minimizer.  The minimum equals
    # nu(h), so take the first subset attaining it in (size, lex) order.
    from itertools import combinations

    nu = Fraction(matching_number(h))
    best_x: tuple[int, ...] = ()
    if tutte_berge_value(h, ()) != nu:
        for size in range(1, len(live) + 1):
            found = next(
                (
                    xs
                    for xs in combinations(live, size)
                    if tutte_berge_value(h, xs) == nu
                ),
                None,
            )
            if found is not None:
                best_x = found
                break
    x_mask = 0
    for i in best_x:
        x_mask |= 1 << i

    comps = _components(h, x_mask)
    comps.sort(key=lambda c: -c.bit_count())
    sizes = tuple(c.bit_count() for c in comps)
    big = comps[0] if comps else 0
    big_deg = tuple(
        sorted(((h.adj[i] & big & ~x_mask).bit_count() for i in bits(big)), reverse=True)
    )

    # (i) X independent and (k-1)-regular into the neighborhood graph
    x_ok = True
    for i in best_x:
        if h.adj[i] & x_mask:
            x_ok = False
        if h.adj[i].bit_count() != k - 1:
            x_ok = False

    # (ii) degree shape of the big component, and what sits beside it
    target = tuple([k - 1] * (len(big_deg) - 1) + [k - 2]) if big_deg else ()
    shape_ok = big_deg == target and sizes and sizes[0] >= k + 1
    rest = sizes[1:]
    if best_x:
        shape_ok = shape_ok and sizes[0] == 2 * k - 1 - 2 * len(best_x)
        shape_ok = shape_ok and all(s == 1 for s in rest)
    else:
        if rest and rest[0] > 1:
            # allowed alternative: one K_{k-1} beside the big component
            comp2 = comps[1]
            is_clique = all(
                (h.adj[i] & comp2).bit_count() == comp2.bit_count() - 1 for i in bits(comp2)
            )
            shape_ok = (
                shape_ok
                and sizes[0] == k + 1
                and rest[0] == k - 1
                and is_clique
                and all(s == 1 for s in rest[1:])
            )
        else:
            shape_ok = shape_ok and sizes[0] == 2 * k - 1

    inner_heavy = all(
        classification.of(nbrs[a], nbrs[b]) is EdgeClass.HEAVY for a, b in h.edges()
    )
    spokes_light = all(classification.of(v, w) is EdgeClass.LIGHT for w in nbrs)
    max_deg_ok = max((row.bit_count() for row in h.adj), default=0) == k - 1

    return TightVertexProfile(
        vertex=v,
        x_set=tuple(nbrs[i] for i in best_x),
        component_sizes=sizes,
        big_component_degrees=big_deg,
        x_independent_and_regular=x_ok,
        shape_ok=bool(shape_ok),
        all_inner_heavy=inner_heavy,
        all_spokes_light=spokes_light,
        max_inner_degree_ok=max_deg_ok,
    )


def _components(h: Graph, removed: int) -> list[int]:
    left = ((1 << h.n) - 1) ^ removed
    out = []
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= h.adj[u] & left & ~comp
            comp |= nxt
            frontier = nxt
        out.append(comp)
        left &= ~comp
    return out


@dataclass
class LemmaReport:
    """Outcome of every structural bound on one graph."""

    k: int
    n: int
    violations: list[str] = field(default_factory=list)
    vertex_checks: int = 0
    edge_checks: int = 0
    tight_vertices: list[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def _edge_sum_equality_structure(
    g: Graph, classification: EdgeClassification, u: int, v: int, k: int
) -> bool:
    """The only way the per-edge sum reaches k-1: uv Light with codegree
    exactly k-1, and every triangle uvx has vx Heavy and ux Light."""
    key = (u, v) if u < v else (v, u)
    if classification.classes[key] is not EdgeClass.LIGHT:
        return False
    common = g.adj[u] & g.adj[v]
    if common.bit_count() != k - 1:
        return False
    for x in bits(common):
        if classification.of(v, x) is not EdgeClass.HEAVY:
            return False
        if classification.of(u, x) is not EdgeClass.LIGHT:
            return False
    return True


def lemma_suite(g: Graph, k: int, profile_limit: int = 20) -> LemmaReport:
    """Evaluate every structural inequality; precondition: g is k-fan-free.

    Checks, for both weight schemes where applicable:
      * per vertex: #Heavy <= k-1 (Medium empty at equality), and
        #Heavy + #Medium/2 <= k - 1/2;
      * per ordered edge (u,v): received sum <= k-1, equality only in the
        rigid Light-edge configuration; for k >= 3 no value may land in the
        open gap (k-3/2, k-1);
      * for even k >= 4, per vertex: f(v) <= k(k-3/2), no value in the open
        gap (k(k-3/2)-1/2, k(k-3/2)), and tight vertices must pass their
        structural profile.
    """
    if k < 2:
        raise GraphInputError("lemma suite needs k >= 2")
    wit = contains_fan(g, k)
    if wit is not None:
        raise PreconditionError(
            f"graph contains a {k}-fan centered at {wit.center}", witness=wit
        )
    table = count_triangles(g)
    classification = classify_edges(g, k, table)
    report = LemmaReport(k=k, n=g.n)

    for v in range(g.n):
        counts = vertex_class_counts(g, classification, v)
        report.vertex_checks += 1
        if counts.heavy > k - 1:
            report.violations.append(f"vertex {v}: {counts.heavy} heavy edges > k-1")
        elif counts.heavy == k - 1 and counts.medium:
            report.violations.append(
                f"vertex {v}: k-1 heavy edges but {counts.medium} medium edges"
            )
        if Fraction(counts.heavy) + Fraction(counts.medium, 2) > Fraction(2 * k - 1, 2):
            report.violations.append(
                f"vertex {v}: heavy+medium/2 = {counts.heavy}+{counts.medium}/2 > k-1/2"
            )

    ledgers = {
        Scheme.BASIC: weigh(g, k, Scheme.BASIC, classification, table),
        Scheme.REFINED: weigh(g, k, Scheme.REFINED, classification, table),
    }
    gap_lo = Fraction(2 * k - 3, 2)  # k - 3/2
    for scheme, ledger in ledgers.items():
        for u, v in g.edges():
            for a, b in ((u, v), (v, u)):
                s = edge_weight_sum(ledger, g, a, b)
                report.edge_checks += 1
                if s > k - 1:
                    report.violations.append(
                        f"{scheme.value} edge ({a},{b}): sum {s} > k-1"
                    )
                elif s == k - 1:
                    if not _edge_sum_equality_structure(g, classification, a, b, k):
                        report.violations.append(
                            f"{scheme.value} edge ({a},{b}): sum k-1 without the "
                            "rigid light-edge structure"
                        )
                elif k >= 3 and s > gap_lo:
                    report.violations.append(
                        f"{scheme.value} edge ({a},{b}): sum {s} in the "
                        f"forbidden gap ({gap_lo}, {k - 1})"
                    )

    if k >= 4 and k % 2 == 0:
        ceiling = Fraction(k * (2 * k - 3), 2)
        basic = ledgers[Scheme.BASIC]
        for v in range(g.n):
            fv = basic.f[v]
            if fv > ceiling:
                report.violations.append(f"vertex {v}: f={fv} > ceiling {ceiling}")
            elif fv == ceiling:
                report.tight_vertices.append(v)
                live = sum(1 for i in g.neighbors(v) if g.adj[i] & g.adj[v])
                if live <= profile_limit:
                    prof = tight_vertex_profile(g, k, v, classification, basic)
                    if not prof.passes:
                        report.violations.append(
                            f"vertex {v}: tight but profile fails "
                            f"(x_ok={prof.x_independent_and_regular}, "
                            f"shape={prof.shape_ok}, heavy={prof.all_inner_heavy}, "
                            f"light={prof.all_spokes_light}, deg={prof.max_inner_degree_ok})"
                        )
            elif fv > ceiling - HALF:
                report.violations.append(
                    f"vertex {v}: f={fv} in the forbidden gap "
                    f"({ceiling - HALF}, {ceiling})"
                )
    return report
