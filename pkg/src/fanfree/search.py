"""Search: exhaustive isomorph-free generation, degree-sequence enumeration,
and seeded hill climbing, all reporting through one SearchReport shape.

Exhaustive mode grows graphs one vertex at a time.  A child on m+1 vertices
is kept only if deleting its new vertex gives the same canonical form as
deleting the vertex sitting at the last canonical position — i.e. the new
vertex could be the canonical "last" one — with a per-parent canonical-form
set guarding against pseudo-similar duplicates.  Each isomorphism class is
therefore produced exactly once, and a forbidden-fan prune is sound because
fans survive vertex additions.

Worker processes (FANFREE_THREADS) split the tree at the first level wide
enough to feed them; subtrees are independent, so results merge by max/union.
"""

from __future__ import annotations

import os
import random
import time
from dataclasses import dataclass, field
from typing import Callable

from .canon import canonical_form, canonical_order
from .constructions import extremal_construction
from .graph import (
    CapacityError,
    Graph,
    GraphInputError,
    bits,
    check_graphical,
    complete_graph,
    disjoint_union,
    empty_graph,
    graph6_decode,
    graph6_encode,
    induced,
    relabel,
)
from .matching import _nu_at_least, contains_fan, neighborhood_graph
from .triangles import triangle_count

_EXHAUSTIVE_EXACT_LIMIT = 11  # documented wall for full enumeration
_HARD_LIMIT = 16  # canonical forms are search-grade only up to here
_DEFAULT_BUDGET = 2_000_000


@dataclass(frozen=True)
class SearchReport:
    mode: str
    n: int
    k: int
    best_value: int | None
    witnesses: tuple[str, ...]  # canonical graph6, sorted
    explored: int
    pruned: int
    exact: bool
    wall_time_s: float
    params: dict


def _canon_with_order(g: Graph) -> tuple[str, list[int]]:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return graph6_encode(relabel(g, perm)), order


def _fan_appears_on_vertex_add(child: Graph, k: int, new_vertex: int) -> bool:
    """Parent was k-fan-free; only the new vertex or its neighbors can now
    center a fan."""
    suspects = [new_vertex, *bits(child.adj[new_vertex])]
    for c in suspects:
        if child.adj[c].bit_count() < 2 * k:
            continue
        h, _ = neighborhood_graph(child, c)
        if _nu_at_least(h, k):
            return True
    return False


@dataclass
class _GenCounters:
    explored: int = 0
    pruned: int = 0


def _expand(
    parent: Graph, parent_canon: str, k: int | None, counters: _GenCounters
) -> list[tuple[Graph, str]]:
    """All accepted children of one parent (new vertex = index m)."""
    m = parent.n
    out: list[tuple[Graph, str]] = []
    seen: set[str] = set()
    for sub in range(1 << m):
        adj = list(parent.adj)
        for v in bits(sub):
            adj[v] |= 1 << m
        adj.append(sub)
        child = Graph(m + 1, adj)
        if k is not None and _fan_appears_on_vertex_add(child, k, m):
            counters.pruned += 1
            continue
        canon, order = _canon_with_order(child)
        if canon in seen:
            continue
        seen.add(canon)
        last = order[-1]
        if last != m:
            if canonical_form(induced(child, [v for v in range(m + 1) if v != last])) != parent_canon:
                continue
        counters.explored += 1
        out.append((child, canon))
    return out


def _bfs(
    roots: list[tuple[Graph, str]],
    n: int,
    k: int | None,
    budget: int,
    counters: _GenCounters,
    visit: Callable[[Graph, str], None],
) -> bool:
    """Expand every root to depth n, calling visit on each full-size graph.
    Returns False if the node budget ran out first."""
    level = roots
    while level and level[0][0].n < n:
        nxt: list[tuple[Graph, str]] = []
        for parent, canon in level:
            nxt.extend(_expand(parent, canon, k, counters))
            if counters.explored > budget:
                return False
        level = nxt
    for g, canon in level:
        visit(g, canon)
    return True


def _worker_task(args) -> tuple[int, list[str], int, int, bool]:
    adjs, canons, n, k, budget = args
    counters = _GenCounters()
    best = -1
    witnesses: list[str] = []

    def visit(g: Graph, canon: str) -> None:
        nonlocal best, witnesses
        t = triangle_count(g)
        if t > best:
            best = t
            witnesses = [canon]
        elif t == best:
            witnesses.append(canon)

    roots = [(Graph(len(a), a), c) for a, c in zip(adjs, canons)]
    complete = _bfs(roots, n, k, budget, counters, visit)
    return best, witnesses, counters.explored, counters.pruned, complete


def exhaustive_extremal(
    n: int, k: int, budget: int | None = None, workers: int | None = None
) -> SearchReport:
    """Maximum triangle count over all k-fan-free graphs on n vertices, by
    isomorph-free exhaustive generation; every extremal graph is returned.

    Fully exact runs are practical for n <= 11; beyond that the node budget
    turns the report into a documented partial (exact=False).
    """
    if k < 1:
        raise GraphInputError("fan order k must be >= 1")
    if not 1 <= n <= _HARD_LIMIT:
        raise CapacityError(f"exhaustive search supports 1 <= n <= {_HARD_LIMIT}")
    if budget is None:
        budget = _DEFAULT_BUDGET if n <= _EXHAUSTIVE_EXACT_LIMIT else 200_000
    env_workers = int(os.environ.get("FANFREE_THREADS", "1") or "1")
    pool = max(1, min(workers if workers is not None else env_workers, env_workers))

    start = time.monotonic()
    counters = _GenCounters(explored=1)
    root = complete_graph(1)
    roots = [(root, canonical_form(root))]
    best = -1
    witnesses: list[str] = []
    complete = True

    def visit(g: Graph, canon: str) -> None:
        nonlocal best, witnesses
        t = triangle_count(g)
        if t > best:
            best = t
            witnesses = [canon]
        elif t == best:
            witnesses.append(canon)

    if n == 1:
        visit(root, roots[0][1])
    elif pool == 1:
        complete = _bfs(roots, n, k, budget, counters, visit)
    else:
        # grow sequentially until the level is wide enough to split
        level = roots
        while level and level[0][0].n < n and len(level) < 4 * pool:
            nxt: list[tuple[Graph, str]] = []
            for parent, canon in level:
                nxt.extend(_expand(parent, canon, k, counters))
            level = nxt
        if level and level[0][0].n == n:
            for g, canon in level:
                visit(g, canon)
        elif level:
            import multiprocessing as mp

            chunks: list[list[tuple[Graph, str]]] = [[] for _ in range(pool)]
            for i, item in enumerate(level):
                chunks[i % pool].append(item)
            tasks = [
                ([g.adj for g, _ in chunk], [c for _, c in chunk], n, k, budget)
                for chunk in chunks
                if chunk
            ]
            ctx = mp.get_context("fork")
            with ctx.Pool(len(tasks)) as p:
                for b, w, ex, pr, comp in p.map(_worker_task, tasks):
                    counters.explored += ex
                    counters.pruned += pr
                    complete = complete and comp
                    if b > best:
                        best = b
                        witnesses = list(w)
                    elif b == best:
                        witnesses.extend(w)

    return SearchReport(
        mode="exhaustive",
        n=n,
        k=k,
        best_value=best if best >= 0 else None,
        witnesses=tuple(sorted(set(witnesses))),
        explored=counters.explored,
        pruned=counters.pruned,
        exact=complete,
        wall_time_s=time.monotonic() - start,
        params={"budget": budget, "workers": pool},
    )


def generate_all(n: int, visit: Callable[[Graph], None]) -> int:
    """Visit one representative of every isomorphism class on n vertices;
    returns the class count.  (The k-fan prune disabled.)"""
    if not 1 <= n <= _HARD_LIMIT:
        raise CapacityError(f"generation supports 1 <= n <= {_HARD_LIMIT}")
    counters = _GenCounters(explored=1)
    root = complete_graph(1)
    total = 0

    def _visit(g: Graph, canon: str) -> None:
        nonlocal total
        total += 1
        visit(g)

    if n == 1:
        _visit(root, "")
        return total
    _bfs([(root, canonical_form(root))], n, None, 10**12, counters, _visit)
    return total


# -- degree-sequence enumeration ----------------------------------------


@dataclass
class DegseqStats:
    degrees: tuple[int, ...]
    classes: int
    min_triangles: int | None
    max_triangles: int | None
    min_witnesses: tuple[str, ...]
    max_witnesses: tuple[str, ...]


def degseq_enumerate(
    degrees, visit: Callable[[Graph], None] | None = None
) -> DegseqStats:
    """Visit every graph with the given degree sequence, up to isomorphism.

    Backtracking saturates one vertex at a time (largest residual degree
    first) with an Erdős–Gallai residual prune; leaves are deduplicated by
    canonical form.  Exhaustive mode is capped at 11 vertices.
    """
    d = check_graphical(degrees)
    n = len(d)
    if n > _EXHAUSTIVE_EXACT_LIMIT:
        raise CapacityError(f"degree-sequence enumeration capped at n={_EXHAUSTIVE_EXACT_LIMIT}")

    seen: set[str] = set()
    stats = DegseqStats(d, 0, None, None, (), ())
    mins: list[str] = []
    maxs: list[str] = []

    adj = [0] * n
    res = list(d)

    def residual_graphical(res_list: list[int]) -> bool:
        r = sorted(res_list, reverse=True)
        if sum(r) % 2:
            return False
        prefix = 0
        for i in range(1, n + 1):
            prefix += r[i - 1]
            if prefix > i * (i - 1) + sum(min(x, i) for x in r[i:]):
                return False
        return True

    def rec() -> None:
        nonlocal mins, maxs
        pivot = -1
        for v in range(n):
            if res[v] > 0 and (pivot < 0 or res[v] > res[pivot]):
                pivot = v
        if pivot < 0:
            g = Graph(n, adj)
            canon = canonical_form(g)
            if canon in seen:
                return
            seen.add(canon)
            stats.classes += 1
            if visit is not None:
                visit(g)
            t = triangle_count(g)
            if stats.min_triangles is None or t < stats.min_triangles:
                stats.min_triangles = t
                mins = [canon]
            elif t == stats.min_triangles:
                mins.append(canon)
            if stats.max_triangles is None or t > stats.max_triangles:
                stats.max_triangles = t
                maxs = [canon]
            elif t == stats.max_triangles:
                maxs.append(canon)
            return
        need = res[pivot]
        candidates = [
            v for v in range(n) if v != pivot and res[v] > 0 and not adj[pivot] >> v & 1
        ]
        if len(candidates) < need:
            return
        from itertools import combinations

        res[pivot] = 0
        for partners in combinations(candidates, need):
            for w in partners:
                adj[pivot] |= 1 << w
                adj[w] |= 1 << pivot
                res[w] -= 1
            if residual_graphical(res):
                rec()
            for w in partners:
                adj[pivot] &= ~(1 << w)
                adj[w] &= ~(1 << pivot)
                res[w] += 1
        res[pivot] = need

    rec()
    stats.min_witnesses = tuple(sorted(mins))
    stats.max_witnesses = tuple(sorted(maxs))
    return stats


# -- hill climbing -------------------------------------------------------


def _seed_graph(n: int, k: int, which: int, rng: random.Random) -> Graph:
    if which == 0:
        try:
            return extremal_construction(n, k)
        except GraphInputError:
            return empty_graph(n)
    if which == 1:
        g = empty_graph(0)
        left = n
        while left >= 2 * k:
            g = disjoint_union(g, complete_graph(2 * k))
            left -= 2 * k
        return disjoint_union(g, empty_graph(left))
    return empty_graph(n)


def _edge_add_blocked(g: Graph, k: int, u: int, v: int) -> bool:
    """Would adding uv create a k-fan?  Checks u, v and common neighbors."""
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    h = Graph(g.n, adj)
    suspects = [u, v, *bits(h.adj[u] & h.adj[v])]
    for c in suspects:
        if h.adj[c].bit_count() < 2 * k:
            continue
        sub, _ = neighborhood_graph(h, c)
        if _nu_at_least(sub, k):
            return True
    return False


def hill_climb(
    n: int,
    k: int,
    restarts: int = 8,
    steps: int = 1200,
    seed: int = 0,
) -> SearchReport:
    """Randomized local search for triangle-rich k-fan-free graphs.

    Moves are single-edge additions (rejected if a fan would appear at an
    endpoint or a common neighbor — the only possible new centers) and
    occasional deletions as perturbation.  Restart 0 starts from the closed-
    form construction, restart 1 from a K_{2k} packing, the rest from the
    empty graph.  Fully deterministic for a fixed seed.  Never exact.
    """
    if k < 2:
        raise GraphInputError("hill climbing needs k >= 2")
    if not 3 <= n <= 64:
        raise CapacityError("hill climbing supports 3 <= n <= 64")
    start = time.monotonic()
    best_val = -1
    best_raw: dict[str, None] = {}  # labeled graph6 of best-tying graphs, capped
    explored = 0
    pruned = 0

    def record(g: Graph, t: int) -> None:
        nonlocal best_val, best_raw
        if t > best_val:
            best_val = t
            best_raw = {graph6_encode(g): None}
        elif t == best_val and len(best_raw) < 64:
            best_raw.setdefault(graph6_encode(g), None)

    for r in range(restarts):
        rng = random.Random(f"fanfree:{seed}:{r}")
        g = _seed_graph(n, k, r, rng)
        t = triangle_count(g)
        record(g, t)
        for _ in range(steps):
            explored += 1
            if rng.random() < 0.85:
                u = rng.randrange(n)
                choices = [
                    v for v in range(n) if v != u and not g.adj[u] >> v & 1
                ]
                if not choices:
                    continue
                v = rng.choice(choices)
                if _edge_add_blocked(g, k, u, v):
                    pruned += 1
                    continue
                adj = list(g.adj)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
                g = Graph(n, adj)
                t += (g.adj[u] & g.adj[v]).bit_count()
                record(g, t)
            else:
                edges = list(g.edges())
                if not edges:
                    continue
                u, v = rng.choice(edges)
                t -= (g.adj[u] & g.adj[v]).bit_count()
                adj = list(g.adj)
                adj[u] &= ~(1 << v)
                adj[v] &= ~(1 << u)
                g = Graph(n, adj)

    witnesses = set()
    for raw in best_raw:
        wg = graph6_decode(raw)
        assert contains_fan(wg, k) is None, "hill-climb witness has a fan"
        witnesses.add(canonical_form(wg))

    return SearchReport(
        mode="hill",
        n=n,
        k=k,
        best_value=best_val if best_val >= 0 else None,
        witnesses=tuple(sorted(witnesses)),
        explored=explored,
        pruned=pruned,
        exact=False,
        wall_time_s=time.monotonic() - start,
        params={"seed": seed, "restarts": restarts, "steps": steps},
    )
