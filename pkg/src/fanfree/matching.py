"""Maximum matching (blossom contraction), Tutte–Berge, fan/star detection.

A k-fan is k triangles sharing exactly one common vertex.  A graph contains a
k-fan centered at v iff the subgraph induced on N(v) has a matching of size k,
so fan detection reduces to matching numbers of neighborhoods — including odd
components, hence Edmonds' blossom algorithm rather than bipartite tricks.

The blossom implementation is the classic base/contract one (O(V^3)); an
exponential exact search over vertex subsets doubles as the test oracle for
small n and produces Tutte–Berge certificates.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import (
    CapacityError,
    Graph,
    GraphInputError,
    bits,
    induced,
)
from .triangles import TripleSystem

_BRUTE_LIMIT = 14
_CERT_LIMIT = 20


@dataclass(frozen=True)
class MatchingResult:
    size: int
    pairs: tuple[tuple[int, int], ...]
    certificate: tuple[int, ...] | None = None  # Tutte–Berge minimizing X


@dataclass(frozen=True)
class FanWitness:
    """Center plus k disjoint neighbor pairs, each forming a triangle."""

    center: int
    pairs: tuple[tuple[int, int], ...]


# -- blossom maximum matching -------------------------------------------


def _greedy_matching(adj: tuple[int, ...], n: int) -> list[int]:
    match = [-1] * n
    for v in range(n):
        if match[v] < 0:
            for u in bits(adj[v]):
                if match[u] < 0:
                    match[v] = u
                    match[u] = v
                    break
    return match


def _try_augment(adj: tuple[int, ...], n: int, match: list[int], root: int) -> bool:
    """One Edmonds phase: grow an alternating tree from root, contracting
    blossoms via the base[] trick; augments and returns True on success."""
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    used[root] = True
    q = deque([root])

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        x = a
        while True:
            x = base[x]
            seen[x] = True
            if match[x] < 0:
                break
            x = p[match[x]]
        y = b
        while True:
            y = base[y]
            if seen[y]:
                return y
            y = p[match[y]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    while q:
        v = q.popleft()
        for to in bits(adj[v]):
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] >= 0 and p[match[to]] >= 0):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            q.append(i)
            elif p[to] < 0:
                p[to] = v
                if match[to] < 0:
                    # augment along parent pointers
                    while to >= 0:
                        pv = p[to]
                        ppv = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = ppv
                    return True
                used[match[to]] = True
                q.append(match[to])
    return False


def _blossom_matching(adj: tuple[int, ...], n: int, stop_at: int | None = None) -> list[int]:
    """match[] array; stops early once the matching reaches stop_at edges."""
    match = _greedy_matching(adj, n)
    size = sum(1 for m in match if m >= 0) // 2
    if stop_at is not None and size >= stop_at:
        return match
    for v in range(n):
        if match[v] < 0 and _try_augment(adj, n, match, v):
            size += 1
            if stop_at is not None and size >= stop_at:
                return match
    return match


def matching_number(g: Graph) -> int:
    match = _blossom_matching(g.adj, g.n)
    return sum(1 for m in match if m >= 0) // 2


def max_matching(g: Graph, with_certificate: bool = False) -> MatchingResult:
    """Maximum matching; certificate (a Tutte–Berge minimizing X) is gated
    behind the flag and an exponential-cost size limit."""
    match = _blossom_matching(g.adj, g.n)
    pairs = tuple(sorted((v, match[v]) for v in range(g.n) if 0 <= v < match[v]))
    size = len(pairs)
    cert = None
    if with_certificate:
        cert = _tutte_berge_minimizer(g, size)
    return MatchingResult(size, pairs, cert)


# -- exact oracle + Tutte–Berge -----------------------------------------


def matching_number_bruteforce(g: Graph) -> int:
    """Branching exact matching number; documented oracle for n <= 14."""
    if g.n > _BRUTE_LIMIT:
        raise CapacityError(f"brute-force matching capped at n={_BRUTE_LIMIT}")

    adj = g.adj

    def rec(avail: int) -> int:
        v = -1
        for u in bits(avail):
            if adj[u] & avail:
                v = u
                break
        if v < 0:
            return 0
        avail ^= 1 << v
        best = rec(avail)  # v stays unmatched
        for w in bits(adj[v] & avail):
            best = max(best, 1 + rec(avail ^ (1 << w)))
        return best

    return rec((1 << g.n) - 1)


def _odd_components(g: Graph, removed: int) -> int:
    left = ((1 << g.n) - 1) ^ removed
    odd = 0
    while left:
        start = left & -left
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v] & left & ~comp
            comp |= nxt
            frontier = nxt
        if comp.bit_count() % 2:
            odd += 1
        left &= ~comp
    return odd


def tutte_berge_value(g: Graph, x: tuple[int, ...] | list[int]) -> Fraction:
    """(1/2)(n - odd(G - X) + |X|); equals ν(G) at a minimizing X."""
    mask = 0
    for v in x:
        g._check_vertex(v)
        mask |= 1 << v
    return Fraction(g.n - _odd_components(g, mask) + mask.bit_count(), 2)


def tutte_berge_check(g: Graph, x: tuple[int, ...] | list[int]) -> tuple[Fraction, bool]:
    """Value of the Tutte–Berge expression at X, and whether X attains ν."""
    val = tutte_berge_value(g, x)
    return val, val == matching_number(g)


def _tutte_berge_minimizer(g: Graph, nu: int | None = None) -> tuple[int, ...]:
    """Smallest (by size, then lex) X minimizing the Tutte–Berge expression.

    Exhaustive over subsets of non-isolated vertices (isolated vertices never
    help: dropping one from X lowers the value), so cost is 2^d for d
    non-isolated vertices; capped at d <= 20.
    """
    live = [v for v in range(g.n) if g.adj[v]]
    if len(live) > _CERT_LIMIT:
        raise CapacityError(
            f"certificate search is 2^d; {len(live)} non-isolated vertices > {_CERT_LIMIT}"
        )
    if nu is None:
        nu = matching_number(g)
    target = Fraction(nu)
    for size in range(len(live) + 1):
        for xs in combinations(live, size):
            if tutte_berge_value(g, xs) == target:
                return tuple(xs)
    raise AssertionError("Tutte–Berge formula has a minimizer by Berge's theorem")


# -- partial certificates for speed -------------------------------------


def _cover_at_most(adj: list[int], live: int, budget: int) -> bool:
    """True if greedily deleting <= budget max-degree vertices kills all
    edges — certifies ν <= budget without running blossom."""
    for _ in range(budget):
        best_v = -1
        best_d = 0
        for v in bits(live):
            d = (adj[v] & live).bit_count()
            if d > best_d:
                best_d = d
                best_v = v
        if best_v < 0:
            return True
        live ^= 1 << best_v
    return all(not (adj[v] & live) for v in bits(live))


def _nu_at_least(g: Graph, k: int) -> bool:
    """Does g have a matching of size >= k?  Early-exits the blossom loop."""
    if g.n < 2 * k:
        return False
    if _cover_at_most(list(g.adj), (1 << g.n) - 1, k - 1):
        return False
    match = _blossom_matching(g.adj, g.n, stop_at=k)
    return sum(1 for m in match if m >= 0) // 2 >= k


# -- fans ----------------------------------------------------------------


def neighborhood_graph(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Induced subgraph on N(v) plus the map back to original labels."""
    nbrs = g.neighbors(v)
    return induced(g, nbrs), nbrs


def fan_center_order(g: Graph, v: int) -> int:
    """Largest j such that v is the center of a j-fan: ν(G[N(v)])."""
    h, _ = neighborhood_graph(g, v)
    return matching_number(h)


def _lex_least_matching(h: Graph, k: int) -> tuple[tuple[int, int], ...]:
    """Lexicographically least size-k matching of h (known to exist)."""
    chosen: list[tuple[int, int]] = []
    live = (1 << h.n) - 1

    def feasible(live_mask: int, need: int) -> bool:
        if need <= 0:
            return True
        sub = induced(h, list(bits(live_mask)))
        return matching_number(sub) >= need

    edges = sorted(h.edges())
    i = 0
    while len(chosen) < k:
        u, v = edges[i]
        if (live >> u & 1) and (live >> v & 1):
            nlive = live & ~(1 << u) & ~(1 << v)
            if feasible(nlive, k - len(chosen) - 1):
                chosen.append((u, v))
                live = nlive
        i += 1
    return tuple(chosen)


def contains_fan(g: Graph, k: int) -> FanWitness | None:
    """First (least center, then lex-least pairs) k-fan, or None.

    Fans must have k >= 1; a "0-fan" is meaningless and rejected.
    """
    if k < 1:
        raise GraphInputError("fan order k must be >= 1")
    twok = 2 * k
    for v in range(g.n):
        if g.adj[v].bit_count() < twok:
            continue
        h, back = neighborhood_graph(g, v)
        if not _nu_at_least(h, k):
            continue
        pairs = _lex_least_matching(h, k)
        return FanWitness(v, tuple((back[a], back[b]) for a, b in pairs))
    return None


def is_fan_free(g: Graph, k: int) -> bool:
    return contains_fan(g, k) is None


def contains_star(ts: TripleSystem, k: int) -> FanWitness | None:
    """k-star in a 3-uniform system: k triples pairwise meeting in exactly
    one common center vertex.  Same matching criterion, on link graphs."""
    if k < 1:
        raise GraphInputError("star order k must be >= 1")
    for v in range(ts.n):
        h = ts.link(v)
        if not _nu_at_least(h, k):
            continue
        pairs = _lex_least_matching(h, k)
        return FanWitness(v, pairs)
    return None


def fan_update_safe(g: Graph, k: int, u: int, v: int) -> bool:
    """After adding edge uv to a previously k-fan-free graph, is it still
    free?  Only centers u, v, or a common neighbor can have gained a fan."""
    if not g.has_edge(u, v):
        raise GraphInputError(f"({u},{v}) is not an edge of the updated graph")
    suspects = [u, v, *bits(g.adj[u] & g.adj[v])]
    for c in suspects:
        if g.adj[c].bit_count() < 2 * k:
            continue
        h, _ = neighborhood_graph(g, c)
        if _nu_at_least(h, k):
            return False
    return True
