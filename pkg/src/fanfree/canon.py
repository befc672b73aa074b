"""Canonical labeling via color refinement + individualization backtracking.

The canonical form of a graph is the lexicographically smallest upper-triangle
adjacency bitstring over all labelings compatible with iterated equitable
refinement.  Two graphs get the same canonical form iff they are isomorphic:
the search only ever prunes branches provably equivalent under an already
verified automorphism, so the minimum is taken over a complete set of
candidate labelings.

Tuned for the n <= 16 graphs the search engine churns through; bigger graphs
work but highly symmetric ones pay for it (the automorphism pruning keeps
K_n / union-of-cliques shapes polynomial, not free).
"""

from __future__ import annotations

from .graph import Graph, bits, graph6_encode, relabel

_MAX_STORED_AUTS = 64


def _refine(adj: tuple[int, ...], colors: list[int]) -> list[int]:
    """Iterate signature splitting until the coloring is equitable.

    Color ids are ranks of sorted (old color, neighbor-count vector)
    signatures, so they are isomorphism-invariant.
    """
    n = len(adj)
    while True:
        ncol = max(colors) + 1
        masks = [0] * ncol
        for v, c in enumerate(colors):
            masks[c] |= 1 << v
        sigs = [
            (colors[v], tuple((adj[v] & m).bit_count() for m in masks))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if new == colors:
            return colors
        colors = new


def _individualize(colors: list[int], v: int) -> list[int]:
    """Split v off into its own class, ordered just before its old class."""
    new = [2 * c + 1 for c in colors]
    new[v] = 2 * colors[v]
    rank = {c: i for i, c in enumerate(sorted(set(new)))}
    return [rank[c] for c in new]


def _is_automorphism(adj: tuple[int, ...], perm: list[int]) -> bool:
    for v, row in enumerate(adj):
        image = 0
        for w in bits(row):
            image |= 1 << perm[w]
        if image != adj[perm[v]]:
            return False
    return True


def canonical_order(g: Graph) -> list[int]:
    """Vertex order realizing the canonical form: position i holds order[i]."""
    n = g.n
    if n == 0:
        return []
    adj = g.adj
    best_key: list[int | None] = [None]
    best_order: list[list[int]] = [[]]
    auts: list[list[int]] = []
    path: list[int] = []

    def leaf_key(order: list[int]) -> int:
        key = 0
        for i in range(n):
            row = adj[order[i]]
            for j in range(i + 1, n):
                key = key << 1 | (row >> order[j] & 1)
        return key

    def rec(colors: list[int]) -> None:
        ncol = max(colors) + 1
        cells: list[list[int]] = [[] for _ in range(ncol)]
        for v, c in enumerate(colors):
            cells[c].append(v)
        target = -1
        for c in range(ncol):
            if len(cells[c]) > 1 and (target < 0 or len(cells[c]) < len(cells[target])):
                target = c
        if target < 0:
            order = [cell[0] for cell in cells]
            key = leaf_key(order)
            if best_key[0] is None or key < best_key[0]:
                best_key[0] = key
                best_order[0] = order
            elif key == best_key[0] and len(auts) < _MAX_STORED_AUTS:
                perm = [0] * n
                for i in range(n):
                    perm[best_order[0][i]] = order[i]
                if perm != list(range(n)) and _is_automorphism(adj, perm):
                    auts.append(perm)
            return
        tried: list[int] = []
        for v in cells[target]:
            # twins (identical rows up to the mutual bit) are swappable in
            # place: one branch suffices.  Cheap check first, stored
            # automorphisms second.
            row_v = adj[v]
            skip = False
            for u in tried:
                row_u = adj[u]
                if row_u == row_v or row_u ^ (1 << v) == row_v ^ (1 << u):
                    skip = True
                    break
            if not skip:
                for a in auts:
                    if all(a[p] == p for p in path) and any(a[u] == v for u in tried):
                        skip = True
                        break
            if skip:
                continue
            tried.append(v)
            path.append(v)
            rec(_refine(adj, _individualize(colors, v)))
            path.pop()

    rec(_refine(adj, [0] * n))
    return best_order[0]


def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabeled graph."""
    return graph6_encode(canonical_graph(g))


def canonical_graph(g: Graph) -> Graph:
    order = canonical_order(g)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return relabel(g, perm)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.num_edges != h.num_edges:
        return False
    return canonical_form(g) == canonical_form(h)
