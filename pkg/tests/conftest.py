"""Shared helpers: seeded random graphs and a few named fixtures."""

import random

from fanfree import Graph, from_edges

PETERSEN_EDGES = [
    (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
    (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
    (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
]


def petersen() -> Graph:
    return from_edges(10, PETERSEN_EDGES)


def bowtie() -> Graph:
    """Two triangles sharing vertex 0 — the smallest 2-fan."""
    return from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return from_edges(n, edges)


def graph_from_mask(n: int, mask: int) -> Graph:
    """Unpack upper-triangle bits (column-major, the graph6 order)."""
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if mask >> i & 1:
                edges.append((u, v))
            i += 1
    return from_edges(n, edges)
