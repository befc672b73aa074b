"""Small dense graphs as bitset adjacency rows.

Vertices are 0..n-1 and every adjacency row is a Python int used as a bitset,
so neighborhood intersections (the workhorse of triangle counting and fan
detection) are single AND operations.  Hard cap of 512 vertices: everything
here is meant for exact extremal work on small graphs, not for big sparse
instances.

Also home to the graph6 encoder/decoder (bit-exact with the usual format:
N(n) length prefix, then the upper triangle x(0,1), x(0,2), x(1,2), ... packed
big-endian into 6-bit groups offset by 63) and the Erdős–Gallai test.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 512


class GraphInputError(ValueError):
    """Bad argument values: vertex out of range, loops, k too small, ..."""


class CapacityError(ValueError):
    """Request exceeds a documented size limit."""


class PreconditionError(ValueError):
    """A documented precondition fails; carries a witness where possible."""

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class Graph6ParseError(ValueError):
    """Malformed graph6 input; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable-by-convention undirected simple graph.

    ``adj[v]`` is the neighbor bitset of v.  Do not mutate rows in place;
    use the module-level constructors which re-validate.
    """

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
        if len(adj) != n:
            raise GraphInputError(f"{len(adj)} adjacency rows for {n} vertices")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphInputError(f"row {v} has bits outside 0..{n-1}")
            if row >> v & 1:
                raise GraphInputError(f"loop at vertex {v}")
        for u in range(n):
            for v in bits(adj[u]):
                if not adj[v] >> u & 1:
                    raise GraphInputError(f"asymmetric adjacency {u},{v}")
        self.n = n
        self.adj = tuple(adj)

    # -- queries ---------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(bits(self.adj[v]))

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges (u, v) with u < v, lexicographic."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1) << (u + 1)):
                yield (u, v)

    @property
    def num_edges(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphInputError(f"vertex {v} outside 0..{self.n - 1}")

    # -- plumbing --------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


# -- constructors --------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Graph on n vertices from an edge list; rejects loops and bad ids."""
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphInputError(f"edge ({u},{v}) outside 0..{n-1}")
        if u == v:
            raise GraphInputError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def empty_graph(n: int) -> Graph:
    return from_edges(n, [])


def complete_graph(n: int) -> Graph:
    if not 0 <= n <= MAX_VERTICES:
        raise CapacityError(f"vertex count {n} outside 0..{MAX_VERTICES}")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphInputError("cycle needs at least 3 vertices")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ row ^ (1 << v) for v, row in enumerate(g.adj)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """g followed by h, h's vertices shifted up by g.n."""
    if g.n + h.n > MAX_VERTICES:
        raise CapacityError(f"union on {g.n + h.n} vertices exceeds {MAX_VERTICES}")
    adj = list(g.adj) + [row << g.n for row in h.adj]
    return Graph(g.n + h.n, adj)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    u = disjoint_union(g, h)
    gmask = (1 << g.n) - 1
    hmask = ((1 << u.n) - 1) ^ gmask
    adj = [row | (hmask if v < g.n else gmask) for v, row in enumerate(u.adj)]
    return Graph(u.n, adj)


def induced(g: Graph, vertices: Iterable[int]) -> Graph:
    """Induced subgraph; kept vertices are relabeled 0.. in sorted order."""
    keep = sorted(set(vertices))
    for v in keep:
        g._check_vertex(v)
    pos = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for v in keep:
        for w in bits(g.adj[v]):
            if w in pos:
                adj[pos[v]] |= 1 << pos[w]
    return Graph(len(keep), adj)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply a permutation: vertex v of g becomes perm[v] of the result."""
    if sorted(perm) != list(range(g.n)):
        raise GraphInputError("perm is not a permutation of the vertex set")
    adj = [0] * g.n
    for v in range(g.n):
        for w in bits(g.adj[v]):
            adj[perm[v]] |= 1 << perm[w]
    return Graph(g.n, adj)


# -- degree sequences ----------------------------------------------------


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Degrees sorted non-increasing."""
    return tuple(sorted((row.bit_count() for row in g.adj), reverse=True))


def check_graphical(degrees: Sequence[int]) -> tuple[int, ...]:
    """Validate a degree sequence via Erdős–Gallai; return it sorted.

    Raises GraphInputError citing the parity failure or the first violated
    Erdős–Gallai inequality.
    """
    d = tuple(sorted(degrees, reverse=True))
    n = len(d)
    if any(x < 0 for x in d):
        raise GraphInputError("negative degree in sequence")
    if d and d[0] > n - 1:
        raise GraphInputError(f"degree {d[0]} exceeds n-1={n - 1}")
    total = sum(d)
    if total % 2:
        raise GraphInputError(f"degree sum {total} is odd")
    prefix = 0
    for r in range(1, n + 1):
        prefix += d[r - 1]
        bound = r * (r - 1) + sum(min(x, r) for x in d[r:])
        if prefix > bound:
            raise GraphInputError(
                f"Erdős–Gallai fails at r={r}: lhs {prefix} > rhs {bound}"
            )
    return d


def is_graphical(degrees: Sequence[int]) -> bool:
    try:
        check_graphical(degrees)
        return True
    except GraphInputError:
        return False


# -- graph6 --------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Standard graph6 line (no header, no trailing newline)."""
    out = []
    n = g.n
    if n <= 62:
        out.append(chr(n + 63))
    else:  # 63 <= n <= 512 fits the 3-byte long form
        out.append("~")
        out.append(chr(((n >> 12) & 63) + 63))
        out.append(chr(((n >> 6) & 63) + 63))
        out.append(chr((n & 63) + 63))
    buf = 0
    nbits = 0
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            buf = buf << 1 | (col >> u & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def graph6_decode(line: str) -> Graph:
    """Parse one graph6 line; Graph6ParseError carries the byte offset."""
    s = line.rstrip("\n")
    if s.startswith(">>graph6<<"):
        s = s[10:]
    if not s:
        raise Graph6ParseError("empty graph6 line", 0)
    for i, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"byte {ord(ch)} outside graph6 range", i)
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = 1
    else:
        if len(s) < 4:
            raise Graph6ParseError("truncated long-form vertex count", len(s))
        if s[1] == "~":
            raise Graph6ParseError("8-byte vertex counts not supported", 1)
        n = (
            (ord(s[1]) - 63) << 12
            | (ord(s[2]) - 63) << 6
            | (ord(s[3]) - 63)
        )
        body = 4
    if n > MAX_VERTICES:
        raise Graph6ParseError(f"vertex count {n} exceeds {MAX_VERTICES}", 0)
    need = (n * (n - 1) // 2 + 5) // 6
    if len(s) - body != need:
        raise Graph6ParseError(
            f"expected {need} payload bytes for n={n}, got {len(s) - body}",
            min(body + need, len(s)),
        )
    adj = [0] * n
    idx = 0  # running upper-triangle bit index
    for off in range(need):
        group = ord(s[body + off]) - 63
        for b in range(5, -1, -1):
            if idx >= n * (n - 1) // 2:
                if group >> b & 1:
                    raise Graph6ParseError("nonzero padding bits", body + off)
                continue
            if group >> b & 1:
                # invert idx -> (u, v): columns v=1.., rows u<v
                u, v = _triangle_pos(idx)
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            idx += 1
    return Graph(n, adj)


def _triangle_pos(idx: int) -> tuple[int, int]:
    """Map a flat upper-triangle index to (u, v), u < v, column-major."""
    # column v holds v bits and ends at index v(v+1)/2 - 1
    v = max(1, int((2 * idx) ** 0.5))
    while v * (v + 1) // 2 <= idx:
        v += 1
    while v * (v - 1) // 2 > idx:
        v -= 1
    return idx - v * (v - 1) // 2, v
