"""Immutable simple graphs and exact hop-distance invariants.

Vertices are ``0..n-1``. Each vertex keeps a sorted neighbour tuple and a
bitset row (a Python int with bit ``v`` set when ``v`` is a neighbour).
Distance computations run on the bitset rows: every vertex grows its closed
ball one hop at a time, ``ball_{d+1}(u) = OR of ball_d(v) for v in N[u]``,
and all distance invariants fall out of the ball sizes.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce
from operator import or_
from typing import Iterable, Sequence

# Larger than any hop count a graph on fewer than 2**31 vertices can have.
UNREACHABLE = 2**31 - 1


class GraphError(ValueError):
    """Malformed graph input (loops, out-of-range indices, ...)."""


class DisconnectedGraphError(GraphError):
    """Raised where an operation needs a connected graph."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    rows: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for order {self.n}")
        rows = []
        for u, nbrs in enumerate(self.adj):
            mask = 0
            for v in nbrs:
                if v == u:
                    raise GraphError(f"loop at vertex {u}")
                if not 0 <= v < self.n:
                    raise GraphError(f"neighbour {v} of {u} out of range")
                mask |= 1 << v
            rows.append(mask)
        for u, mask in enumerate(rows):
            for v in self.adj[u]:
                if not rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "rows", tuple(rows))

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        adj = tuple(tuple(_bits(r)) for r in rows)
        return cls(len(rows), adj)

    @property
    def order(self) -> int:
        return self.n

    @property
    def size(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph in which old vertex ``u`` becomes ``perm[u]``."""
        if sorted(perm) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation")
        new_adj = [()] * self.n
        for u in range(self.n):
            new_adj[perm[u]] = tuple(sorted(perm[v] for v in self.adj[u]))
        return Graph(self.n, tuple(new_adj))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, vertices renumbered in increasing order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = tuple(tuple(index[w] for w in self.adj[v] if w in index) for v in keep)
        return Graph(len(keep), adj)

    def delete_vertex(self, v: int) -> "Graph":
        """G - v; vertices above ``v`` shift down by one."""
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range")
        return self.induced(u for u in range(self.n) if u != v)

    def add_vertex(self, neighbors: Iterable[int]) -> "Graph":
        """New vertex ``n`` joined to ``neighbors``."""
        nbrs = set(neighbors)
        rows = list(self.rows)
        new = 0
        for v in nbrs:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} out of range")
            rows[v] |= 1 << self.n
            new |= 1 << v
        rows.append(new)
        return Graph.from_rows(rows)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = frontier = 1
        while frontier:
            reach = reduce(or_, (self.rows[v] for v in _bits(frontier)), 0)
            frontier = reach & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("negative order")
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for order {n}")
        nbrs[u].add(v)
        nbrs[v].add(u)
    return Graph(n, tuple(tuple(sorted(s)) for s in nbrs))


@dataclass(frozen=True)
class DistanceSummary:
    """All-pairs hop distances and the invariants derived from them.

    ``status``, ``eccentricity``, ``diameter`` and ``wiener`` are ``None`` for a
    disconnected graph; ``connected`` is the flag to check.
    ``distribution[i - 1]`` is the number of unordered pairs at distance ``i``.
    """

    n: int
    matrix: tuple[tuple[int, ...], ...]
    connected: bool
    status: tuple[int, ...] | None
    eccentricity: tuple[int, ...] | None
    diameter: int | None
    distribution: tuple[int, ...]
    wiener: int | None

    @property
    def wiener_is_infinite(self) -> bool:
        return not self.connected

    def layer(self, u: int, i: int) -> list[int]:
        """Vertices at hop distance exactly ``i`` from ``u``."""
        return [v for v, d in enumerate(self.matrix[u]) if d == i]


def _closed_members(g: Graph) -> list[list[int]]:
    return [[u, *g.adj[u]] for u in range(g.n)]


def distances(g: Graph) -> DistanceSummary:
    n = g.n
    full = (1 << n) - 1
    balls = [r | (1 << u) for u, r in enumerate(g.rows)]
    closed = _closed_members(g)
    matrix = [[UNREACHABLE] * n for _ in range(n)]
    status = [0] * n
    ecc = [0] * n
    counts: list[int] = []  # ordered-pair counts per distance
    for u in range(n):
        matrix[u][u] = 0
        fresh = g.rows[u]
        for v in _bits(fresh):
            matrix[u][v] = 1
        status[u] = fresh.bit_count()
        if fresh:
            ecc[u] = 1
    if any(status):
        counts.append(sum(status))
    stuck = False
    active = [u for u in range(n) if balls[u] != full]
    d = 1
    while active:
        d += 1
        get = balls.__getitem__
        grown = [(u, reduce(or_, map(get, closed[u]))) for u in active]
        nxt = []
        layer_total = 0
        for u, b in grown:
            fresh = b & ~balls[u]
            if not fresh:
                stuck = True
                continue
            balls[u] = b
            row = matrix[u]
            c = 0
            for v in _bits(fresh):
                row[v] = d
                c += 1
            status[u] += d * c
            ecc[u] = d
            layer_total += c
            if b != full:
                nxt.append(u)
        if layer_total:
            counts.append(layer_total)
        active = nxt
    distribution = tuple(c // 2 for c in counts)
    frozen = tuple(tuple(r) for r in matrix)
    if stuck:
        return DistanceSummary(n, frozen, False, None, None, None, distribution, None)
    return DistanceSummary(
        n,
        frozen,
        True,
        tuple(status),
        tuple(ecc),
        max(ecc, default=0),
        distribution,
        sum(status) // 2,
    )


def wiener(g: Graph) -> int:
    """Wiener index without materialising the distance matrix.

    Uses ``W = 1/2 * sum_u sum_{d >= 0} (n - |ball_d(u)|)``.
    """
    n = g.n
    if n <= 1:
        return 0
    full = (1 << n) - 1
    balls = [r | (1 << u) for u, r in enumerate(g.rows)]
    closed = _closed_members(g)
    total = n * (n - 1) + n * n - sum(map(int.bit_count, balls))
    active = [u for u in range(n) if balls[u] != full]
    while active:
        get = balls.__getitem__
        grown = [(u, reduce(or_, map(get, closed[u]))) for u in active]
        nxt = []
        for u, b in grown:
            if b == balls[u]:
                raise DisconnectedGraphError("Wiener index is infinite on a disconnected graph")
            balls[u] = b
            if b != full:
                nxt.append(u)
        total += len(nxt) * n - sum(balls[u].bit_count() for u in nxt)
        active = nxt
    return total // 2


def status(g: Graph, v: int) -> int:
    """Sum of hop distances from ``v`` (single-source BFS)."""
    seen = frontier = 1 << v
    total = 0
    d = 0
    while frontier:
        d += 1
        reach = reduce(or_, (g.rows[u] for u in _bits(frontier)), 0)
        frontier = reach & ~seen
        seen |= frontier
        total += d * frontier.bit_count()
    if seen != (1 << g.n) - 1:
        raise DisconnectedGraphError(f"vertex {v} does not reach every vertex")
    return total


def is_isometric_after_deletion(g: Graph, v: int) -> bool:
    """True when deleting ``v`` leaves every other distance unchanged."""
    before = distances(g)
    if not before.connected:
        raise DisconnectedGraphError("graph is disconnected")
    h = g.delete_vertex(v)
    after = distances(h)
    if not after.connected:
        raise DisconnectedGraphError(f"deleting vertex {v} disconnects the graph")
    keep = [u for u in range(g.n) if u != v]
    return all(
        after.matrix[i][j] == before.matrix[a][b]
        for i, a in enumerate(keep)
        for j, b in enumerate(keep)
        if i < j
    )
