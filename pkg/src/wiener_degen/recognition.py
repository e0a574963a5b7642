"""Class membership tests: k-degenerate, maximal k-degenerate, chordal, k-tree.

Positive answers come with an elimination ordering that can be replayed.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .graph import Graph, GraphError, _bits, distances


@dataclass(frozen=True)
class EliminationCertificate:
    kind: str  # "degeneracy" | "perfect-elimination"
    order: tuple[int, ...]
    degrees_at_removal: tuple[int, ...]

    def check(self, g: Graph, k: int | None = None) -> bool:
        """Replay the ordering against ``g``."""
        if sorted(self.order) != list(range(g.n)):
            return False
        remaining = (1 << g.n) - 1
        for v, deg in zip(self.order, self.degrees_at_removal):
            nbrs = g.rows[v] & remaining
            if nbrs.bit_count() != deg:
                return False
            if self.kind == "degeneracy" and k is not None and deg > k:
                return False
            if self.kind == "perfect-elimination" and not _is_clique(g, nbrs):
                return False
            remaining &= ~(1 << v)
        return True


def _is_clique(g: Graph, mask: int) -> bool:
    return all((g.rows[u] | (1 << u)) & mask == mask for u in _bits(mask))


def degeneracy_ordering(g: Graph) -> EliminationCertificate:
    """Repeatedly delete a minimum-degree vertex (lowest index on ties)."""
    n = g.n
    deg = g.degrees()
    buckets: list[set[int]] = [set() for _ in range(max(deg, default=0) + 1)]
    for v, d in enumerate(deg):
        buckets[d].add(v)
    removed = [False] * n
    order, degs = [], []
    low = 0
    for _ in range(n):
        low = max(low - 1, 0)
        while not buckets[low]:
            low += 1
        v = min(buckets[low])
        buckets[low].remove(v)
        removed[v] = True
        order.append(v)
        degs.append(low)
        for u in g.adj[v]:
            if not removed[u]:
                buckets[deg[u]].remove(u)
                deg[u] -= 1
                buckets[deg[u]].add(u)
    return EliminationCertificate("degeneracy", tuple(order), tuple(degs))


def degeneracy(g: Graph) -> int:
    return max(degeneracy_ordering(g).degrees_at_removal, default=0)


def is_k_degenerate(g: Graph, k: int) -> bool:
    return degeneracy(g) <= k


def maximal_edge_count(n: int, k: int) -> int:
    """Edge count of a maximal k-degenerate graph of order ``n >= k``."""
    return k * n - comb(k + 1, 2)


def _check_order(g: Graph, k: int) -> None:
    if k < 1:
        raise GraphError("k must be at least 1")
    if g.n < k:
        raise GraphError(f"class undefined for order {g.n} < k = {k}")


def is_maximal_k_degenerate(g: Graph, k: int) -> bool:
    _check_order(g, k)
    return g.size == maximal_edge_count(g.n, k) and degeneracy(g) <= k


def perfect_elimination_ordering(g: Graph) -> EliminationCertificate | None:
    """Greedy simplicial-vertex elimination; ``None`` when the graph is not chordal.

    Deleting a simplicial vertex keeps a chordal graph chordal and every chordal
    graph has one, so the greedy never needs to backtrack.
    """
    remaining = (1 << g.n) - 1
    order, degs = [], []
    while remaining:
        for v in _bits(remaining):
            nbrs = g.rows[v] & remaining
            if _is_clique(g, nbrs):
                break
        else:
            return None
        order.append(v)
        degs.append(nbrs.bit_count())
        remaining &= ~(1 << v)
    return EliminationCertificate("perfect-elimination", tuple(order), tuple(degs))


def is_chordal(g: Graph) -> bool:
    return perfect_elimination_ordering(g) is not None


def is_k_tree(g: Graph, k: int) -> bool:
    _check_order(g, k)
    return is_chordal(g) and is_maximal_k_degenerate(g, k)


def is_outerplanar_2tree(g: Graph) -> bool:
    """Maximal-outerplanar test for a 2-tree, read off its construction.

    Each triangle of a 2-tree is created by exactly one vertex attachment, so
    the number of triangles on an edge records how often the edge served as a
    root (plus one if the edge itself was created by an attachment). The
    2-tree is outerplanar exactly when no edge lies on three triangles, i.e.
    when no edge is used as a root more than its construction allows.
    """
    if not is_k_tree(g, 2):
        raise GraphError("graph is not a 2-tree")
    return all((g.rows[u] & g.rows[v]).bit_count() <= 2 for u, v in g.edges())


class Prop4Counterexample(RuntimeError):
    """A diameter-2 2-tree outside both families of the characterization."""


@dataclass(frozen=True)
class TwoTreeClass:
    """Family membership of a diameter-2 2-tree.

    ``apexes``: universal vertices whose deletion leaves a tree (G = T + K_1).
    ``triangles``: triangles every other vertex is rooted on.
    """

    kind: str  # "TreeJoin" | "K3Rooted" | "Both"
    apexes: tuple[int, ...]
    triangles: tuple[tuple[int, int, int], ...]

    def tree(self, g: Graph) -> Graph | None:
        return g.delete_vertex(self.apexes[0]) if self.apexes else None


def classify_2tree_diam2(g: Graph) -> TwoTreeClass:
    if g.n < 2 or not is_k_tree(g, 2):
        raise GraphError("graph is not a 2-tree")
    if distances(g).diameter != 2:
        raise GraphError("2-tree does not have diameter 2")
    full = (1 << g.n) - 1
    apexes = []
    for v in range(g.n):
        if g.rows[v] | (1 << v) == full:
            t = g.delete_vertex(v)
            if t.size == t.n - 1 and t.is_connected():
                apexes.append(v)
    triangles = []
    for a, b, c in combinations(range(g.n), 3):
        if not (g.has_edge(a, b) and g.has_edge(b, c) and g.has_edge(a, c)):
            continue
        tri = (1 << a) | (1 << b) | (1 << c)
        if all(g.degree(v) == 2 and g.rows[v] & ~tri == 0 for v in _bits(full & ~tri)):
            triangles.append((a, b, c))
    if apexes and triangles:
        kind = "Both"
    elif apexes:
        kind = "TreeJoin"
    elif triangles:
        kind = "K3Rooted"
    else:
        raise Prop4Counterexample(f"diameter-2 2-tree in neither family: {g.edges()}")
    return TwoTreeClass(kind, tuple(apexes), tuple(triangles))
