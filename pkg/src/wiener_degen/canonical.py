"""Canonical labeling by partition refinement and individualization.

The canonical labeling is the vertex order whose upper-triangular adjacency
bit string (graph6 column order) is lexicographically smallest among the
leaves of the search tree. The search tree starts from the equitable
refinement of the (degree, neighbour-degree multiset) partition; at each node
the first non-singleton cell is split by individualizing one vertex and
refining again. Twins (vertices with equal open or closed neighbourhoods) are
interchangeable by an automorphism, so only one vertex per twin class is
tried in a cell.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formats import to_graph6
from .graph import Graph, GraphError

DEFAULT_CEILING = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """graph6 string of the canonically relabeled graph."""

    code: str
    n: int
    m: int

    def __str__(self) -> str:
        return self.code


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        out: list[list[int]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in cell:
                sig = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(sig, []).append(v)
            out.extend(groups[s] for s in sorted(groups))
        if len(out) == len(cells):
            return out
        cells = out


def _initial_cells(g: Graph) -> list[list[int]]:
    deg = g.degrees()
    groups: dict[tuple, list[int]] = {}
    for v in range(g.n):
        key = (deg[v], tuple(sorted(deg[u] for u in g.adj[v])))
        groups.setdefault(key, []).append(v)
    return [groups[key] for key in sorted(groups)]


def _twin_classes(g: Graph) -> list[int]:
    """Representative per vertex: equal open or equal closed neighbourhoods."""
    by_open: dict[int, int] = {}
    by_closed: dict[int, int] = {}
    for v in range(g.n):
        by_open.setdefault(g.rows[v], v)
        by_closed.setdefault(g.rows[v] | (1 << v), v)
    rep = []
    for v in range(g.n):
        a = by_open[g.rows[v]]
        rep.append(a if a != v else by_closed[g.rows[v] | (1 << v)])
    return rep


def _code(rows: tuple[int, ...], order: list[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_order(g: Graph, ceiling: int | None = DEFAULT_CEILING) -> list[int]:
    """Vertices listed in canonical position order."""
    if ceiling is not None and g.n > ceiling:
        raise GraphError(f"order {g.n} exceeds the canonical-form ceiling {ceiling}")
    rows = g.rows
    twins = _twin_classes(g)
    best_code = -1
    best_order: list[int] = []

    def search(cells: list[list[int]]) -> None:
        nonlocal best_code, best_order
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            order = [c[0] for c in cells]
            code = _code(rows, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        seen = set()
        for v in cell:
            if twins[v] in seen:
                continue
            seen.add(twins[v])
            rest = [u for u in cell if u != v]
            search(_refine(rows, cells[:target] + [[v], rest] + cells[target + 1:]))

    search(_refine(rows, _initial_cells(g)))
    return best_order


def canonical_graph(g: Graph, ceiling: int | None = DEFAULT_CEILING) -> Graph:
    order = canonical_order(g, ceiling)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)


def canonical_form(g: Graph, ceiling: int | None = DEFAULT_CEILING) -> CanonicalForm:
    return CanonicalForm(to_graph6(canonical_graph(g, ceiling)), g.n, g.size)


def is_isomorphic(g: Graph, h: Graph, ceiling: int | None = DEFAULT_CEILING) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    return canonical_form(g, ceiling) == canonical_form(h, ceiling)
