"""Graph families: path powers, joins, k-trees from traces, and named graphs.

Every constructor numbers vertices deterministically; the numbering is given
in each docstring so tests and CLI output are reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable

from .graph import Graph, GraphError, from_edge_list


def complete(n: int) -> Graph:
    return from_edge_list(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    """Edgeless graph on ``n`` vertices (the complement of K_n)."""
    return from_edge_list(n, [])


def path(n: int) -> Graph:
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def power_of_path(n: int, k: int) -> Graph:
    """P_n^k: vertices ``0..n-1``, ``u ~ v`` iff ``0 < |u - v| <= k``."""
    if n < 1 or k < 1:
        raise GraphError("power_of_path needs n >= 1 and k >= 1")
    return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, min(n, u + k + 1))])


def join(g: Graph, h: Graph) -> Graph:
    """G + H: ``g`` keeps vertices ``0..|g|-1``, ``h`` is shifted by ``|g|``."""
    off = g.n
    edges = g.edges() + [(u + off, v + off) for u, v in h.edges()]
    edges += [(u, v + off) for u in range(g.n) for v in range(h.n)]
    return from_edge_list(g.n + h.n, edges)


def disjoint_union(g: Graph, h: Graph) -> Graph:
    off = g.n
    return from_edge_list(g.n + h.n, g.edges() + [(u + off, v + off) for u, v in h.edges()])


def star(n: int) -> Graph:
    """K_1 + empty(n-1); the centre is vertex 0."""
    return join(complete(1), empty(n - 1))


def fan(n: int) -> Graph:
    """P_{n-1} + K_1; path on ``0..n-2``, apex ``n-1``."""
    return join(path(n - 1), complete(1))


def k_join_empty(n: int, k: int) -> Graph:
    """K_k + empty(n-k); clique on ``0..k-1``."""
    if n < k:
        raise GraphError("K_k + empty(n-k) needs n >= k")
    return join(complete(k), empty(n - k))


def chair() -> Graph:
    """The order-5 tree that is neither a path nor a star: path 0-1-2-3, leaf 4 on 1."""
    return from_edge_list(5, [(0, 1), (1, 2), (2, 3), (1, 4)])


def triangular_grid() -> Graph:
    """Tr_2: triangle 0,1,2 with 3 on edge 01, 4 on edge 12, 5 on edge 02."""
    return from_edge_list(6, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 0), (5, 2)])


def k4_three_regions() -> Graph:
    """K_4 on a=0,b=1,c=2,d=3 plus 4 on abc, 5 on abd, 6 on acd."""
    roots = [(0, 1, 2), (0, 1, 3), (0, 2, 3)]
    edges = list(combinations(range(4), 2))
    for i, r in enumerate(roots):
        edges += [(4 + i, v) for v in r]
    return from_edge_list(7, edges)


@dataclass(frozen=True)
class ConstructionTrace:
    """Build order for a k-tree or maximal k-degenerate graph.

    Starts from K_k on ``0..k-1``; step ``t`` adds vertex ``k + t`` joined to
    the ``k`` vertices of ``steps[t]``.
    """

    k: int
    steps: tuple[tuple[int, ...], ...] = ()
    clique_roots_required: bool = True
    base_order: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "base_order", self.k)
        object.__setattr__(self, "steps", tuple(tuple(s) for s in self.steps))

    @property
    def order(self) -> int:
        return self.k + len(self.steps)

    def validate(self) -> None:
        if self.k < 1:
            raise GraphError("trace needs k >= 1")
        for t, roots in enumerate(self.steps):
            if len(set(roots)) != self.k or len(roots) != self.k:
                raise GraphError(f"step {t}: root set {roots} must have exactly {self.k} distinct vertices")
            for v in roots:
                if not 0 <= v < self.k + t:
                    raise GraphError(f"step {t}: vertex {v} does not exist yet")

    @classmethod
    def from_json(cls, text: str) -> "ConstructionTrace":
        data = json.loads(text)
        return cls(
            k=int(data["k"]),
            steps=tuple(tuple(int(v) for v in s) for s in data.get("steps", [])),
            clique_roots_required=bool(data.get("clique_roots", True)),
        )

    def to_json(self) -> str:
        return json.dumps({"k": self.k, "steps": [list(s) for s in self.steps],
                           "clique_roots": self.clique_roots_required})


def _build(trace: ConstructionTrace, need_clique: bool) -> Graph:
    trace.validate()
    g = complete(trace.k)
    for t, roots in enumerate(trace.steps):
        if need_clique:
            for u, v in combinations(roots, 2):
                if not g.has_edge(u, v):
                    raise GraphError(f"step {t}: root set {roots} is not a clique ({u}, {v} non-adjacent)")
        g = g.add_vertex(roots)
    return g


def construct_k_tree(trace: ConstructionTrace) -> Graph:
    return _build(trace, need_clique=True)


def construct_maximal_k_degenerate(trace: ConstructionTrace) -> Graph:
    """Same build without the clique requirement on root sets."""
    return _build(trace, need_clique=False)


def path_power_trace(n: int, k: int) -> ConstructionTrace:
    """Trace whose k-tree is P_n^k (each vertex rooted at the previous k)."""
    return ConstructionTrace(k, tuple(tuple(range(v - k, v)) for v in range(k, n)))


def _named(name: str) -> str:
    return name.lower().replace("_", "").replace("-", "")


# Each builder receives the keyword params handed to named_graph.
_REGISTRY: dict[str, Callable[..., Graph]] = {
    "tr2": lambda: triangular_grid(),
    "fan": lambda n: fan(n),
    "star": lambda n: star(n),
    "treejoin": lambda tree: join(tree, complete(1)),
    "t5": lambda: chair(),
    "k3treet5": lambda: chair(),
    "order7k3joink4bar": lambda: join(complete(3), empty(4)),
    "order7k2joint5": lambda: join(complete(2), chair()),
    "order7p5joink2": lambda: join(path(5), complete(2)),
    "order7k4threeregions": lambda: k4_three_regions(),
    "order7k4regions": lambda: k4_three_regions(),
    "kkjoinempty": lambda n, k: k_join_empty(n, k),
    "pnk": lambda n, k: power_of_path(n, k),
    "path": lambda n: path(n),
    "complete": lambda n: complete(n),
    "cycle": lambda n: cycle(n),
}

NAMES = sorted(_REGISTRY)


def named_graph(name: str, **params) -> Graph:
    key = _named(name)
    if key not in _REGISTRY:
        raise KeyError(f"unknown graph name {name!r}")
    try:
        return _REGISTRY[key](**params)
    except TypeError as exc:
        raise GraphError(f"bad parameters for {name!r}: {exc}") from None


def order7_extremal_3trees() -> dict[str, Graph]:
    """The five order-7 3-trees attaining the upper bound, keyed by name."""
    return {
        "P7^3": power_of_path(7, 3),
        "order7_K3_join_K4bar": named_graph("order7_K3_join_K4bar"),
        "order7_K2_join_T5": named_graph("order7_K2_join_T5"),
        "order7_P5_join_K2": named_graph("order7_P5_join_K2"),
        "order7_K4_three_regions": named_graph("order7_K4_three_regions"),
    }

