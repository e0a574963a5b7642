"""Isomorph-free generation of k-trees and maximal k-degenerate graphs.

Level-by-level: every order-(n-1) representative is extended by one vertex
joined to each admissible root set (a k-clique for k-trees, any k-subset for
maximal k-degenerate graphs), and the results are deduplicated by canonical
form. Deleting a degree-k vertex of either kind of graph leaves a graph of the
same kind, so every isomorphism class of order n is reached.
"""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from functools import lru_cache
from itertools import combinations

from . import bounds
from .canonical import CanonicalForm, canonical_form, canonical_graph
from .constructions import complete, power_of_path
from .formats import to_graph6
from .graph import Graph, _bits, distances

K_TREE = "kTree"
MAXIMAL_K_DEGENERATE = "maximalKDegenerate"
CLASSES = (K_TREE, MAXIMAL_K_DEGENERATE)

THREADS_ENV = "WIENER_DEGEN_THREADS"


class EnumerationBudgetError(RuntimeError):
    """Requested enumeration lies beyond the configured budget."""


def default_workers() -> int:
    cpus = os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            return max(1, min(cpus, int(cap)))
        except ValueError:
            pass
    return cpus


@dataclass(frozen=True)
class EnumerationConfig:
    """Enumeration limits.

    ``ceilings`` maps k to the largest order allowed; other k use
    ``k + default_extra``. ``max_graphs`` caps the size of any one level.
    """

    ceilings: tuple[tuple[int, int], ...] = ((1, 16), (2, 12), (3, 11))
    default_extra: int = 8
    max_graphs: int = 2_000_000
    workers: int = field(default_factory=default_workers)
    # levels smaller than this are extended serially
    parallel_threshold: int = 256

    def ceiling(self, k: int) -> int:
        return dict(self.ceilings).get(k, k + self.default_extra)

    def with_ceiling(self, k: int, n: int) -> "EnumerationConfig":
        table = dict(self.ceilings)
        table[k] = n
        return EnumerationConfig(tuple(sorted(table.items())), self.default_extra,
                                 self.max_graphs, self.workers, self.parallel_threshold)


DEFAULT_CONFIG = EnumerationConfig()


def k_cliques(g: Graph, k: int) -> list[tuple[int, ...]]:
    """All k-vertex cliques, each as a sorted tuple."""
    out: list[tuple[int, ...]] = []

    def grow(clique: list[int], cand: int) -> None:
        if len(clique) == k:
            out.append(tuple(clique))
            return
        for v in _bits(cand):
            grow(clique + [v], cand & g.rows[v] & ~((1 << (v + 1)) - 1))

    grow([], (1 << g.n) - 1)
    return out


def _extend_chunk(args: tuple[list[Graph], int, bool, int]) -> dict[str, Graph]:
    reps, k, cliques_only, ceiling = args
    found: dict[str, Graph] = {}
    for g in reps:
        roots = k_cliques(g, k) if cliques_only else combinations(range(g.n), k)
        for r in roots:
            h = canonical_graph(g.add_vertex(r), ceiling)
            found.setdefault(to_graph6(h), h)
    return found


def _check_budget(n: int, k: int, config: EnumerationConfig) -> None:
    if k < 1:
        raise ValueError("k must be at least 1")
    if n < k:
        raise ValueError(f"class undefined for n={n} < k={k}")
    if n > config.ceiling(k):
        raise EnumerationBudgetError(
            f"order {n} exceeds the enumeration ceiling {config.ceiling(k)} for k={k}"
        )


def generate(n: int, k: int, graph_class: str = K_TREE,
             config: EnumerationConfig = DEFAULT_CONFIG) -> tuple[Graph, ...]:
    """Canonical representatives of every isomorphism class, sorted by graph6 code."""
    if graph_class not in CLASSES:
        raise ValueError(f"unknown class {graph_class!r}")
    _check_budget(n, k, config)
    return _generate(n, k, graph_class, config)


@lru_cache(maxsize=None)
def _generate(n: int, k: int, graph_class: str, config: EnumerationConfig) -> tuple[Graph, ...]:
    ceiling = config.ceiling(k)
    if n == k:
        return (canonical_graph(complete(k), ceiling),)
    prev = _generate(n - 1, k, graph_class, config)
    cliques_only = graph_class == K_TREE
    workers = config.workers
    if workers > 1 and len(prev) >= config.parallel_threshold:
        chunks = [list(prev[i::workers]) for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_extend_chunk, [(c, k, cliques_only, ceiling) for c in chunks]))
    else:
        parts = [_extend_chunk((list(prev), k, cliques_only, ceiling))]
    merged: dict[str, Graph] = {}
    for part in parts:
        for code, h in part.items():
            merged.setdefault(code, h)
    if len(merged) > config.max_graphs:
        raise EnumerationBudgetError(
            f"{len(merged)} classes at order {n} exceed max_graphs={config.max_graphs}"
        )
    return tuple(merged[c] for c in sorted(merged))


def generate_k_trees(n: int, k: int, config: EnumerationConfig = DEFAULT_CONFIG) -> tuple[Graph, ...]:
    return generate(n, k, K_TREE, config)


def generate_maximal_k_degenerate(n: int, k: int,
                                  config: EnumerationConfig = DEFAULT_CONFIG) -> tuple[Graph, ...]:
    return generate(n, k, MAXIMAL_K_DEGENERATE, config)


@dataclass(frozen=True)
class EnumerationSummary:
    n: int
    k: int
    graph_class: str
    count: int
    wiener_min: int
    wiener_max: int
    minimizers: tuple[CanonicalForm, ...]
    maximizers: tuple[CanonicalForm, ...]
    diameter_histogram: tuple[tuple[int, int], ...]
    graphs: tuple[Graph, ...] = field(repr=False, compare=False, default=())
    wieners: tuple[int, ...] = field(repr=False, compare=False, default=())
    diameters: tuple[int, ...] = field(repr=False, compare=False, default=())
    checks: tuple[tuple[str, bool | None], ...] = ()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "class": self.graph_class,
            "count": self.count,
            "wiener_min": self.wiener_min,
            "wiener_max": self.wiener_max,
            "lower_bound": bounds.lower_bound(self.n, self.k),
            "upper_bound": bounds.upper_bound_sum(self.n, self.k) if self.n >= 2 else 0,
            "minimizers": [f.code for f in self.minimizers],
            "maximizers": [f.code for f in self.maximizers],
            "diameter_histogram": {str(d): c for d, c in self.diameter_histogram},
            "checks": {name: ok for name, ok in self.checks},
        }


def summarize(n: int, k: int, graph_class: str = K_TREE,
              config: EnumerationConfig = DEFAULT_CONFIG) -> EnumerationSummary:
    graphs = generate(n, k, graph_class, config)
    ws, diams = [], []
    for g in graphs:
        s = distances(g)
        ws.append(s.wiener)
        diams.append(s.diameter)
    lo, hi = min(ws), max(ws)
    forms = [CanonicalForm(to_graph6(g), g.n, g.size) for g in graphs]
    return EnumerationSummary(
        n=n,
        k=k,
        graph_class=graph_class,
        count=len(graphs),
        wiener_min=lo,
        wiener_max=hi,
        minimizers=tuple(f for f, w in zip(forms, ws) if w == lo),
        maximizers=tuple(f for f, w in zip(forms, ws) if w == hi),
        diameter_histogram=tuple(sorted(Counter(diams).items())),
        graphs=graphs,
        wieners=tuple(ws),
        diameters=tuple(diams),
    )


def enumerate_k_trees(n: int, k: int, config: EnumerationConfig = DEFAULT_CONFIG) -> EnumerationSummary:
    return summarize(n, k, K_TREE, config)


def enumerate_maximal_k_degenerate(n: int, k: int,
                                   config: EnumerationConfig = DEFAULT_CONFIG) -> EnumerationSummary:
    return summarize(n, k, MAXIMAL_K_DEGENERATE, config)


def expected_maximizers(n: int, k: int, graph_class: str,
                        config: EnumerationConfig = DEFAULT_CONFIG) -> set[str] | None:
    """Known upper-bound extremal classes, or ``None`` where none is claimed.

    Up to order 2k+1 every member attains the bound (all have diameter <= 2).
    From 2k+2 on the k-tree maximizer is P_n^k alone; for k = 1 every maximal
    1-degenerate graph is a tree and the path is the unique maximizer.
    """
    if n <= 2 * k + 1:
        return {to_graph6(g) for g in generate(n, k, graph_class, config)}
    if graph_class == K_TREE or k == 1:
        return {canonical_form(power_of_path(n, k), config.ceiling(k)).code}
    return None


def extremal_census(n: int, k: int, graph_class: str = K_TREE,
                    config: EnumerationConfig = DEFAULT_CONFIG) -> EnumerationSummary:
    """Summary plus cross-checks of the extremal graphs against the known bounds."""
    s = summarize(n, k, graph_class, config)
    lo = bounds.lower_bound(n, k)
    hi = bounds.upper_bound_sum(n, k) if n >= 2 else 0
    in_range = all(lo <= w <= hi for w in s.wieners)
    min_iff_diam2 = all((w == lo) == (d <= 2) for w, d in zip(s.wieners, s.diameters))
    expected = expected_maximizers(n, k, graph_class, config)
    found = {f.code for f in s.maximizers}
    checks = (
        ("bounds_hold", in_range),
        ("min_equals_lower_bound", s.wiener_min == lo),
        ("max_equals_upper_bound", s.wiener_max == hi),
        ("lower_bound_iff_diameter_le_2", min_iff_diam2),
        ("maximizers_match_characterization", None if expected is None else expected == found),
    )
    return replace(s, checks=checks)
