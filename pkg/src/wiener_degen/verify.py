"""Claim registry behind ``wiener-degen verify``.

Each claim has a stable id (used by CI assertions) and maps to one numbered
acceptance criterion. Checks that need an enumeration beyond the configured
ceiling are reported as skipped, never silently truncated.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator

from . import bounds
from .canonical import canonical_form
from .constructions import (complete, empty, fan, join, order7_extremal_3trees,
                            path, power_of_path, star, triangular_grid)
from .enumeration import (DEFAULT_CONFIG, K_TREE, MAXIMAL_K_DEGENERATE,
                          EnumerationBudgetError, EnumerationConfig, generate,
                          summarize)
from .formats import to_graph6
from .graph import Graph, distances, from_edge_list, status, wiener
from .recognition import (Prop4Counterexample, classify_2tree_diam2,
                          is_outerplanar_2tree)

SCHEMA = 1
SUITES = ("formulas", "sharpness", "prop4", "thm5", "cor2", "all")

# Rows of the published table of W(P_n^k), n = 1..10.
PUBLISHED_TABLE = {
    1: [0, 1, 4, 10, 20, 35, 56, 84, 120, 165],
    2: [0, 1, 3, 7, 13, 22, 34, 50, 70, 95],
    3: [0, 1, 3, 6, 11, 18, 27, 39, 54, 72],
    4: [0, 1, 3, 6, 10, 16, 24, 34, 46, 61],
    5: [0, 1, 3, 6, 10, 15, 22, 31, 42, 55],
}

# (k, largest n) for the exhaustive bound checks.
EXHAUSTIVE_RANGES = ((1, 10), (2, 9), (3, 8))


@dataclass
class Claim:
    claim_id: str
    criterion: int
    anchor: str
    parameters: dict
    status: str = "verified"  # verified | refuted | skipped
    witness: str | None = None
    detail: str = ""

    def to_dict(self) -> dict:
        return {
            "id": self.claim_id,
            "criterion": self.criterion,
            "anchor": self.anchor,
            "parameters": self.parameters,
            "status": self.status,
            "witness": self.witness,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    suite: str
    claims: list[Claim] = field(default_factory=list)
    runtime_seconds: float = 0.0

    @property
    def refuted(self) -> list[Claim]:
        return [c for c in self.claims if c.status == "refuted"]

    @property
    def skipped(self) -> list[Claim]:
        return [c for c in self.claims if c.status == "skipped"]

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA,
            "suite": self.suite,
            "runtime_seconds": round(self.runtime_seconds, 3),
            "claims": [c.to_dict() for c in self.claims],
        }


@dataclass(frozen=True)
class VerifyOptions:
    k: int | None = None
    max_n: int | None = None
    samples: int = 10_000
    seed: int = 0
    config: EnumerationConfig = DEFAULT_CONFIG

    def wants(self, k: int) -> bool:
        return self.k is None or self.k == k

    def cap(self, n: int) -> int:
        return n if self.max_n is None else min(n, self.max_n)


class Refuted(Exception):
    def __init__(self, detail: str, witness: Graph | None = None):
        super().__init__(detail)
        self.detail = detail
        self.witness = witness


def _run(claim: Claim, check: Callable[[], str | None]) -> Claim:
    try:
        claim.detail = check() or ""
    except Refuted as exc:
        claim.status = "refuted"
        claim.detail = exc.detail
        claim.witness = to_graph6(exc.witness) if exc.witness is not None else None
    except EnumerationBudgetError as exc:
        claim.status = "skipped"
        claim.detail = str(exc)
    return claim


# -- formulas ---------------------------------------------------------------

def _table() -> str:
    for k, row in PUBLISHED_TABLE.items():
        got = bounds.sequence(k, 10)
        if got != row:
            raise Refuted(f"k={k}: got {got}, table has {row}")
    return "5 rows match"


def _coherence(max_n: int, max_k: int) -> str:
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            s = bounds.upper_bound_sum(n, k)
            if s != bounds.upper_bound_closed(n, k):
                raise Refuted(f"sum != closed form at n={n}, k={k}")
            if k <= 5 and s != bounds.floor_formula(n, k):
                raise Refuted(f"sum != floor formula at n={n}, k={k}")
    return f"n<={max_n}, k<={max_k}"


def _window(max_k: int) -> str:
    for k in range(1, max_k + 1):
        for n in range(max(k, 2), 2 * k + 2):
            if bounds.lower_bound(n, k) != bounds.upper_bound_sum(n, k):
                raise Refuted(f"bounds differ inside the window at n={n}, k={k}")
        n = 2 * k + 2
        if not bounds.lower_bound(n, k) < bounds.upper_bound_sum(n, k):
            raise Refuted(f"bounds not strictly ordered at n={n}, k={k}")
    return f"k<={max_k}"


def _status_path_power(max_n: int, max_k: int) -> str:
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            g = power_of_path(n, k)
            if status(g, 0) != bounds.status_bound(n, k):
                raise Refuted(f"endpoint status differs from the bound at n={n}, k={k}", g)
    return f"n<={max_n}, k<={max_k}"


# -- sharpness ----------------------------------------------------------------

def _path_power_upper(max_n: int, max_k: int) -> str:
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            g = power_of_path(n, k)
            if wiener(g) != bounds.upper_bound_sum(n, k):
                raise Refuted(f"W(P_{n}^{k}) != upper bound", g)
    return f"n<={max_n}, k<={max_k}"


def _join_lower(max_n: int, max_k: int) -> str:
    for k in range(1, max_k + 1):
        for n in range(max(k, 2), max_n + 1):
            g = join(complete(k), empty(n - k))
            if wiener(g) != bounds.lower_bound(n, k):
                raise Refuted(f"W(K_{k} + empty({n - k})) != lower bound", g)
    return f"n<={max_n}, k<={max_k}"


def _exhaustive(k: int, max_n: int, config: EnumerationConfig) -> str:
    total = 0
    for n in range(k, max_n + 1):
        lo = bounds.lower_bound(n, k)
        hi = bounds.upper_bound_sum(n, k) if n >= 2 else 0
        s = summarize(n, k, MAXIMAL_K_DEGENERATE, config)
        for g, w, d in zip(s.graphs, s.wieners, s.diameters):
            if not lo <= w <= hi:
                raise Refuted(f"W={w} outside [{lo}, {hi}] at n={n}", g)
            if (w == lo) != (d <= 2):
                raise Refuted(f"W={w}, diameter={d}: lower-bound equality mismatch at n={n}", g)
        total += s.count
    return f"{total} graphs"


def _status_exhaustive(config: EnumerationConfig, opts: VerifyOptions) -> str:
    total = 0
    for k, top in EXHAUSTIVE_RANGES:
        if not opts.wants(k):
            continue
        for n in range(max(k, 2), opts.cap(top) + 1):
            cap = bounds.status_bound(n, k)
            for g in generate(n, k, MAXIMAL_K_DEGENERATE, config):
                worst = max(distances(g).status)
                if worst > cap:
                    raise Refuted(f"status {worst} exceeds {cap} at n={n}, k={k}", g)
                total += 1
    return f"{total} graphs"


def random_connected_graph(rng: random.Random, max_n: int = 9) -> Graph:
    while True:
        n = rng.randint(1, max_n)
        p = rng.random()
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        g = from_edge_list(n, edges)
        if g.is_connected():
            return g


def deletion_inequality_holds(g: Graph) -> Iterator[tuple[int, bool]]:
    """Yield (v, ok) for each vertex whose deletion keeps ``g`` connected."""
    if g.n < 2:
        return
    dg = distances(g)
    for v in range(g.n):
        dh = distances(g.delete_vertex(v))
        if not dh.connected:
            continue
        keep = [u for u in range(g.n) if u != v]
        isometric = all(dh.matrix[i][j] == dg.matrix[a][b]
                        for i, a in enumerate(keep) for j, b in enumerate(keep) if i < j)
        rhs = dh.wiener + dg.status[v]
        yield v, dg.wiener <= rhs and ((dg.wiener == rhs) == isometric)


def _deletion(samples: int, seed: int) -> str:
    rng = random.Random(seed)
    checked = 0
    for _ in range(samples):
        g = random_connected_graph(rng)
        for v, ok in deletion_inequality_holds(g):
            if not ok:
                raise Refuted(f"deletion of vertex {v} breaks the inequality or its equality case", g)
            checked += 1
    return f"{samples} graphs, {checked} deletions"


# -- characterizations ----------------------------------------------------------

def _prop4(max_n: int, config: EnumerationConfig) -> str:
    kinds = {"TreeJoin": 0, "K3Rooted": 0, "Both": 0}
    for n in range(4, max_n + 1):
        for g in generate(n, 2, K_TREE, config):
            if distances(g).diameter != 2:
                continue
            try:
                kinds[classify_2tree_diam2(g).kind] += 1
            except Prop4Counterexample as exc:
                raise Refuted(str(exc), g) from None
    return ", ".join(f"{k}={v}" for k, v in kinds.items())


def _codes(graphs, config: EnumerationConfig, k: int) -> set[str]:
    return {canonical_form(g, config.ceiling(k)).code for g in graphs}


def _prop4_outerplanar(config: EnumerationConfig) -> str:
    found = {to_graph6(g) for g in generate(6, 2, K_TREE, config)
             if distances(g).diameter == 2 and is_outerplanar_2tree(g)}
    expected = _codes([fan(6), triangular_grid()], config, 2)
    if found != expected:
        raise Refuted(f"outerplanar diameter-2 2-trees of order 6: {sorted(found)} != {sorted(expected)}")
    return "fan and Tr2"


def _maximizer_codes(n: int, k: int, graph_class: str, config: EnumerationConfig) -> set[str]:
    return {f.code for f in summarize(n, k, graph_class, config).maximizers}


def _unique_path_power(n: int, k: int, config: EnumerationConfig) -> str:
    found = _maximizer_codes(n, k, K_TREE, config)
    expected = _codes([power_of_path(n, k)], config, k)
    if found != expected:
        raise Refuted(f"{len(found)} maximizer classes: {sorted(found)}")
    return f"P_{n}^{k} only"


def _expect_sets(n: int, k: int, graph_class: str, maxi: list[Graph] | None,
                 mini: list[Graph] | None, config: EnumerationConfig) -> str:
    s = summarize(n, k, graph_class, config)
    if maxi is not None:
        want = _codes(maxi, config, k)
        got = {f.code for f in s.maximizers}
        if got != want:
            raise Refuted(f"maximizers {sorted(got)} != expected {sorted(want)}")
    if mini is not None:
        want = _codes(mini, config, k)
        got = {f.code for f in s.minimizers}
        if got != want:
            raise Refuted(f"minimizers {sorted(got)} != expected {sorted(want)}")
    return f"{s.count} classes, {len(s.maximizers)} maximizers, {len(s.minimizers)} minimizers"


def _outerplanar_extremes(n: int, config: EnumerationConfig) -> str:
    members = [g for g in generate(n, 2, K_TREE, config) if is_outerplanar_2tree(g)]
    ws = [wiener(g) for g in members]
    lo, hi = min(ws), max(ws)
    mins = {to_graph6(g) for g, w in zip(members, ws) if w == lo}
    maxs = {to_graph6(g) for g, w in zip(members, ws) if w == hi}
    want_min = [fan(n)] + ([triangular_grid()] if n == 6 else [])
    if mins != _codes(want_min, config, 2):
        raise Refuted(f"outerplanar minimizers at n={n}: {sorted(mins)}")
    if maxs != _codes([power_of_path(n, 2)], config, 2):
        raise Refuted(f"outerplanar maximizers at n={n}: {sorted(maxs)}")
    return f"{len(members)} maximal outerplanar graphs"


# -- registry -------------------------------------------------------------------

def _formula_claims(opts: VerifyOptions) -> list[tuple[Claim, Callable[[], str | None]]]:
    return [
        (Claim("table.sequences", 1, "W(P_n^k) table rows for k=1..5, n=1..10", {}), _table),
        (Claim("formulas.coherence", 2, "binomial sum = cubic closed form = floor formula (k<=5)",
               {"max_n": opts.cap(1000), "max_k": 50}),
         lambda: _coherence(opts.cap(1000), 50)),
        (Claim("coincidence.window", 10, "lower = upper for k <= n <= 2k+1, strict at 2k+2",
               {"max_k": 50}), lambda: _window(50)),
        (Claim("lemma2.path_power", 8, "endpoint of P_n^k attains the k-connected status bound",
               {"max_n": opts.cap(200), "max_k": 10}),
         lambda: _status_path_power(opts.cap(200), 10)),
    ]


def _sharpness_claims(opts: VerifyOptions) -> list[tuple[Claim, Callable[[], str | None]]]:
    cfg = opts.config
    claims = [
        (Claim("thm2.construction", 3, "W(P_n^k) equals the upper bound",
               {"max_n": opts.cap(300), "max_k": 10}),
         lambda: _path_power_upper(opts.cap(300), 10)),
        (Claim("thm1.sharpness", 3, "W(K_k + empty(n-k)) equals the lower bound",
               {"max_n": opts.cap(300), "max_k": 10}),
         lambda: _join_lower(opts.cap(300), 10)),
    ]
    for k, top in EXHAUSTIVE_RANGES:
        if opts.wants(k):
            n = opts.cap(top)
            claims.append((Claim(f"thm12.exhaustive.k{k}", 4,
                                 "lower <= W <= upper, W = lower iff diameter <= 2",
                                 {"k": k, "max_n": n}),
                           lambda k=k, n=n: _exhaustive(k, n, cfg)))
    claims += [
        (Claim("lemma2.exhaustive", 8, "no vertex status exceeds the k-connected status bound",
               {"ranges": [list(r) for r in EXHAUSTIVE_RANGES]}),
         lambda: _status_exhaustive(cfg, opts)),
        (Claim("lemma1.deletion", 9, "W(G) <= W(G-v) + status(v), equality iff G-v isometric",
               {"samples": opts.samples, "seed": opts.seed, "max_order": 9}),
         lambda: _deletion(opts.samples, opts.seed)),
    ]
    return claims


def _prop4_claims(opts: VerifyOptions) -> list[tuple[Claim, Callable[[], str | None]]]:
    n = opts.cap(9)
    return [
        (Claim("prop4.classify", 7, "diameter-2 2-trees are T + K_1 or triangle-rooted",
               {"min_n": 4, "max_n": n}), lambda: _prop4(n, opts.config)),
        (Claim("prop4.outerplanar.n6", 7, "diameter-2 maximal outerplanar graphs of order 6",
               {"n": 6}), lambda: _prop4_outerplanar(opts.config)),
    ]


def _thm5_claims(opts: VerifyOptions) -> list[tuple[Claim, Callable[[], str | None]]]:
    if opts.k is None:
        pairs = [(2, n) for n in range(6, opts.cap(9) + 1)] + [(3, n) for n in range(8, opts.cap(8) + 1)]
    else:
        k = opts.k
        top = opts.max_n if opts.max_n is not None else {1: 10, 2: 9, 3: 8}.get(k, 2 * k + 2)
        pairs = [(k, n) for n in range(2 * k + 2, top + 1)]
    return [
        (Claim(f"thm5.k{k}.n{n}", 5, "P_n^k is the unique maximizing k-tree for n >= 2k+2",
               {"k": k, "n": n}), lambda k=k, n=n: _unique_path_power(n, k, opts.config))
        for k, n in pairs
    ]


def _cor2_claims(opts: VerifyOptions) -> list[tuple[Claim, Callable[[], str | None]]]:
    cfg = opts.config
    claims = []
    if opts.wants(1):
        for n in range(3, opts.cap(10) + 1):
            claims.append((Claim(f"cor2.k1.n{n}", 6, "trees: star minimizes, path maximizes",
                                 {"k": 1, "n": n}),
                           lambda n=n: _expect_sets(n, 1, K_TREE, [path(n)], [star(n)], cfg)))
    if opts.wants(2):
        for n in range(5, opts.cap(9) + 1):
            maxi = [power_of_path(5, 2), join(complete(2), empty(3))] if n == 5 else [power_of_path(n, 2)]
            claims.append((Claim(f"cor2.k2.n{n}", 6, "2-tree maximizers",
                                 {"k": 2, "n": n}),
                           lambda n=n, maxi=maxi: _expect_sets(n, 2, K_TREE, maxi, None, cfg)))
        for n in range(4, opts.cap(9) + 1):
            claims.append((Claim(f"cor2.k2.outerplanar.n{n}", 6,
                                 "maximal outerplanar: fans (and Tr2 at n=6) minimize, P_n^2 maximizes",
                                 {"k": 2, "n": n}),
                           lambda n=n: _outerplanar_extremes(n, cfg)))
    if opts.wants(3):
        claims.append((Claim("cor2.k3.n6", 6, "order-6 3-tree maximizers", {"k": 3, "n": 6}),
                       lambda: _expect_sets(6, 3, K_TREE,
                                            [power_of_path(6, 3), join(complete(3), empty(3))], None, cfg)))
        claims.append((Claim("cor2.k3.n7", 6, "order-7 3-tree maximizers: P_7^3 and four others",
                             {"k": 3, "n": 7}),
                       lambda: _expect_sets(7, 3, K_TREE, list(order7_extremal_3trees().values()),
                                            None, cfg)))
    return claims


_SUITES = {
    "formulas": _formula_claims,
    "sharpness": _sharpness_claims,
    "prop4": _prop4_claims,
    "thm5": _thm5_claims,
    "cor2": _cor2_claims,
}


def run_suite(suite: str, opts: VerifyOptions | None = None) -> VerificationReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    opts = opts or VerifyOptions()
    names = list(_SUITES) if suite == "all" else [suite]
    report = VerificationReport(suite)
    start = time.perf_counter()
    for name in names:
        for claim, check in _SUITES[name](opts):
            report.claims.append(_run(claim, check))
    report.runtime_seconds = time.perf_counter() - start
    return report
