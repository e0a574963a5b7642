import itertools
import time

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from wiener_degen.graph import UNREACHABLE, from_edge_list

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def floyd_warshall(g):
    """Independent all-pairs oracle (no bitsets)."""
    n = g.n
    d = [[0 if i == j else UNREACHABLE for j in range(n)] for i in range(n)]
    for u, v in g.edges():
        d[u][v] = d[v][u] = 1
    for m in range(n):
        for i in range(n):
            for j in range(n):
                if d[i][m] + d[m][j] < d[i][j]:
                    d[i][j] = d[i][m] + d[m][j]
    return d


def brute_canonical(g):
    """Minimum sorted edge tuple over all n! relabelings."""
    best = None
    for perm in itertools.permutations(range(g.n)):
        key = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in g.edges()))
        if best is None or key < best:
            best = key
    return best


def petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(i + 5, (i + 2) % 5 + 5) for i in range(5)]
    return from_edge_list(10, outer + spokes + inner)


@st.composite
def graphs(draw, min_n=0, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    g = from_edge_list(n, [p for p, c in zip(pairs, chosen) if c])
    if connected and not g.is_connected():
        # attach every vertex to its predecessor's component via a spanning path
        extra = [(i, i + 1) for i in range(n - 1) if not g.has_edge(i, i + 1)]
        g = from_edge_list(n, g.edges() + extra)
    return g


# -- acceptance reporting ---------------------------------------------------------

_CRITERIA: dict[int, tuple[str, str, float]] = {}


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or report.when != "call":
        return
    number, title = marker.args
    _CRITERIA[number] = (title, "PASS" if report.passed else "FAIL", report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_CRITERIA):
        title, verdict, secs = _CRITERIA[number]
        terminalreporter.write_line(f"criterion {number:2d} {verdict}  {title}  ({secs:.2f}s)")


@pytest.fixture
def stopwatch():
    start = time.perf_counter()
    return lambda: time.perf_counter() - start
