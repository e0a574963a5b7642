import itertools

import networkx as nx
import pytest

from wiener_degen.bounds import upper_bound_sum
from wiener_degen.canonical import canonical_form
from wiener_degen.constructions import complete, empty, join, power_of_path
from wiener_degen.enumeration import (K_TREE, MAXIMAL_K_DEGENERATE, EnumerationBudgetError,
                                      EnumerationConfig, extremal_census, generate, k_cliques,
                                      summarize)
from wiener_degen.graph import distances, from_edge_list
from wiener_degen.recognition import (degeneracy, is_chordal, is_k_tree,
                                      is_maximal_k_degenerate)

SERIAL = EnumerationConfig(workers=1)


def ahu(adj, root, parent=-1):
    return "(" + "".join(sorted(ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def tree_code(g):
    """Canonical string of a free tree: min AHU encoding over its centre(s)."""
    leaves = [v for v in range(g.n) if g.degree(v) <= 1]
    deg = list(g.degrees())
    remaining = g.n
    while remaining > 2:
        nxt = []
        remaining -= len(leaves)
        for v in leaves:
            deg[v] = 0
            for u in g.adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        leaves = nxt
    return min(ahu(g.adj, c) for c in leaves)


def brute_tree_count(n):
    pairs = list(itertools.combinations(range(n), 2))
    codes = set()
    for es in itertools.combinations(pairs, n - 1):
        g = from_edge_list(n, es)
        if g.is_connected():
            codes.add(tree_code(g))
    return len(codes)


def brute_class(n, k, chordal_only):
    """Isomorphism classes by edge-subset filtering, grouped with networkx VF2."""
    pairs = list(itertools.combinations(range(n), 2))
    m = k * n - k * (k + 1) // 2
    buckets: dict[str, list[nx.Graph]] = {}
    for es in itertools.combinations(pairs, m):
        g = from_edge_list(n, es)
        if degeneracy(g) > k:
            continue
        if chordal_only and not is_chordal(g):
            continue
        h = nx.Graph(es)
        h.add_nodes_from(range(n))
        reps = buckets.setdefault(nx.weisfeiler_lehman_graph_hash(h), [])
        if not any(nx.is_isomorphic(h, r) for r in reps):
            reps.append(h)
    return sum(map(len, buckets.values()))


@pytest.mark.parametrize("n", range(1, 8))
def test_tree_counts_against_brute_force(n):
    assert len(generate(n, 1, K_TREE, SERIAL)) == brute_tree_count(n)


def test_tree_count_order_8_and_beyond():
    # 23 at n = 8, then the standard free-tree counts
    expected = {8: 23, 9: 47, 10: 106, 11: 235, 12: 551}
    for n, count in expected.items():
        assert len(generate(n, 1, K_TREE, SERIAL)) == count


def test_maximal_1_degenerate_equals_trees():
    for n in range(1, 11):
        assert generate(n, 1, MAXIMAL_K_DEGENERATE, SERIAL) == generate(n, 1, K_TREE, SERIAL)


def test_two_tree_counts():
    counts = [len(generate(n, 2, K_TREE, SERIAL)) for n in range(2, 10)]
    assert counts == [1, 1, 1, 2, 5, 12, 39, 136]


@pytest.mark.parametrize("n, k, chordal", [(5, 2, True), (6, 2, True), (6, 3, True),
                                           (7, 3, True), (5, 2, False), (6, 2, False),
                                           (6, 3, False), (7, 3, False)])
def test_counts_against_edge_subset_oracle(n, k, chordal):
    graph_class = K_TREE if chordal else MAXIMAL_K_DEGENERATE
    assert len(generate(n, k, graph_class, SERIAL)) == brute_class(n, k, chordal)


@pytest.mark.parametrize("k", range(1, 6))
def test_k_plus_two_has_a_single_class(k):
    assert len(generate(k + 2, k, K_TREE, SERIAL)) == 1
    assert len(generate(k + 1, k, K_TREE, SERIAL)) == 1


@pytest.mark.parametrize("k", [1, 2, 3])
def test_only_path_power_has_diameter_3_at_2k_plus_2(k):
    n = 2 * k + 2
    far = [g for g in generate(n, k, K_TREE, SERIAL) if distances(g).diameter == 3]
    assert len(far) == 1
    assert canonical_form(far[0]) == canonical_form(power_of_path(n, k))


@pytest.mark.parametrize("n, k", [(7, 2), (8, 2), (7, 3), (8, 3), (8, 4)])
def test_soundness(n, k):
    for g in generate(n, k, K_TREE, SERIAL):
        assert is_k_tree(g, k)
    for g in generate(n, k, MAXIMAL_K_DEGENERATE, SERIAL):
        assert is_maximal_k_degenerate(g, k) and g.is_connected()


def test_5_2_contains_chordal_and_non_chordal_members():
    members = generate(5, 2, MAXIMAL_K_DEGENERATE, SERIAL)
    assert len(members) == 3
    assert {is_chordal(g) for g in members} == {True, False}


def test_output_is_sorted_and_duplicate_free():
    gs = generate(9, 2, K_TREE, SERIAL)
    codes = [canonical_form(g).code for g in gs]
    assert codes == sorted(codes) and len(set(codes)) == len(codes)


def test_k_cliques():
    assert k_cliques(complete(4), 3) == list(itertools.combinations(range(4), 3))
    assert len(k_cliques(power_of_path(6, 2), 2)) == power_of_path(6, 2).size


def test_census_order_7_k3_has_five_maximizers():
    s = extremal_census(7, 3, K_TREE, SERIAL)
    assert s.wiener_max == upper_bound_sum(7, 3) == 27
    assert len(s.maximizers) == 5 == s.count
    assert all(ok for _, ok in s.checks)


def test_census_order_6_k3():
    s = extremal_census(6, 3, K_TREE, SERIAL)
    expect = {canonical_form(power_of_path(6, 3)).code, canonical_form(join(complete(3), empty(3))).code}
    assert {f.code for f in s.maximizers} == expect


@pytest.mark.parametrize("n", range(6, 10))
def test_two_tree_maximizer_is_unique_path_square(n):
    s = extremal_census(n, 2, K_TREE, SERIAL)
    assert [f.code for f in s.maximizers] == [canonical_form(power_of_path(n, 2)).code]
    assert dict(s.checks)["maximizers_match_characterization"] is True


@pytest.mark.parametrize("n, k", [(6, 3), (7, 3), (7, 4), (8, 4), (9, 4)])
def test_window_maximizers_are_not_unique(n, k):
    assert k + 3 <= n <= 2 * k + 1
    assert len(summarize(n, k, K_TREE, SERIAL).maximizers) > 1


def test_census_checks_on_maximal_class():
    s = extremal_census(8, 2, MAXIMAL_K_DEGENERATE, SERIAL)
    checks = dict(s.checks)
    assert checks["bounds_hold"] and checks["min_equals_lower_bound"]
    assert checks["max_equals_upper_bound"] and checks["lower_bound_iff_diameter_le_2"]
    assert checks["maximizers_match_characterization"] is None


def test_summary_dict_omits_graph_payload():
    d = summarize(6, 2, K_TREE, SERIAL).to_dict()
    assert "graphs" not in d and "wieners" not in d
    assert d["count"] == 5 and d["upper_bound"] == upper_bound_sum(6, 2)


def test_ceiling_is_a_hard_failure():
    with pytest.raises(EnumerationBudgetError):
        generate(13, 2, K_TREE, SERIAL)
    small = SERIAL.with_ceiling(2, 6)
    with pytest.raises(EnumerationBudgetError):
        generate(7, 2, K_TREE, small)
    assert len(generate(6, 2, K_TREE, small)) == 5


def test_max_graphs_is_a_hard_failure():
    tight = EnumerationConfig(max_graphs=10, workers=1)
    with pytest.raises(EnumerationBudgetError):
        generate(8, 2, K_TREE, tight)


def test_invalid_arguments():
    with pytest.raises(ValueError):
        generate(5, 2, "planar", SERIAL)
    with pytest.raises(ValueError):
        generate(2, 3, K_TREE, SERIAL)


def test_parallel_matches_serial():
    par = EnumerationConfig(workers=2, parallel_threshold=1)
    for graph_class in (K_TREE, MAXIMAL_K_DEGENERATE):
        assert generate(8, 2, graph_class, par) == generate(8, 2, graph_class, SERIAL)


def test_deterministic_across_configs():
    other = EnumerationConfig(workers=1, default_extra=9)
    assert generate(9, 2, K_TREE, other) == generate(9, 2, K_TREE, SERIAL)
