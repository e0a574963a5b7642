import itertools
import random

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_canonical, graphs, petersen
from wiener_degen.canonical import canonical_form, canonical_graph, canonical_order, is_isomorphic
from wiener_degen.constructions import complete, empty, join, path, power_of_path
from wiener_degen.graph import GraphError, from_edge_list


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_p4_relabelings_agree():
    g = path(4)
    h = g.relabel([2, 0, 3, 1])
    assert canonical_form(g) == canonical_form(h)


def test_p6_squared_differs_from_k2_join_empty():
    a, b = power_of_path(6, 2), join(complete(2), empty(4))
    assert sorted(a.degrees()) != sorted(b.degrees())
    assert canonical_form(a) != canonical_form(b)


def test_k4_form_stable_under_all_relabelings():
    forms = {canonical_form(complete(4).relabel(p)) for p in itertools.permutations(range(4))}
    assert len(forms) == 1


def test_form_fields():
    f = canonical_form(petersen())
    assert (f.n, f.m) == (10, 15)
    assert str(f) == f.code


def test_ceiling_enforced():
    with pytest.raises(GraphError):
        canonical_form(path(13))
    assert canonical_form(path(13), ceiling=None).n == 13


def test_canonical_graph_is_isomorphic_relabeling():
    g = power_of_path(9, 3)
    c = canonical_graph(g)
    assert nx.is_isomorphic(to_nx(g), to_nx(c))
    assert canonical_graph(c) == c


def test_petersen_relabelings():
    rng = random.Random(7)
    g = petersen()
    base = canonical_form(g)
    for _ in range(50):
        perm = list(range(10))
        rng.shuffle(perm)
        assert canonical_form(g.relabel(perm)) == base


@given(graphs(max_n=7), graphs(max_n=7))
def test_equal_forms_iff_brute_force_isomorphic(g, h):
    same_brute = g.n == h.n and brute_canonical(g) == brute_canonical(h)
    assert (canonical_form(g) == canonical_form(h)) == same_brute


@given(graphs(max_n=7), st.data())
def test_isomorphic_pairs_share_forms(g, data):
    perm = data.draw(st.permutations(list(range(g.n))))
    assert canonical_form(g) == canonical_form(g.relabel(perm))
    assert sorted(canonical_order(g)) == list(range(g.n))


def test_relabeling_never_changes_form_on_10k_samples():
    rng = random.Random(2024)
    for _ in range(10_000):
        n = rng.randint(1, 10)
        p = rng.random()
        g = from_edge_list(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_edge_toggles_against_permutation_search():
    rng = random.Random(99)
    for _ in range(400):
        n = rng.randint(2, 8)
        p = rng.random()
        g = from_edge_list(n, [(u, v) for u, v in itertools.combinations(range(n), 2) if rng.random() < p])
        u, v = rng.sample(range(n), 2)
        edges = set(g.edges())
        edges ^= {(min(u, v), max(u, v))}
        h = from_edge_list(n, edges)
        # VF2 is an independent permutation-search oracle
        assert is_isomorphic(g, h) == nx.is_isomorphic(to_nx(g), to_nx(h))
