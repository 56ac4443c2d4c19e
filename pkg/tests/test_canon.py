from __future__ import annotations

import itertools
import random
from types import SimpleNamespace

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddcg.canon import are_isomorphic, canonical_certificate, canonical_form, canonical_graph
from ddcg.errors import TooLarge
from ddcg.graphs import Graph, complete_graph, cycle_graph, graph6_decode, is_automorphism, petersen_graph
from test_graphs import graphs

# Number of isomorphism classes of graphs on v vertices.
GRAPH_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156}


def _all_graphs(v):
    pairs = list(itertools.combinations(range(v), 2))
    for mask in range(1 << len(pairs)):
        yield Graph.from_edges(v, [p for i, p in enumerate(pairs) if mask >> i & 1])


def _nx(g: Graph) -> nx.Graph:
    return nx.from_numpy_array(g.to_matrix())


@pytest.mark.parametrize("v", [1, 2, 3, 4, 5])
def test_counts_isomorphism_classes(v):
    assert len({canonical_certificate(g) for g in _all_graphs(v)}) == GRAPH_COUNTS[v]


@pytest.mark.slow
def test_counts_isomorphism_classes_six():
    assert len({canonical_certificate(g) for g in _all_graphs(6)}) == GRAPH_COUNTS[6]


def test_examples():
    c5 = cycle_graph(5)
    assert canonical_certificate(c5) == canonical_certificate(c5.complement())
    p4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    star = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_certificate(p4) != canonical_certificate(star)
    assert isinstance(canonical_certificate(p4), bytes)


def test_canonical_graph_is_relabeling():
    g = petersen_graph()
    res = canonical_form(g)
    assert sorted(res.labeling) == list(range(10))
    assert graph6_decode(canonical_certificate(g).decode()) == canonical_graph(g)
    assert nx.is_isomorphic(_nx(canonical_graph(g)), _nx(g))
    for a in res.automorphisms:
        assert is_automorphism(g, a)


def test_too_large():
    with pytest.raises(TooLarge):
        canonical_form(SimpleNamespace(v=65))


def test_relabel_invariance_on_structured_graphs():
    rng = random.Random(7)
    k44 = Graph.from_edges(8, [(i, j) for i in range(4) for j in range(4, 8)])
    for g in [petersen_graph(), cycle_graph(12), complete_graph(6), k44, cycle_graph(7).complement()]:
        cert = canonical_certificate(g)
        for _ in range(20):
            p = list(range(g.v))
            rng.shuffle(p)
            assert canonical_certificate(g.relabel(p)) == cert


@settings(max_examples=1000, deadline=None)
@given(graphs(max_v=16), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rnd):
    p = list(range(g.v))
    rnd.shuffle(p)
    assert canonical_certificate(g.relabel(p)) == canonical_certificate(g)


@settings(max_examples=500, deadline=None)
@given(st.integers(1, 8).flatmap(lambda v: st.tuples(graphs_on(v), graphs_on(v))))
def test_separation_small(pair):
    a, b = pair
    assert (canonical_certificate(a) == canonical_certificate(b)) == nx.is_isomorphic(_nx(a), _nx(b))
    assert are_isomorphic(a, b) == nx.is_isomorphic(_nx(a), _nx(b))


def graphs_on(v):
    pairs = list(itertools.combinations(range(v), 2))
    return st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)).map(
        lambda bits: Graph.from_edges(v, [p for p, b in zip(pairs, bits) if b]))


@settings(max_examples=300, deadline=None)
@given(st.integers(2, 8).flatmap(lambda v: st.tuples(graphs_on(v), st.permutations(list(range(v))),
                                                     st.integers(0, v * (v - 1) // 2 - 1))))
def test_separation_after_one_edge_flip(case):
    # near-miss pairs: a relabelled copy with one pair toggled
    g, perm, idx = case
    pairs = list(itertools.combinations(range(g.v), 2))
    x, y = pairs[idx]
    m = g.relabel(perm).to_matrix()
    m[x, y] = m[y, x] = 1 - m[x, y]
    h = Graph.from_matrix(m)
    assert (canonical_certificate(g) == canonical_certificate(h)) == nx.is_isomorphic(_nx(g), _nx(h))
