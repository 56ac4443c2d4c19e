from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddcg.constructions import paley_ddcg
from ddcg.ddg import (
    DdgParams,
    admissible_degrees,
    ddg_check,
    dual_property_check,
    feasible_parameters,
    params_equivalent,
    params_feasible,
    ss_profile,
    theorem3_test,
)
from ddcg.graphs import ConnectionSet, cayley_graph, common_neighbors, complete_graph, petersen_graph
from ddcg.groups import cyclic_group
from test_graphs import z4xz2_example


def test_z4xz2_profile():
    G, S = z4xz2_example()
    counts = ss_profile(S)
    a, b = 2, 1
    assert counts[0] == 4
    assert counts[b] == 0
    others = [g for g in range(1, 8) if g != b]
    assert [int(counts[g]) for g in others] == [2] * 6
    # the value-2 class is {a, a^2, a^3, ab, a^2b, a^3b}
    a2, a3 = G.mul(a, a), G.mul(a, G.mul(a, a))
    assert set(others) == {a, a2, a3, G.mul(a, b), G.mul(a2, b), G.mul(a3, b)}


def test_z4xz2_coset_test_and_check():
    G, S = z4xz2_example()
    found = theorem3_test(S)
    assert len(found) == 1
    s = found[0]
    assert s.params == DdgParams(8, 4, 0, 2, 4, 2)
    assert s.subgroup == (0, 1)
    assert len(s.partition) == 4
    g = cayley_graph(S)
    checked = ddg_check(g)
    assert [c.params for c in checked] == [s.params]
    assert set(checked[0].partition) == set(s.partition)
    assert dual_property_check(g, checked[0].partition, checked[0].params)


def test_profile_small_cases():
    Z3 = cyclic_group(3)
    assert ss_profile(ConnectionSet(Z3, [])).tolist() == [0, 0, 0]
    assert ss_profile(ConnectionSet(Z3, [1, 2])).tolist() == [2, 1, 1]
    assert theorem3_test(ConnectionSet(Z3, [1, 2])) == []
    assert theorem3_test(ConnectionSet(cyclic_group(5), [1, 4])) == []


def test_ddg_check_examples():
    k4 = ddg_check(complete_graph(4))
    assert len(k4) == 1 and not k4[0].proper and k4[0].params.l1 == 2
    assert ddg_check(petersen_graph()) == []


def test_paley_dual_property():
    out = paley_ddcg(5)
    s = next(s for s in ddg_check(out.graph) if s.params == DdgParams(10, 5, 4, 2, 5, 2))
    assert dual_property_check(out.graph, s.partition, s.params)


def test_params_feasible():
    assert params_feasible(DdgParams(8, 4, 0, 2, 4, 2))
    assert params_feasible(DdgParams(10, 5, 4, 2, 5, 2))
    assert not params_feasible(DdgParams(8, 4, 1, 2, 4, 2))
    assert not params_feasible(DdgParams(8, 4, 0, 2, 3, 2))


def test_params_text():
    p = DdgParams.parse("24,8,4,2,4,6")
    assert str(p) == "(24,8,4,2,4,6)" and p.spaced() == "24 8 4 2 4 6"
    assert DdgParams.parse("(8, 4, 0, 2, 4, 2)") == DdgParams(8, 4, 0, 2, 4, 2)
    with pytest.raises(ValueError):
        DdgParams.parse("1,2,3")


def test_nontrivial_filter():
    assert DdgParams(8, 4, 0, 2, 4, 2).nontrivial
    assert not DdgParams(8, 3, 2, 0, 2, 4).nontrivial
    assert not DdgParams(8, 6, 6, 4, 4, 2).nontrivial
    # l2 = 2k - v: complement of a disconnected graph
    assert not DdgParams(8, 5, 4, 2, 2, 4).nontrivial


def test_params_equivalent_degenerate():
    assert params_equivalent(DdgParams(4, 3, 2, 0, 1, 4), DdgParams(4, 3, 2, 2, 1, 4))
    assert not params_equivalent(DdgParams(8, 4, 0, 2, 4, 2), DdgParams(8, 4, 2, 0, 4, 2))


def test_feasible_parameters_are_feasible():
    for v in range(2, 28):
        for p in feasible_parameters(v):
            assert params_feasible(p) and p.proper and p.nontrivial
    assert admissible_degrees(8) == [3, 4, 5, 6]
    assert DdgParams(8, 4, 0, 2, 4, 2) in feasible_parameters(8)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(["Z8", "D8", "Q8", "E8", "Z12", "A4", "D12", "Z4xZ4", "Z2xD8", "Q16", "E16"]), st.data())
def test_profile_equals_common_neighbours(catalog, name, data):
    G = catalog.group(name)
    elems = data.draw(st.sets(st.integers(1, G.order - 1)))
    S = ConnectionSet(G, elems | {int(G.inv[x]) for x in elems})
    counts = ss_profile(S)
    g = cayley_graph(S)
    assert counts[0] == len(S) and counts.sum() == len(S) ** 2
    assert np.array_equal(counts, counts[G.inv])
    assert all(counts[x] == common_neighbors(g, 0, x) for x in range(1, G.order))
    for s in ddg_check(g):
        assert s.params.m * s.params.n == G.order
        if s.proper:
            assert params_feasible(s.params)
            assert dual_property_check(g, s.partition, s.params)
