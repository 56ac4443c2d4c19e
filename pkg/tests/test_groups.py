from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ddcg.errors import NotASubgroup, OrderMismatch
from ddcg.groups import (
    FiniteGroup,
    automorphisms,
    closure,
    cyclic_group,
    direct_product,
    group_isomorphic,
    is_subgroup,
    left_cosets,
    perm_from_cycles,
    perm_inverse,
    perm_mul,
    right_cosets,
)


def _brute_automorphisms(G: FiniteGroup) -> int:
    t = G.table
    count = 0
    for rest in itertools.permutations(range(1, G.order)):
        sigma = np.array((0,) + rest)
        if np.array_equal(sigma[t], t[np.ix_(sigma, sigma)]):
            count += 1
    return count


def test_cyclic_closure_bfs_order():
    G = closure([perm_from_cycles(4, (0, 1, 2, 3))], 4, "Z4")
    assert G.order == 4 and G.is_abelian
    # BFS from one generator: e, g, g^2, g^3
    assert G.mul(1, 1) == 2


def test_d8_closure_has_five_involutions():
    G = closure([perm_from_cycles(4, (0, 1, 2, 3)), perm_from_cycles(4, (1, 3))], 8, "D8")
    assert not G.is_abelian
    assert G.element_orders.count(2) == 5


def test_order_mismatch():
    with pytest.raises(OrderMismatch) as exc:
        closure([perm_from_cycles(2, (0, 1))], 4, "X")
    assert (exc.value.actual, exc.value.declared) == (2, 4)


def test_invalid_table_rejected():
    t = np.array([[0, 1, 2], [1, 0, 2], [2, 2, 0]])
    with pytest.raises(ValueError):
        FiniteGroup.from_table(t)


def test_subgroups_and_cosets():
    G = direct_product(cyclic_group(4), cyclic_group(2))
    b = 1  # (0, 1)
    assert is_subgroup(G, {0, b})
    assert is_subgroup(G, {0})
    cosets = right_cosets(G, [0, b])
    assert len(cosets) == 4 and all(len(c) == 2 for c in cosets)
    assert cosets[0] == [0, b]
    assert right_cosets(G, range(8)) == [list(range(8))]
    assert right_cosets(G, [0]) == [[x] for x in range(8)]
    Z4 = cyclic_group(4)
    assert not is_subgroup(Z4, {0, 1})
    with pytest.raises(NotASubgroup):
        right_cosets(Z4, [0, 1])


@pytest.mark.parametrize("G, expected", [
    (cyclic_group(2), 1),
    (cyclic_group(4), 2),
    (cyclic_group(6), 2),
    (direct_product(cyclic_group(2), cyclic_group(2)), 6),
])
def test_automorphism_counts_small(G, expected):
    assert len(automorphisms(G)) == expected == _brute_automorphisms(G)


def test_automorphisms_e8():
    E8 = direct_product(direct_product(cyclic_group(2), cyclic_group(2)), cyclic_group(2))
    assert len(automorphisms(E8)) == 168 == _brute_automorphisms(E8)


def test_isomorphism_examples():
    Z4 = cyclic_group(4)
    E4 = direct_product(cyclic_group(2), cyclic_group(2))
    assert not group_isomorphic(Z4, E4)
    d8a = closure([perm_from_cycles(4, (0, 1, 2, 3)), perm_from_cycles(4, (1, 3))], 8, "D8")
    d8b = closure([perm_from_cycles(4, (0, 2)), perm_from_cycles(4, (0, 1), (2, 3))], 8, "D8")
    assert group_isomorphic(d8a, d8b)
    S3 = closure([perm_from_cycles(3, (0, 1, 2)), perm_from_cycles(3, (0, 1))], 6, "S3")
    assert not group_isomorphic(cyclic_group(6), S3)
    assert group_isomorphic(direct_product(cyclic_group(2), cyclic_group(3)), cyclic_group(6))


def test_direct_product_layout():
    G = direct_product(cyclic_group(4), cyclic_group(2))
    assert G.order == 8
    # (i, j) at index i*2 + j
    assert G.mul(2 * 1 + 1, 2 * 3 + 1) == 2 * 0 + 0
    assert group_isomorphic(direct_product(G, cyclic_group(1)), G)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["Z8", "D8", "Q8", "Z3:Z4", "A4", "D10", "E9"]), st.data())
def test_automorphisms_are_homomorphisms(catalog, name, data):
    G = catalog.group(name)
    autos = automorphisms(G)
    sigma = np.array(data.draw(st.sampled_from(autos)))
    assert np.array_equal(sigma[G.table], G.table[np.ix_(sigma, sigma)])


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(6))), st.permutations(list(range(6))))
def test_perm_helpers(p, q):
    assert perm_mul(p, perm_inverse(p)) == tuple(range(6))
    # first p, then q
    assert perm_mul(p, q) == tuple(q[p[i]] for i in range(6))


def test_left_and_right_cosets_differ_in_s3(catalog):
    S3 = catalog.group("S3")
    H = sorted(S3.subgroup_generated([next(g for g in range(6) if S3.element_orders[g] == 2)]))
    left = left_cosets(S3, H)
    right = right_cosets(S3, H)
    assert left[0] == right[0] == H
    assert left != right
    for block in left:
        g = block[0]
        assert block == sorted(S3.mul(g, h) for h in H)
