"""Finite groups as multiplication tables.

Elements are indices ``0..order-1`` with the identity at index 0. Groups are
realized from permutation generators by breadth-first closure, which fixes the
element numbering used everywhere downstream.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import DegreeMismatch, NotASubgroup, OrderMismatch

Permutation = tuple[int, ...]


def perm_mul(p: Sequence[int], q: Sequence[int]) -> Permutation:
    """Product ``p*q`` acting left to right: first ``p``, then ``q``."""
    return tuple(q[x] for x in p)


def perm_inverse(p: Sequence[int]) -> Permutation:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_permutation(p: Sequence[int]) -> bool:
    return sorted(p) == list(range(len(p)))


def perm_from_cycles(degree: int, *cycles: Sequence[int]) -> Permutation:
    images = list(range(degree))
    for cyc in cycles:
        for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
            images[a] = b
    return tuple(images)


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[i, j]`` is the index of ``g_i * g_j``; ``inv[i]`` is the index of
    ``g_i^-1``. ``elements`` optionally keeps the permutation realizing each
    element (present for groups built by :func:`closure`).
    """

    order: int
    name: str
    table: np.ndarray
    inv: np.ndarray
    elements: tuple[Permutation, ...] | None = field(default=None, repr=False)

    def __post_init__(self) -> None:
        self.table.setflags(write=False)
        self.inv.setflags(write=False)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]], name: str = "G",
                   elements: tuple[Permutation, ...] | None = None) -> FiniteGroup:
        t = np.asarray(table, dtype=np.int32)
        n = t.shape[0]
        if t.shape != (n, n):
            raise ValueError("multiplication table must be square")
        inv = np.argmin(t, axis=1).astype(np.int32)  # position of the identity (index 0) in each row
        group = cls(order=n, name=name, table=t, inv=inv, elements=elements)
        group.validate()
        return group

    def validate(self) -> None:
        """Check identity, Latin square, inverses and full associativity."""
        n, t = self.order, self.table
        rng = np.arange(n)
        if not (np.array_equal(t[0], rng) and np.array_equal(t[:, 0], rng)):
            raise ValueError(f"{self.name}: index 0 is not the identity")
        if not (np.all(np.sort(t, axis=1) == rng) and np.all(np.sort(t, axis=0) == rng[:, None])):
            raise ValueError(f"{self.name}: table is not a Latin square")
        if not np.all(t[rng, self.inv] == 0):
            raise ValueError(f"{self.name}: inverse map is wrong")
        if not np.array_equal(t[t, :], t[:, t]):
            raise ValueError(f"{self.name}: multiplication is not associative")

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        orders = []
        for g in range(self.order):
            x, k = g, 1
            while x != 0:
                x = int(self.table[x, g])
                k += 1
            orders.append(k)
        return tuple(orders)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily by decreasing element order."""
        candidates = sorted(range(1, self.order), key=lambda g: (-self.element_orders[g], g))
        gens: list[int] = []
        span = {0}
        for g in candidates:
            if len(span) == self.order:
                break
            if g not in span:
                gens.append(g)
                span = self.subgroup_generated(gens)
        return tuple(gens)

    def subgroup_generated(self, gens: Iterable[int]) -> set[int]:
        gens = list(gens)
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for g in gens:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return seen

    @cached_property
    def _words(self) -> list[tuple[int, int]]:
        """For each element ``x != 0`` a pair ``(parent, k)`` with ``x = parent * gens[k]``."""
        words = [(-1, -1)] * self.order
        seen = {0}
        queue = deque([0])
        while queue:
            x = queue.popleft()
            for k, g in enumerate(self.generators):
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    words[y] = (x, k)
                    queue.append(y)
        return words

    @cached_property
    def _word_order(self) -> list[int]:
        # BFS order: every parent precedes its children
        order = [0]
        seen = {0}
        i = 0
        while i < len(order):
            x = order[i]
            i += 1
            for g in self.generators:
                y = int(self.table[x, g])
                if y not in seen:
                    seen.add(y)
                    order.append(y)
        return order

    def left_translations(self) -> list[Permutation]:
        """Permutations ``x -> a*x`` of the element indices, one per ``a``.

        These are the automorphisms of every Cayley graph ``Cay(G, S)`` with
        arcs ``(g, g*s)``.
        """
        return [tuple(int(y) for y in self.table[a]) for a in range(self.order)]

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name!r}, order={self.order})"


def closure(generators: Sequence[Sequence[int]], declared_order: int, name: str) -> FiniteGroup:
    """Enumerate the permutation group spanned by ``generators``.

    Elements are discovered breadth-first from the identity, multiplying by the
    generators in the listed order; discovery order defines element indices.
    """
    if not generators:
        raise ValueError("at least one generator is required")
    degree = len(generators[0])
    if any(len(g) != degree for g in generators):
        raise DegreeMismatch("generators have different degrees")
    gens = [tuple(g) for g in generators]
    for g in gens:
        if not is_permutation(g):
            raise ValueError(f"{name}: generator {g} is not a permutation")
    identity = tuple(range(degree))
    elements = [identity]
    index = {identity: 0}
    i = 0
    while i < len(elements):
        x = elements[i]
        i += 1
        for g in gens:
            y = perm_mul(x, g)
            if y not in index:
                if len(elements) >= max(declared_order, 1) * 2:
                    # the group is already too large; count is a lower bound
                    raise OrderMismatch(len(elements) + 1, declared_order)
                index[y] = len(elements)
                elements.append(y)
    if len(elements) != declared_order:
        raise OrderMismatch(len(elements), declared_order)
    n = len(elements)
    table = [[index[perm_mul(a, b)] for b in elements] for a in elements]
    return FiniteGroup.from_table(table, name=name, elements=tuple(elements))


def is_subgroup(G: FiniteGroup, subset: Iterable[int]) -> bool:
    """True iff ``subset`` contains the identity and is closed under the product."""
    s = set(subset)
    if 0 not in s:
        return False
    if any(not 0 <= x < G.order for x in s):
        raise ValueError("subset contains indices outside the group")
    idx = np.fromiter(s, dtype=np.int64)
    products = G.table[np.ix_(idx, idx)]
    return bool(np.isin(products, idx).all())


def _cosets(G: FiniteGroup, H: Iterable[int], left: bool) -> list[list[int]]:
    h = sorted(set(H))
    if not is_subgroup(G, h):
        raise NotASubgroup(f"{h} is not a subgroup of {G.name}")
    blocks: list[list[int]] = []
    assigned = np.zeros(G.order, dtype=bool)
    for g in range(G.order):
        if assigned[g]:
            continue
        images = G.table[g, h] if left else G.table[h, g]
        block = sorted(int(x) for x in images)
        assigned[block] = True
        blocks.append(block)
    return blocks


def right_cosets(G: FiniteGroup, H: Iterable[int]) -> list[list[int]]:
    """The right cosets ``H*g``, each sorted, ordered by their minimum."""
    return _cosets(G, H, left=False)


def left_cosets(G: FiniteGroup, H: Iterable[int]) -> list[list[int]]:
    """The left cosets ``g*H``, each sorted, ordered by their minimum."""
    return _cosets(G, H, left=True)


def _isomorphism_search(G1: FiniteGroup, G2: FiniteGroup, first_only: bool) -> list[Permutation]:
    """All isomorphisms G1 -> G2, by backtracking over images of G1's generators."""
    if G1.order != G2.order:
        return []
    if sorted(G1.element_orders) != sorted(G2.element_orders):
        return []
    gens = G1.generators
    words = G1._words
    word_order = G1._word_order
    by_order: dict[int, list[int]] = {}
    for y, o in enumerate(G2.element_orders):
        by_order.setdefault(o, []).append(y)
    candidates = [by_order.get(G1.element_orders[g], []) for g in gens]
    t1, t2 = G1.table, G2.table
    n = G1.order
    found: list[Permutation] = []

    def extend(images: list[int]) -> Permutation | None:
        phi = [0] * n
        hit = [False] * n
        hit[0] = True
        for x in word_order[1:]:
            parent, k = words[x]
            y = int(t2[phi[parent], images[k]])
            if hit[y]:
                return None
            hit[y] = True
            phi[x] = y
        arr = np.asarray(phi)
        if not np.array_equal(arr[t1], t2[np.ix_(arr, arr)]):
            return None
        return tuple(phi)

    def search(images: list[int]) -> bool:
        if len(images) == len(gens):
            phi = extend(images)
            if phi is not None:
                found.append(phi)
                return first_only
            return False
        for y in candidates[len(images)]:
            if y in images:
                continue
            images.append(y)
            if search(images):
                return True
            images.pop()
        return False

    if n == 1:
        return [(0,)]
    search([])
    return found


def automorphisms(G: FiniteGroup) -> list[Permutation]:
    """The full automorphism group as permutations of element indices, sorted."""
    return sorted(_isomorphism_search(G, G, first_only=False))


def group_isomorphic(G1: FiniteGroup, G2: FiniteGroup) -> bool:
    return bool(_isomorphism_search(G1, G2, first_only=True))


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup) -> Permutation | None:
    found = _isomorphism_search(G1, G2, first_only=True)
    return found[0] if found else None


def direct_product(G1: FiniteGroup, G2: FiniteGroup, name: str | None = None) -> FiniteGroup:
    """Componentwise product; the pair ``(i, j)`` gets index ``i*|G2| + j``."""
    n1, n2 = G1.order, G2.order
    if n1 * n2 > 1024:
        raise ValueError("direct product too large")
    t = (G1.table[:, None, :, None] * n2 + G2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    return FiniteGroup.from_table(t, name=name or f"{G1.name}x{G2.name}")


def cyclic_group(n: int, name: str | None = None) -> FiniteGroup:
    """``Z_n`` with element ``i`` at index ``i`` (additive table)."""
    r = np.arange(n)
    return FiniteGroup.from_table((r[:, None] + r[None, :]) % n, name=name or f"Z{n}")


def regular_representation(G: FiniteGroup, gens: Sequence[int] | None = None) -> list[Permutation]:
    """Permutations ``x -> x*g`` on element indices for the given (or default) generators."""
    gens = G.generators if gens is None else gens
    return [tuple(int(y) for y in G.table[:, g]) for g in gens]
