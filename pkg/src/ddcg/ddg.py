"""Divisible design graph parameters, verification, and the SS^-1 coset test."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import ConnectionSet, Graph, common_neighbor_matrix
from .groups import is_subgroup, left_cosets

Partition = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, order=True)
class DdgParams:
    """``(v, k, l1, l2, m, n)``: ``l1`` common neighbours inside a class, ``l2`` across."""

    v: int
    k: int
    l1: int
    l2: int
    m: int
    n: int

    def __str__(self) -> str:
        return f"({self.v},{self.k},{self.l1},{self.l2},{self.m},{self.n})"

    def as_tuple(self) -> tuple[int, ...]:
        return (self.v, self.k, self.l1, self.l2, self.m, self.n)

    def spaced(self) -> str:
        return " ".join(map(str, self.as_tuple()))

    @classmethod
    def parse(cls, text: str) -> DdgParams:
        parts = text.replace("(", " ").replace(")", " ").replace(",", " ").split()
        if len(parts) != 6:
            raise ValueError(f"expected six integers, got {text!r}")
        return cls(*(int(p) for p in parts))

    @property
    def proper(self) -> bool:
        return self.m > 1 and self.n > 1 and self.l1 != self.l2

    @property
    def nontrivial(self) -> bool:
        """Inside the classification range: ``max(0, 2k - v) < l2 < k`` and ``l1 < k``.

        ``l2 = 0`` (disjoint unions), ``l1 = k`` (blown-up graphs) and
        ``l2 = 2k - v`` (complements of disconnected graphs) are excluded.
        """
        return max(0, 2 * self.k - self.v) < self.l2 < self.k and self.l1 < self.k

    def effective_lambda(self) -> int | None:
        """The single common-neighbour count of a degenerate (improper) structure."""
        if self.m == 1:
            return self.l1
        if self.n == 1:
            return self.l2
        if self.l1 == self.l2:
            return self.l1
        return None


def params_feasible(p: DdgParams) -> bool:
    """Size, bound and walk-counting conditions ``k^2 = k + l1(n-1) + l2 n(m-1)``."""
    if min(p.as_tuple()) < 0 or p.m < 1 or p.n < 1:
        return False
    if p.v != p.m * p.n or not 1 <= p.k < p.v:
        return False
    if p.l1 > p.k or p.l2 > p.k:
        return False
    return p.k * p.k == p.k + p.l1 * (p.n - 1) + p.l2 * p.n * (p.m - 1)


def params_equivalent(a: DdgParams, b: DdgParams) -> bool:
    """Equal, or both degenerate with the same ``v``, ``k`` and common-neighbour count.

    With ``m = 1`` the cross-class count is vacuous and with ``n = 1`` the
    within-class count is, so e.g. ``(4,3,2,0,1,4)`` and ``(4,3,2,2,1,4)``
    describe the same graphs.
    """
    if a == b:
        return True
    if (a.v, a.k) != (b.v, b.k):
        return False
    ea, eb = a.effective_lambda(), b.effective_lambda()
    return ea is not None and ea == eb


def feasible_parameters(v: int, nontrivial: bool = True) -> list[DdgParams]:
    """All proper feasible parameter sets on ``v`` vertices, sorted."""
    found = []
    for n in range(2, v):
        if v % n:
            continue
        m = v // n
        for k in range(1, v):
            for l1 in range(k + 1):
                rest = k * k - k - l1 * (n - 1)
                denom = n * (m - 1)
                if rest < 0 or rest % denom:
                    continue
                l2 = rest // denom
                p = DdgParams(v, k, l1, l2, m, n)
                if not p.proper or not params_feasible(p):
                    continue
                if nontrivial and not p.nontrivial:
                    continue
                found.append(p)
    return sorted(found)


def admissible_degrees(v: int) -> list[int]:
    return sorted({p.k for p in feasible_parameters(v)})


@dataclass(frozen=True)
class DdgStructure:
    params: DdgParams
    partition: Partition
    proper: bool = True


@dataclass(frozen=True)
class CosetStructure:
    params: DdgParams
    partition: Partition
    subgroup: tuple[int, ...]


def ss_profile(S: ConnectionSet) -> np.ndarray:
    """``counts[g]`` = number of pairs ``(s, t)`` in ``S x S`` with ``s t^-1 = g``."""
    G = S.group
    counts = np.zeros(G.order, dtype=np.int64)
    elems = sorted(S.elements)
    if elems:
        idx = np.asarray(elems)
        products = G.table[np.ix_(idx, G.inv[idx])]
        np.add.at(counts, products.ravel(), 1)
    return counts


def theorem3_test(S: ConnectionSet) -> list[CosetStructure]:
    """Divisible structures certified by the coset criterion on ``SS^-1``.

    If the non-identity profile values are exactly ``{x, y}``, each value class
    ``C`` with ``C + {e}`` a subgroup ``H`` gives a divisible design graph whose
    classes are the cosets ``gH``: with adjacency ``g ~ gs`` the vertices ``x``
    and ``y`` have ``counts[x^-1 y]`` common neighbours. An empty list means no
    structure.
    """
    G = S.group
    counts = ss_profile(S)
    values = sorted(set(int(c) for c in counts[1:]))
    if len(values) != 2:
        return []
    k = len(S)
    found = []
    for value, other in ((values[0], values[1]), (values[1], values[0])):
        cls = [g for g in range(1, G.order) if counts[g] == value]
        h = [0] + cls
        if not is_subgroup(G, h):
            continue
        n = len(h)
        params = DdgParams(G.order, k, value, other, G.order // n, n)
        blocks = tuple(tuple(b) for b in left_cosets(G, h))
        found.append(CosetStructure(params, blocks, tuple(h)))
    return found


def _classes_for(cn: np.ndarray, value: int) -> Partition | None:
    v = cn.shape[0]
    rel = cn == value
    np.fill_diagonal(rel, True)
    blocks = []
    seen = np.zeros(v, dtype=bool)
    for x in range(v):
        if seen[x]:
            continue
        members = np.flatnonzero(rel[x])
        # equivalence: every member's row must coincide with x's row
        if not (rel[members] == rel[x]).all():
            return None
        seen[members] = True
        blocks.append(tuple(int(y) for y in members))
    sizes = {len(b) for b in blocks}
    if len(sizes) != 1 or sizes.pop() < 2:
        return None
    return tuple(blocks)


def ddg_check(graph: Graph) -> list[DdgStructure]:
    """Every divisible design structure of ``graph``.

    A single improper entry is returned for a (v,k,lambda)-graph; otherwise one
    entry per common-neighbour value whose relation is an equivalence with
    classes of equal size at least 2.
    """
    if not graph.is_regular():
        return []
    v, k = graph.v, graph.degree(0)
    if v == 1:
        return []
    cn = common_neighbor_matrix(graph)
    off = cn[~np.eye(v, dtype=bool)]
    values = sorted(set(int(x) for x in off))
    if len(values) == 1:
        lam = values[0]
        return [DdgStructure(DdgParams(v, k, lam, lam, 1, v), (tuple(range(v)),), proper=False)]
    if len(values) != 2:
        return []
    found = []
    for value, other in ((values[0], values[1]), (values[1], values[0])):
        blocks = _classes_for(cn, value)
        if blocks is None:
            continue
        n = len(blocks[0])
        found.append(DdgStructure(DdgParams(v, k, value, other, v // n, n), blocks))
    return found


def is_divisible_design(incidence: np.ndarray, partition: Partition, params: DdgParams) -> bool:
    """Check a point-by-block incidence matrix against a point partition and parameters."""
    m = np.asarray(incidence, dtype=np.int64)
    if m.shape != (params.v, params.v):
        return False
    if not (m.sum(axis=0) == params.k).all():
        return False
    if len(partition) != params.m or any(len(b) != params.n for b in partition):
        return False
    cls = np.empty(params.v, dtype=np.int64)
    for i, block in enumerate(partition):
        cls[list(block)] = i
    pair = m @ m.T
    same = cls[:, None] == cls[None, :]
    off = ~np.eye(params.v, dtype=bool)
    return bool((pair[same & off] == params.l1).all() and (pair[~same] == params.l2).all())


def dual_property_check(graph: Graph, partition: Partition, params: DdgParams) -> bool:
    """Both the neighbourhood design and its dual are divisible with ``params``."""
    adj = graph.to_matrix()
    return is_divisible_design(adj, partition, params) and is_divisible_design(adj.T, partition, params)


def graph_has_params(graph: Graph, params: DdgParams) -> bool:
    return any(params_equivalent(s.params, params) for s in ddg_check(graph))

