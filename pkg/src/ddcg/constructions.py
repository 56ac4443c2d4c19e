"""Explicit divisible design Cayley graph constructions.

Each construction returns the graph, its predicted parameters and a group
acting regularly on the vertices. Before returning, the output is checked by
:func:`ddcg.ddg.ddg_check` and :func:`ddcg.graphs.is_regular_action`, so every
call is also an executable check of the construction.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .ddg import DdgParams, graph_has_params
from .errors import (
    MuNotLambdaPlusOne,
    NotRegularGraphical,
    NotSymmetricPermutation,
    RegularActionFailed,
    UnsupportedOrder,
    VerificationFailed,
    WrongResidueClass,
)
from .fields import galois_field, prime_power
from .graphs import (
    ConnectionSet,
    Graph,
    cayley_graph,
    common_neighbor_matrix,
    is_regular_action,
    kronecker,
    product_action,
    strong_product_k2,
)
from .groups import FiniteGroup, Permutation, cyclic_group, direct_product, perm_mul


@dataclass(frozen=True)
class RegularAction:
    """``perms[i]`` is the vertex permutation of group element ``i``."""

    group: FiniteGroup
    perms: tuple[Permutation, ...]

    def times(self, inner: RegularAction) -> RegularAction:
        """Product action on index pairs ``(i, x) -> i*inner_degree + x``."""
        group = direct_product(self.group, inner.group)
        return RegularAction(group, tuple(product_action(self.perms, inner.perms)))


def translations(G: FiniteGroup) -> RegularAction:
    return RegularAction(G, tuple(G.left_translations()))


@dataclass(frozen=True)
class SrgParams:
    v: int
    k: int
    lam: int
    mu: int


def srg_parameters(graph: Graph) -> SrgParams | None:
    if not graph.is_regular():
        return None
    cn = common_neighbor_matrix(graph)
    adj = graph.to_matrix().astype(bool)
    off = ~np.eye(graph.v, dtype=bool)
    lam = set(cn[adj].tolist())
    mu = set(cn[~adj & off].tolist())
    if len(lam) > 1 or len(mu) > 1:
        return None
    return SrgParams(graph.v, graph.degree(0), lam.pop() if lam else 0, mu.pop() if mu else 0)


@dataclass(frozen=True)
class VklGraph:
    """A k-regular graph in which every two vertices have ``lam`` common neighbours."""

    graph: Graph
    k: int
    lam: int
    action: RegularAction

    def __post_init__(self) -> None:
        cn = common_neighbor_matrix(self.graph)
        off = ~np.eye(self.graph.v, dtype=bool)
        if self.graph.degrees() != [self.k] * self.graph.v or not (cn[off] == self.lam).all():
            raise ValueError(f"not a ({self.graph.v},{self.k},{self.lam})-graph")
        if not is_regular_action(self.graph, self.action.perms):
            raise RegularActionFailed("base graph action is not regular")

    @property
    def v(self) -> int:
        return self.graph.v


def vkl_cayley(G: FiniteGroup, S: Sequence[int]) -> VklGraph:
    graph = cayley_graph(ConnectionSet(G, S))
    cn = common_neighbor_matrix(graph)
    lam = int(cn[0, 1]) if G.order > 1 else 0
    return VklGraph(graph, len(S), lam, translations(G))


def complete_vkl(n: int, group: FiniteGroup | None = None) -> VklGraph:
    G = group or cyclic_group(n)
    return vkl_cayley(G, range(1, n))


def empty_vkl(n: int, group: FiniteGroup | None = None) -> VklGraph:
    return vkl_cayley(group or cyclic_group(n), [])


@dataclass(frozen=True)
class Construction:
    name: str
    graph: Graph
    params: DdgParams
    action: RegularAction


def _finish(name: str, matrix: np.ndarray, params: DdgParams, action: RegularAction) -> Construction:
    graph = Graph.from_matrix(matrix)
    if not is_regular_action(graph, action.perms):
        raise RegularActionFailed(f"{name}: group {action.group.name} does not act regularly")
    if not graph_has_params(graph, params):
        raise VerificationFailed(f"{name}: output is not a DDG with parameters {params}")
    return Construction(name, graph, params, action)


def kron_identity(base: VklGraph, t: int, p: Sequence[int] | None = None,
                  block_action: RegularAction | None = None) -> Construction:
    """``P (x) A`` with ``P`` the identity or a symmetric permutation matrix of size ``t``.

    The blocks are acted on by ``Z_t`` translations unless ``block_action``
    (a regular action on ``t`` points commuting with ``P``) is given.
    """
    if t < 1:
        raise ValueError("t must be positive")
    if p is None:
        pm = np.eye(t, dtype=np.uint8)
    else:
        p = tuple(p)
        if len(p) != t or sorted(p) != list(range(t)):
            raise NotSymmetricPermutation("p must be a permutation of t points")
        if perm_mul(p, p) != tuple(range(t)):
            raise NotSymmetricPermutation("p is not an involution, so P is not symmetric")
        pm = np.zeros((t, t), dtype=np.uint8)
        pm[np.arange(t), list(p)] = 1
    params = DdgParams(base.v * t, base.k, base.lam, 0, t, base.v)
    outer = block_action or translations(cyclic_group(t))
    return _finish("kron-identity", kronecker(pm, base.graph), params, outer.times(base.action))


def kron_allones(base: VklGraph, n: int) -> Construction:
    """``A (x) J_n``."""
    if n < 1:
        raise ValueError("n must be positive")
    params = DdgParams(base.v * n, base.k * n, base.k * n, base.lam * n, base.v, n)
    inner = translations(cyclic_group(n))
    matrix = kronecker(base.graph, np.ones((n, n), dtype=np.uint8))
    return _finish("kron-allones", matrix, params, base.action.times(inner))


def strong_k2(graph: Graph, action: RegularAction, srg: SrgParams | None = None) -> Construction:
    """Strong product of K2 with a strongly regular graph with ``mu = lambda + 1``."""
    found = srg_parameters(graph)
    if found is None or (srg is not None and srg != found):
        raise ValueError("graph is not strongly regular with the stated parameters")
    if found.mu != found.lam + 1:
        raise MuNotLambdaPlusOne(f"mu = {found.mu}, lambda = {found.lam}")
    if not is_regular_action(graph, action.perms):
        raise RegularActionFailed("supplied action is not regular")
    m, k, lam = found.v, found.k, found.lam
    params = DdgParams(2 * m, 2 * k + 1, 2 * k, 2 * lam + 2, m, 2)
    matrix = strong_product_k2(graph).to_matrix()
    return _finish("strong-k2", matrix, params, translations(cyclic_group(2)).times(action))


def _additive_group_name(p: int, r: int) -> str:
    return f"Z{p}" if r == 1 else f"E{p ** r}"


@dataclass(frozen=True)
class PaleyGraph:
    graph: Graph
    srg: SrgParams
    action: RegularAction


def paley_graph(q: int) -> PaleyGraph:
    """Graph on GF(q) joining elements whose difference is a non-zero square."""
    p, r = prime_power(q)
    if q % 4 != 1:
        raise WrongResidueClass(f"q = {q} is not 1 mod 4; the Paley digraph case is not supported")
    field = galois_field(q)
    additive = FiniteGroup.from_table(field.add, _additive_group_name(p, r))
    graph = cayley_graph(ConnectionSet(additive, field.squares()))
    srg = srg_parameters(graph)
    expected = SrgParams(q, (q - 1) // 2, (q - 5) // 4, (q - 1) // 4)
    if srg != expected:
        raise VerificationFailed(f"Paley({q}) has parameters {srg}, expected {expected}")
    action = translations(additive)
    if not is_regular_action(graph, action.perms):
        raise RegularActionFailed(f"translations of GF({q}) are not regular")
    return PaleyGraph(graph, srg, action)


def paley_ddcg(q: int) -> Construction:
    pg = paley_graph(q)
    out = strong_k2(pg.graph, pg.action, pg.srg)
    expected = DdgParams(2 * q, q, q - 1, (q - 1) // 2, q, 2)
    if out.params != expected:
        raise VerificationFailed(f"{out.params} != {expected}")
    return Construction("paley", out.graph, out.params, out.action)


@dataclass(frozen=True, eq=False)
class HadamardMatrix:
    """Regular graphical Hadamard matrix with diagonal -1, row sum ``2u``, and a regular group."""

    entries: np.ndarray
    u: int
    action: RegularAction

    def __post_init__(self) -> None:
        h = np.asarray(self.entries, dtype=np.int64)
        m = h.shape[0]
        problems = []
        if h.shape != (m, m) or not np.isin(h, (-1, 1)).all():
            problems.append("entries must be +-1 in a square matrix")
        elif not np.array_equal(h @ h.T, m * np.eye(m, dtype=np.int64)):
            problems.append("H H^T != m I")
        elif not np.array_equal(h, h.T):
            problems.append("not symmetric")
        elif not (np.diag(h) == -1).all():
            problems.append("diagonal is not -1")
        elif not (h.sum(axis=1) == 2 * self.u).all():
            problems.append(f"row sums are not 2u = {2 * self.u}")
        elif 4 * self.u * self.u != m:
            problems.append("order is not 4u^2")
        if problems:
            raise NotRegularGraphical("; ".join(problems))
        perms = self.action.perms
        if self.action.group.order != m or any(len(g) != m for g in perms):
            raise RegularActionFailed("group order must equal the matrix order")
        for g in perms:
            gi = np.asarray(g)
            if not np.array_equal(h[np.ix_(gi, gi)], h):
                raise RegularActionFailed("group does not preserve H")
        if {g[0] for g in perms} != set(range(m)):
            raise RegularActionFailed("group is not transitive on rows of H")
        object.__setattr__(self, "entries", h)
        self.entries.setflags(write=False)

    @property
    def order(self) -> int:
        return self.entries.shape[0]

    def kron(self, other: HadamardMatrix) -> HadamardMatrix:
        """Negated Kronecker product, which keeps the diagonal at -1."""
        h = -np.kron(self.entries, other.entries)
        return HadamardMatrix(h, -2 * self.u * other.u, self.action.times(other.action))


def _order4() -> list[HadamardMatrix]:
    e4 = direct_product(cyclic_group(2), cyclic_group(2), "E4")
    z4 = cyclic_group(4)
    j = np.ones((4, 4), dtype=np.int64)
    plus = HadamardMatrix(j - 2 * np.eye(4, dtype=np.int64), 1, translations(e4))
    # P: translation by 2 in Z4, symmetric and fixed-point-free
    pm = np.zeros((4, 4), dtype=np.int64)
    pm[np.arange(4), (np.arange(4) + 2) % 4] = 1
    minus = HadamardMatrix(2 * pm - j, -1, translations(z4))
    return [plus, minus]


def graphical_hadamard_registry(order: int) -> list[HadamardMatrix]:
    """Built-in verified instances of order 4 (u = +1, -1) and 16 (u = +-2)."""
    base = _order4()
    if order == 4:
        return base
    if order == 16:
        out = []
        for a in base:
            for b in base:
                try:
                    out.append(a.kron(b))
                except (NotRegularGraphical, RegularActionFailed):
                    continue
        return out
    raise UnsupportedOrder(f"no registered graphical Hadamard matrices of order {order}")


def hadamard_parameters(u: int, n: int, k: int, lam: int) -> DdgParams:
    d = n - 2 * k
    return DdgParams(4 * n * u * u, 2 * n * u * u + u * d, 4 * lam * u * u + u * (2 * u + 1) * d,
                     n * u * u + u * d, 4 * u * u, n)


def hadamard_replace(h: HadamardMatrix, base: VklGraph) -> Construction:
    """Replace each -1 of ``h`` by the base adjacency ``D`` and each +1 by ``J - D``."""
    d = base.graph.to_matrix().astype(np.int64)
    n = base.v
    comp = np.ones((n, n), dtype=np.int64) - d
    minus = (h.entries == -1).astype(np.int64)
    matrix = np.kron(minus, d) + np.kron(1 - minus, comp)
    params = hadamard_parameters(h.u, n, base.k, base.lam)
    return _finish("hadamard", matrix.astype(np.uint8), params, h.action.times(base.action))
