"""Simple undirected graphs on at most 64 vertices, stored as bitset rows."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from .errors import (
    DegreeMismatch,
    IdentityInSet,
    MalformedString,
    NotInverseClosed,
    SameVertex,
    UnsupportedSize,
)
from .groups import FiniteGroup, Permutation, perm_mul

MAX_VERTICES = 64


@dataclass(frozen=True)
class Graph:
    """``rows[i]`` is the neighbourhood of vertex ``i`` as an integer bitset."""

    v: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.v <= MAX_VERTICES:
            raise UnsupportedSize(f"graphs must have 1..{MAX_VERTICES} vertices, got {self.v}")
        if len(self.rows) != self.v:
            raise ValueError("row count does not match vertex count")
        for i, r in enumerate(self.rows):
            if r >> self.v or (r >> i) & 1:
                raise ValueError(f"row {i} has a loop or out-of-range bit")
            rest = r
            while rest:
                low = rest & -rest
                j = low.bit_length() - 1
                if not (self.rows[j] >> i) & 1:
                    raise ValueError("adjacency is not symmetric")
                rest ^= low

    @classmethod
    def from_matrix(cls, matrix) -> Graph:
        a = np.asarray(matrix)
        n = a.shape[0]
        if a.shape != (n, n):
            raise ValueError("adjacency matrix must be square")
        rows = tuple(sum(1 << int(j) for j in np.flatnonzero(a[i])) for i in range(n))
        return cls(n, rows)

    @classmethod
    def from_edges(cls, v: int, edges: Iterable[tuple[int, int]]) -> Graph:
        rows = [0] * v
        for a, b in edges:
            if a == b:
                raise ValueError("loops are not allowed")
            rows[a] |= 1 << b
            rows[b] |= 1 << a
        return cls(v, tuple(rows))

    def to_matrix(self) -> np.ndarray:
        a = np.zeros((self.v, self.v), dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in iter_bits(r):
                a[i, j] = 1
        return a

    def adjacent(self, x: int, y: int) -> bool:
        return bool((self.rows[x] >> y) & 1)

    def neighbors(self, x: int) -> list[int]:
        return list(iter_bits(self.rows[x]))

    def degree(self, x: int) -> int:
        return self.rows[x].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def is_regular(self) -> bool:
        return len(set(self.degrees())) == 1

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.v) for j in iter_bits(self.rows[i]) if i < j]

    def complement(self) -> Graph:
        full = (1 << self.v) - 1
        return Graph(self.v, tuple(full & ~r & ~(1 << i) for i, r in enumerate(self.rows)))

    def relabel(self, perm: Sequence[int]) -> Graph:
        """The image graph with vertex ``x`` renamed ``perm[x]``."""
        rows = [0] * self.v
        for i, r in enumerate(self.rows):
            bits = 0
            for j in iter_bits(r):
                bits |= 1 << perm[j]
            rows[perm[i]] = bits
        return Graph(self.v, tuple(rows))


def iter_bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << i) for i in range(n)))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@dataclass(frozen=True)
class ConnectionSet:
    """An identity-free, inverse-closed subset of a group."""

    group: FiniteGroup
    elements: frozenset[int]

    def __init__(self, group: FiniteGroup, elements: Iterable[int]):
        object.__setattr__(self, "group", group)
        object.__setattr__(self, "elements", frozenset(int(x) for x in elements))
        if 0 in self.elements:
            raise IdentityInSet(f"identity in connection set of {group.name}")
        if any(not 0 < x < group.order for x in self.elements):
            raise ValueError("connection set element out of range")
        if any(int(group.inv[x]) not in self.elements for x in self.elements):
            raise NotInverseClosed(f"connection set of {group.name} is not inverse-closed")

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))

    def __len__(self) -> int:
        return len(self.elements)


def cayley_graph(S: ConnectionSet) -> Graph:
    """``g ~ h`` iff ``g^-1 h`` lies in ``S``, i.e. ``h = g*s``."""
    G = S.group
    rows = []
    for g in range(G.order):
        bits = 0
        for s in S.elements:
            bits |= 1 << int(G.table[g, s])
        rows.append(bits)
    return Graph(G.order, tuple(rows))


def common_neighbors(graph: Graph, x: int, y: int) -> int:
    if x == y:
        raise SameVertex(f"vertex {x} given twice")
    return (graph.rows[x] & graph.rows[y]).bit_count()


def common_neighbor_matrix(graph: Graph) -> np.ndarray:
    a = graph.to_matrix().astype(np.int64)
    return a @ a


def kronecker(a, b) -> np.ndarray:
    """Kronecker product of two 0/1 matrices (graphs are taken by adjacency matrix)."""
    a = a.to_matrix() if isinstance(a, Graph) else np.asarray(a)
    b = b.to_matrix() if isinstance(b, Graph) else np.asarray(b)
    return np.kron(a, b).astype(np.uint8)


def strong_product_k2(graph: Graph) -> Graph:
    """Strong product of K2 with ``graph``: vertex ``(s, i)`` gets index ``s*v + i``."""
    a = graph.to_matrix()
    eye = np.eye(graph.v, dtype=np.uint8)
    m = kronecker(np.ones((2, 2), dtype=np.uint8), a + eye) - np.eye(2 * graph.v, dtype=np.uint8)
    return Graph.from_matrix(m)


def is_automorphism(graph: Graph, perm: Sequence[int]) -> bool:
    return all(
        graph.rows[perm[i]] == sum(1 << perm[j] for j in iter_bits(r))
        for i, r in enumerate(graph.rows)
    )


def is_regular_action(graph: Graph, perms: Sequence[Sequence[int]]) -> bool:
    """True iff ``perms`` generate a group of order ``v`` of automorphisms acting transitively."""
    v = graph.v
    if any(len(p) != v for p in perms):
        raise DegreeMismatch("permutation degree differs from the vertex count")
    gens = [tuple(p) for p in perms]
    if not all(is_automorphism(graph, p) for p in gens):
        return False
    identity = tuple(range(v))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_mul(x, g)
                if y not in seen:
                    if len(seen) == v:
                        return False
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    if len(seen) != v:
        return False
    return {p[0] for p in seen} == set(range(v))


def product_action(outer: Sequence[Permutation], inner: Sequence[Permutation]) -> list[Permutation]:
    """Action of a direct product on index pairs ``(i, x) -> i*len(inner[0]) + x``.

    Returns one permutation per pair of given permutations, outer-major.
    """
    n_out, n_in = len(outer[0]), len(inner[0])
    return [
        tuple(p[i] * n_in + q[x] for i in range(n_out) for x in range(n_in))
        for p in outer
        for q in inner
    ]


# graph6 ---------------------------------------------------------------------


def graph6_encode(graph: Graph) -> str:
    n = graph.v
    if n <= 62:
        header = chr(n + 63)
    else:
        header = chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    bits = [(graph.rows[i] >> j) & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    body = "".join(
        chr(63 + int("".join(map(str, bits[k:k + 6])), 2)) for k in range(0, len(bits), 6)
    )
    return header + body


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s or any(not 63 <= ord(c) <= 126 for c in s):
        raise MalformedString(f"not a graph6 string: {text!r}")
    if s[0] == "~":
        if len(s) < 4 or s[1] == "~":
            raise UnsupportedSize("graph6 sizes above 258047 are not supported")
        n = sum((ord(c) - 63) << sh for c, sh in zip(s[1:4], (12, 6, 0)))
        body = s[4:]
    else:
        n = ord(s[0]) - 63
        body = s[1:]
    if n == 0 or n > MAX_VERTICES:
        raise UnsupportedSize(f"graph6 order {n} outside 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise MalformedString(f"graph6 body length {len(body)} does not match order {n}")
    bits = []
    for c in body:
        x = ord(c) - 63
        bits.extend((x >> (5 - k)) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedString("nonzero padding bits")
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))
