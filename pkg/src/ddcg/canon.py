"""Canonical labeling by individualization and refinement.

The search tree is the usual one: refine an ordered partition to an equitable
one, individualize a vertex of the first smallest non-singleton cell, repeat
until the partition is discrete. Each leaf gives a relabeled adjacency bit
string; the certificate is the smallest one. Automorphisms found by equal
leaves prune the tree (orbit pruning at each node and jumps back to the node
where a leaf's path left the first or best path), which never changes the
minimum because pruned subtrees are images of explored ones.

Individualizing ``w`` also splits every cell by the number of common
neighbours with ``w``; this is what separates the classes of a regular
divisible design graph before any further branching.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import TooLarge
from .graphs import Graph, graph6_encode, iter_bits

Certificate = bytes


def _split_by(cells: list[list[int]], key) -> list[list[int]]:
    out: list[list[int]] = []
    for cell in cells:
        if len(cell) == 1:
            out.append(cell)
            continue
        groups: dict[int, list[int]] = {}
        for x in cell:
            groups.setdefault(key(x), []).append(x)
        for k in sorted(groups):
            out.append(groups[k])
    return out


def _equitable(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells until every vertex of a cell has the same count into every cell."""
    changed = True
    while changed:
        changed = False
        i = 0
        while i < len(cells):
            mask = 0
            for x in cells[i]:
                mask |= 1 << x
            new: list[list[int]] = []
            for cell in cells:
                if len(cell) == 1:
                    new.append(cell)
                    continue
                groups: dict[int, list[int]] = {}
                for x in cell:
                    groups.setdefault((rows[x] & mask).bit_count(), []).append(x)
                if len(groups) == 1:
                    new.append(cell)
                else:
                    changed = True
                    for k in sorted(groups):
                        new.append(groups[k])
            cells = new
            i += 1
    return cells


def _individualize(rows: tuple[int, ...], cells: list[list[int]], w: int) -> list[list[int]]:
    out: list[list[int]] = []
    for cell in cells:
        if w in cell:
            out.append([w])
            rest = [x for x in cell if x != w]
            if rest:
                out.append(rest)
        else:
            out.append(cell)
    rw = rows[w]
    out = _split_by(out, lambda x: (rw & rows[x]).bit_count())
    return _equitable(rows, out)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class CanonicalResult:
    labeling: list[int]
    code: int
    automorphisms: list[tuple[int, ...]]
    leaves: int


class _Search:
    def __init__(self, graph: Graph):
        self.g = graph
        self.rows = graph.rows
        self.v = graph.v
        self.first_path: list[int] | None = None
        self.first_code: int | None = None
        self.first_lab: list[int] | None = None
        self.best_path: list[int] | None = None
        self.best_code: int | None = None
        self.best_lab: list[int] | None = None
        self.autos: list[tuple[int, ...]] = []
        self.leaves = 0

    def code(self, lab: list[int]) -> int:
        rows = self.rows
        c = 0
        for j in range(1, self.v):
            rj = rows[lab[j]]
            for i in range(j):
                c = (c << 1) | ((rj >> lab[i]) & 1)
        return c

    def _automorphism(self, lab_a: list[int], lab_b: list[int]) -> tuple[int, ...]:
        gamma = [0] * self.v
        for a, b in zip(lab_a, lab_b):
            gamma[a] = b
        return tuple(gamma)

    @staticmethod
    def _common(a: list[int], b: list[int]) -> int:
        k = 0
        while k < len(a) and k < len(b) and a[k] == b[k]:
            k += 1
        return k

    def leaf(self, cells: list[list[int]], path: list[int]) -> int | None:
        self.leaves += 1
        lab = [c[0] for c in cells]
        c = self.code(lab)
        if self.first_code is None:
            self.first_code, self.first_lab, self.first_path = c, lab, list(path)
            self.best_code, self.best_lab, self.best_path = c, lab, list(path)
            return None
        if c == self.first_code:
            self.autos.append(self._automorphism(self.first_lab, lab))
            return self._common(path, self.first_path)
        if c == self.best_code:
            self.autos.append(self._automorphism(self.best_lab, lab))
            return self._common(path, self.best_path)
        if c < self.best_code:
            self.best_code, self.best_lab, self.best_path = c, lab, list(path)
        return None

    def orbits_fixing(self, path: list[int]) -> _UnionFind:
        uf = _UnionFind(self.v)
        for gamma in self.autos:
            if all(gamma[x] == x for x in path):
                for x, y in enumerate(gamma):
                    uf.union(x, y)
        return uf

    def run(self, cells: list[list[int]], path: list[int]) -> int | None:
        """Explore below ``cells``; a returned level asks ancestors deeper than it to unwind."""
        if len(cells) == self.v:
            return self.leaf(cells, path)
        target = min((c for c in cells if len(c) > 1), key=len)
        level = len(path)
        explored: list[int] = []
        n_autos = -1
        uf = None
        for w in sorted(target):
            if explored:
                if len(self.autos) != n_autos:
                    uf = self.orbits_fixing(path)
                    n_autos = len(self.autos)
                rw = uf.find(w)
                if any(uf.find(u) == rw for u in explored):
                    continue
            explored.append(w)
            path.append(w)
            jump = self.run(_individualize(self.rows, cells, w), path)
            path.pop()
            if jump is not None and jump < level:
                return jump
        return None


def canonical_form(graph: Graph) -> CanonicalResult:
    if graph.v > 64:
        raise TooLarge(f"canonical labeling supports at most 64 vertices, got {graph.v}")
    search = _Search(graph)
    degrees = graph.degrees()
    cells = _split_by([list(range(graph.v))], lambda x: degrees[x])
    search.run(_equitable(graph.rows, cells), [])
    return CanonicalResult(search.best_lab, search.best_code, search.autos, search.leaves)


def canonical_labeling(graph: Graph) -> list[int]:
    """``lab[i]`` is the original vertex placed at canonical position ``i``."""
    return canonical_form(graph).labeling


def canonical_graph(graph: Graph) -> Graph:
    lab = canonical_labeling(graph)
    pos = [0] * graph.v
    for i, x in enumerate(lab):
        pos[x] = i
    return graph.relabel(pos)


def canonical_certificate(graph: Graph) -> Certificate:
    """Bytes identifying the isomorphism class: the graph6 string of the canonical form."""
    return graph6_encode(canonical_graph(graph)).encode("ascii")


def are_isomorphic(a: Graph, b: Graph) -> bool:
    return a.v == b.v and canonical_certificate(a) == canonical_certificate(b)
