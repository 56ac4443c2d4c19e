"""Isomorph-free exhaustive classification of divisible design Cayley graphs.

For every group of a given order and every admissible degree ``k`` the search
visits all inverse-closed ``k``-subsets ``S`` of ``G - {e}``. A vectorized pass
computes the ``SS^-1`` profile of each subset and keeps those whose
non-identity values take exactly two values; the coset test, the
``Aut(G)``-orbit minimality filter and canonical labeling then run on the
survivors only. Every Cayley DDG has a subgroup as the class of the identity,
so the coset test sees every witness and the search is complete.
"""

from __future__ import annotations

import itertools
import time
from math import comb
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .canon import canonical_certificate
from .catalog import MAX_CATALOG_ORDER, GroupCatalog
from .ddg import DdgParams, admissible_degrees, ddg_check, theorem3_test
from .errors import CatalogIncomplete, VerificationFailed
from .graphs import ConnectionSet, cayley_graph
from .groups import FiniteGroup, automorphisms

CHUNK_ROWS = 1 << 17


def inverse_closed_units(G: FiniteGroup) -> tuple[list[int], list[tuple[int, int]]]:
    """Involutions and inverse pairs ``(x, x^-1)`` with ``x < x^-1``."""
    involutions = [g for g in range(1, G.order) if int(G.inv[g]) == g]
    pairs = [(g, int(G.inv[g])) for g in range(1, G.order) if g < int(G.inv[g])]
    return involutions, pairs


def count_inverse_closed(G: FiniteGroup, k: int) -> int:
    inv, pairs = inverse_closed_units(G)
    return sum(
        _comb(len(pairs), p) * _comb(len(inv), k - 2 * p)
        for p in range(len(pairs) + 1)
        if 0 <= k - 2 * p <= len(inv)
    )


def _comb(n: int, r: int) -> int:
    return comb(n, r) if 0 <= r <= n else 0


def _subset_blocks(G: FiniteGroup, k: int) -> Iterator[np.ndarray]:
    """Boolean membership matrices covering every inverse-closed ``k``-subset once."""
    v = G.order
    inv, pairs = inverse_closed_units(G)
    for p in range(len(pairs) + 1):
        i = k - 2 * p
        if not 0 <= i <= len(inv):
            continue
        pc = list(itertools.combinations(range(len(pairs)), p))
        ic = list(itertools.combinations(inv, i))
        pm = np.zeros((len(pc), v), dtype=bool)
        for row, combo in enumerate(pc):
            for j in combo:
                pm[row, list(pairs[j])] = True
        im = np.zeros((len(ic), v), dtype=bool)
        for row, combo in enumerate(ic):
            im[row, list(combo)] = True
        step = max(1, CHUNK_ROWS // max(1, len(ic)))
        for start in range(0, len(pc), step):
            block = pm[start:start + step, None, :] | im[None, :, :]
            yield block.reshape(-1, v)


def _two_valued(G: FiniteGroup, x: np.ndarray) -> np.ndarray:
    """Rows whose SS^-1 profile has exactly two distinct non-identity values."""
    n = x.shape[0]
    counts = np.empty((n, G.order - 1), dtype=np.int16)
    xi = x.astype(np.int16)
    for g in range(1, G.order):
        # counts[g] = #{t in S : g t in S}
        counts[:, g - 1] = (xi & xi[:, G.table[g]]).sum(axis=1)
    lo = counts.min(axis=1)
    hi = counts.max(axis=1)
    ok = (lo < hi) & ((counts == lo[:, None]) | (counts == hi[:, None])).all(axis=1)
    return np.flatnonzero(ok)


def all_inverse_closed(G: FiniteGroup, k: int) -> list[tuple[int, ...]]:
    """Every inverse-closed ``k``-subset of ``G - {e}``, sorted lexicographically."""
    out = []
    for block in _subset_blocks(G, k):
        out.extend(tuple(int(y) for y in np.flatnonzero(row)) for row in block)
    return sorted(out)


class OrbitFilter:
    """Tests whether a sorted subset is lexicographically least in its ``Aut(G)``-orbit."""

    def __init__(self, G: FiniteGroup):
        self.autos = np.asarray(automorphisms(G), dtype=np.int64)

    def is_minimal(self, subset: tuple[int, ...]) -> bool:
        if not subset:
            return True
        s = np.asarray(subset)
        images = np.sort(self.autos[:, s], axis=1)
        diff = images != s
        rows = diff.any(axis=1)
        first = diff[rows].argmax(axis=1)
        return not (images[rows, first] < s[first]).any()


def enumerate_connection_sets(G: FiniteGroup, k: int, prune: bool = True) -> Iterator[ConnectionSet]:
    """Inverse-closed ``k``-subsets in lexicographic order, orbit-minimal ones only if ``prune``."""
    filt = OrbitFilter(G) if prune else None
    for subset in all_inverse_closed(G, k):
        if filt is None or filt.is_minimal(subset):
            yield ConnectionSet(G, subset)


@dataclass(frozen=True)
class Hit:
    params: DdgParams
    certificate: bytes
    group: str
    subset: tuple[int, ...]


@dataclass(frozen=True)
class CellStats:
    group: str
    k: int
    subsets: int
    two_valued: int
    coset: int
    accepted: int
    orbit_pruned: int

    def line(self) -> str:
        return (f"# cell group={self.group} k={self.k} subsets={self.subsets} "
                f"two_valued={self.two_valued} coset={self.coset} "
                f"orbit_pruned={self.orbit_pruned} accepted={self.accepted}")


def search_cell(G: FiniteGroup, k: int, target: DdgParams | None = None,
                prune: bool = True) -> tuple[CellStats, list[Hit]]:
    """Exhaustive search of one (group, degree) cell."""
    subsets = two_valued = coset = pruned = 0
    hits: list[Hit] = []
    filt: OrbitFilter | None = None
    candidates: list[tuple[int, ...]] = []
    for block in _subset_blocks(G, k):
        subsets += block.shape[0]
        for r in _two_valued(G, block):
            candidates.append(tuple(int(y) for y in np.flatnonzero(block[r])))
    two_valued = len(candidates)
    for subset in sorted(candidates):
        S = ConnectionSet(G, subset)
        structures = [s for s in theorem3_test(S) if s.params.nontrivial]
        if target is not None:
            structures = [s for s in structures if s.params == target]
        if not structures:
            continue
        coset += 1
        if prune:
            if filt is None:
                filt = OrbitFilter(G)
            if not filt.is_minimal(subset):
                pruned += 1
                continue
        graph = cayley_graph(S)
        found = {s.params for s in ddg_check(graph)}
        cert = canonical_certificate(graph)
        for s in structures:
            if s.params not in found:
                raise VerificationFailed(f"{G.name} {subset}: coset test and ddg_check disagree")
            hits.append(Hit(s.params, cert, G.name, subset))
    stats = CellStats(G.name, k, subsets, two_valued, coset, len(hits), pruned)
    return stats, hits


def _run_cell(args) -> tuple[CellStats, list[Hit]]:
    G, k, target, prune = args
    return search_cell(G, k, target, prune)


@dataclass(frozen=True)
class ClassificationRecord:
    params: DdgParams
    certificate: bytes
    groups: tuple[str, ...]
    witness: tuple[str, tuple[int, ...]]

    @property
    def graph6(self) -> str:
        """Graph6 of the canonical form (the certificate itself)."""
        return self.certificate.decode("ascii")

    def line(self) -> str:
        name, subset = self.witness
        return (f"{self.params.spaced()} ; {self.graph6} ; {','.join(self.groups)} ; "
                f"witness={name}:{','.join(map(str, subset))}")


@dataclass
class ClassificationReport:
    order: int
    records: list[ClassificationRecord]
    cells: list[CellStats]
    target: DdgParams | None = None
    wall_time: float = field(default=0.0, compare=False)

    def counts(self) -> dict[DdgParams, int]:
        out: dict[DdgParams, int] = {}
        for r in self.records:
            out[r.params] = out.get(r.params, 0) + 1
        return out

    def render(self) -> str:
        """Report text; excludes wall time so that reruns are byte-identical."""
        lines = [f"# order {self.order}"]
        if self.target is not None:
            lines.append(f"# params {self.target}")
        lines.append(f"# subsets {sum(c.subsets for c in self.cells)}")
        lines.append(f"# orbit_pruned {sum(c.orbit_pruned for c in self.cells)}")
        lines.append(f"# records {len(self.records)}")
        lines.extend(c.line() for c in self.cells)
        lines.extend(r.line() for r in self.records)
        return "\n".join(lines) + "\n"


def classify_order(catalog: GroupCatalog, v: int, target: DdgParams | None = None,
                   jobs: int = 1, prune: bool = True) -> ClassificationReport:
    """All proper DDCGs on ``v`` vertices, up to isomorphism, whose parameters pass ``DdgParams.nontrivial``."""
    if not 1 <= v <= MAX_CATALOG_ORDER:
        raise CatalogIncomplete(v)
    start = time.perf_counter()
    groups = catalog.groups_of_order(v)
    rank = {G.name: i for i, G in enumerate(groups)}
    if target is not None:
        if target.v != v:
            raise ValueError(f"parameter filter {target} does not have v = {v}")
        degrees = [target.k]
    else:
        degrees = admissible_degrees(v)
    tasks = [(G, k, target, prune) for G in groups for k in degrees]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_cell, tasks, chunksize=1))
    else:
        results = [_run_cell(t) for t in tasks]

    merged: dict[tuple[DdgParams, bytes], dict] = {}
    cells = []
    for stats, hits in results:
        cells.append(stats)
        for h in hits:
            key = (h.params, h.certificate)
            entry = merged.setdefault(key, {"groups": set(), "witness": None})
            entry["groups"].add(h.group)
            w = (rank[h.group], len(h.subset), h.subset)
            if entry["witness"] is None or w < entry["witness"][0]:
                entry["witness"] = (w, (h.group, h.subset))
    records = [
        ClassificationRecord(
            params=p,
            certificate=c,
            groups=tuple(sorted(e["groups"], key=rank.__getitem__)),
            witness=e["witness"][1],
        )
        for (p, c), e in merged.items()
    ]
    records.sort(key=lambda r: (r.params, r.certificate))
    return ClassificationReport(v, records, cells, target, time.perf_counter() - start)


@dataclass
class NonexistenceCertificate:
    params: DdgParams
    nonexistent: bool
    report: ClassificationReport

    def log(self) -> list[str]:
        return [c.line() for c in self.report.cells]


def certify_nonexistence(catalog: GroupCatalog, params: DdgParams, jobs: int = 1) -> NonexistenceCertificate:
    """Exhaustive search restricted to ``params``; nonexistent iff nothing is found."""
    report = classify_order(catalog, params.v, target=params, jobs=jobs)
    return NonexistenceCertificate(params, not report.records, report)


# Parameter sets (v <= 27, max(0, 2k - v) < l2 < k, l1 < k) for which a proper
# divisible design graph is known to exist, Cayley or not. table1.txt lists
# these together with anything the search discovers.
KNOWN_DDG_PARAMETERS = tuple(DdgParams(*t) for t in (
    (8, 4, 0, 2, 4, 2), (10, 5, 4, 2, 5, 2), (12, 5, 0, 2, 6, 2), (12, 5, 1, 2, 4, 3),
    (12, 6, 2, 3, 3, 4), (12, 7, 3, 4, 4, 3), (15, 4, 0, 1, 5, 3), (18, 9, 6, 4, 6, 3),
    (18, 9, 8, 4, 9, 2), (20, 7, 3, 2, 4, 5), (20, 7, 6, 2, 10, 2), (20, 9, 0, 4, 10, 2),
    (20, 13, 9, 8, 4, 5), (20, 13, 12, 8, 10, 2), (24, 6, 2, 1, 3, 8), (24, 7, 0, 2, 8, 3),
    (24, 8, 4, 2, 4, 6), (24, 10, 2, 4, 12, 2), (24, 10, 3, 4, 8, 3), (24, 10, 6, 3, 3, 8),
    (24, 14, 6, 8, 12, 2), (24, 14, 7, 8, 8, 3), (24, 16, 12, 10, 4, 6),
    (26, 13, 12, 6, 13, 2), (27, 8, 4, 2, 9, 3), (27, 18, 9, 12, 9, 3),
))


@dataclass
class Tables:
    table1: str
    table2: str
    reports: list[ClassificationReport]


def emit_tables(catalog: GroupCatalog, max_order: int = MAX_CATALOG_ORDER, jobs: int = 1) -> Tables:
    """Classify every order up to ``max_order`` and render the two summary tables.

    ``table1`` has one row per parameter set (known or discovered) with the
    number of DDCGs; ``table2`` has one row per isomorphism class with its
    regular groups. Both are byte-deterministic.
    """
    if not 1 <= max_order <= MAX_CATALOG_ORDER:
        raise ValueError(f"max order must be in 1..{MAX_CATALOG_ORDER}, got {max_order}")
    reports = [classify_order(catalog, v, jobs=jobs) for v in range(1, max_order + 1)]
    counts: dict[DdgParams, int] = {p: 0 for p in KNOWN_DDG_PARAMETERS if p.v <= max_order}
    for rep in reports:
        for p, c in rep.counts().items():
            counts[p] = counts.get(p, 0) + c
    t1 = ["# v k l1 l2 m n cayley ddcgs"]
    for p in sorted(counts):
        t1.append(f"{p.spaced()} {'yes' if counts[p] else 'no'} {counts[p]}")
    t2 = ["# v k l1 l2 m n ; groups ; graph6"]
    for rep in reports:
        for r in rep.records:
            t2.append(f"{r.params.spaced()} ; {','.join(r.groups)} ; {r.graph6}")
    return Tables("\n".join(t1) + "\n", "\n".join(t2) + "\n", reports)
