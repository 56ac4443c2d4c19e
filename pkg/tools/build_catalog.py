"""Regenerate ``src/ddcg/data/groups.txt``.

Every group of order 1..27 is built from a standard construction (cyclic,
metacyclic, semidirect or direct product, or a small permutation group) and
written out as generators of its regular representation. The script refuses to
write the file unless each order has the known number of groups and the groups
of each order are pairwise non-isomorphic.

    python tools/build_catalog.py
"""

from __future__ import annotations

import itertools
import sys
from pathlib import Path

import numpy as np

from ddcg.catalog import KNOWN_GROUP_COUNTS
from ddcg.groups import (
    FiniteGroup,
    closure,
    cyclic_group,
    direct_product,
    group_isomorphic,
    perm_from_cycles,
    regular_representation,
)

OUT = Path(__file__).resolve().parents[1] / "src" / "ddcg" / "data" / "groups.txt"


def metacyclic(m: int, n: int, r: int, s: int, name: str) -> FiniteGroup:
    """<a, b | a^m, b^n = a^s, b a b^-1 = a^r>, element a^i b^j at index i + m*j."""
    r %= m
    assert pow(r, n, m) == 1 % m and (r * s - s) % m == 0
    size = m * n
    table = np.zeros((size, size), dtype=np.int32)
    for j in range(n):
        rj = pow(r, j, m)
        for l in range(n):
            carry = s if j + l >= n else 0
            for i in range(m):
                for k in range(m):
                    table[i + m * j, k + m * l] = (i + rj * k + carry) % m + m * ((j + l) % n)
    return FiniteGroup.from_table(table, name)


def semidirect(N: FiniteGroup, K: FiniteGroup, act, name: str) -> FiniteGroup:
    """N : K with ``act(k)`` an automorphism of N (list of images); (x, k) at index x + |N|*k."""
    nn, nk = N.order, K.order
    autos = [list(act(k)) for k in range(nk)]
    table = np.zeros((nn * nk, nn * nk), dtype=np.int32)
    for k1 in range(nk):
        phi = autos[k1]
        for k2 in range(nk):
            k = K.mul(k1, k2)
            for x1 in range(nn):
                for x2 in range(nn):
                    table[x1 + nn * k1, x2 + nn * k2] = N.mul(x1, phi[x2]) + nn * k
    return FiniteGroup.from_table(table, name)


def perm_group(gens, order: int, name: str) -> FiniteGroup:
    return closure(gens, order, name)


def dihedral(order: int) -> FiniteGroup:
    return metacyclic(order // 2, 2, -1, 0, f"D{order}")


def inversion(N: FiniteGroup):
    return [int(x) for x in N.inv]


def sl23() -> FiniteGroup:
    vecs = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]

    def mat(a, b, c, d):
        return tuple(vecs.index(((a * x + b * y) % 3, (c * x + d * y) % 3)) for x, y in vecs)

    return perm_group([mat(1, 1, 0, 1), mat(0, 2, 1, 0)], 24, "SL2(3)")


def build() -> list[FiniteGroup]:
    Z = {n: cyclic_group(n) for n in range(1, 28)}
    E4 = direct_product(Z[2], Z[2], "E4")
    E8 = direct_product(E4, Z[2], "E8")
    E9 = direct_product(Z[3], Z[3], "E9")
    S3 = dihedral(6)
    S3 = FiniteGroup.from_table(S3.table, "S3")
    D8 = dihedral(8)
    Q8 = metacyclic(4, 2, -1, 2, "Q8")
    A4 = perm_group([perm_from_cycles(4, (0, 1, 2)), perm_from_cycles(4, (0, 1), (2, 3))], 12, "A4")
    S4 = perm_group([perm_from_cycles(4, (0, 1, 2, 3)), perm_from_cycles(4, (0, 1))], 24, "S4")
    Dic3 = metacyclic(3, 4, -1, 0, "Z3:Z4")
    dp = direct_product

    def by_parity(K_index_parity):
        # C3 : K where k acts by inversion iff K_index_parity(k) is odd
        return lambda k: inversion(Z[3]) if K_index_parity(k) % 2 else list(range(3))

    groups = [
        Z[1], Z[2], Z[3],
        Z[4], E4,
        Z[5],
        Z[6], S3,
        Z[7],
        Z[8], dp(Z[4], Z[2]), D8, Q8, E8,
        Z[9], E9,
        Z[10], dihedral(10),
        Z[11],
        Z[12], dp(Z[6], Z[2]), dihedral(12), Dic3, A4,
        Z[13],
        Z[14], dihedral(14),
        Z[15],
        # order 16
        Z[16],
        dp(Z[4], Z[4]),
        semidirect(dp(Z[4], Z[2]), Z[2],
                   lambda k: [(x // 2) * 2 + ((x % 2 + (x // 2) * k) % 2) for x in range(8)],
                   "(Z4xZ2):Z2"),
        metacyclic(4, 4, -1, 0, "Z4:Z4"),
        dp(Z[8], Z[2]),
        metacyclic(8, 2, 5, 0, "Z8:Z2"),
        dihedral(16),
        metacyclic(8, 2, 3, 0, "QD16"),
        metacyclic(8, 2, -1, 4, "Q16"),
        dp(dp(Z[4], Z[2]), Z[2]),
        dp(Z[2], D8),
        dp(Z[2], Q8),
        semidirect(dp(Z[4], Z[2]), Z[2],
                   lambda k: [(((x // 2) + 2 * (x % 2) * k) % 4) * 2 + x % 2 for x in range(8)],
                   "Z4oD8"),
        FiniteGroup.from_table(dp(E8, Z[2]).table, "E16"),
        Z[17],
        # order 18
        Z[18], dp(Z[6], Z[3]), dihedral(18), dp(Z[3], S3),
        semidirect(E9, Z[2], lambda k: inversion(E9) if k else list(range(9)), "E9:Z2"),
        Z[19],
        # order 20
        Z[20], dp(Z[10], Z[2]), dihedral(20),
        metacyclic(5, 4, 2, 0, "Z5:Z4"),
        metacyclic(5, 4, -1, 0, "Dic5"),
        Z[21], metacyclic(7, 3, 2, 0, "Z7:Z3"),
        Z[22], dihedral(22),
        Z[23],
        # order 24
        metacyclic(3, 8, -1, 0, "Z3:Z8"),
        Z[24],
        sl23(),
        # Q8 = metacyclic(4,2,-1,2): element a^i b^j at index i + 4j; kernel <a>
        semidirect(Z[3], Q8, by_parity(lambda k: k // 4), "Z3:Q8"),
        dp(Z[4], S3),
        dihedral(24),
        dp(Z[2], Dic3, "Z2x(Z3:Z4)"),
        # D8 = metacyclic(4,2,-1,0); kernel {a^i b^j : i even}
        semidirect(Z[3], D8, by_parity(lambda k: k % 4), "(Z6xZ2):Z2"),
        dp(Z[12], Z[2]),
        dp(Z[3], D8),
        dp(Z[3], Q8),
        S4,
        dp(Z[2], A4),
        dp(dp(Z[2], Z[2]), S3),
        dp(dp(Z[6], Z[2]), Z[2]),
        Z[25], dp(Z[5], Z[5], "E25"),
        Z[26], dihedral(26),
        # order 27
        Z[27], dp(Z[9], Z[3]),
        FiniteGroup.from_table(dp(E9, Z[3]).table, "E27"),
        semidirect(E9, Z[3], lambda k: [((x // 3 + k * (x % 3)) % 3) * 3 + x % 3 for x in range(9)], "E9:Z3"),
        metacyclic(9, 3, 4, 0, "Z9:Z3"),
    ]
    return groups


def check(groups: list[FiniteGroup]) -> None:
    by_order: dict[int, list[FiniteGroup]] = {}
    for g in groups:
        by_order.setdefault(g.order, []).append(g)
    for order, expected in KNOWN_GROUP_COUNTS.items():
        found = by_order.get(order, [])
        if len(found) != expected:
            sys.exit(f"order {order}: {len(found)} groups, expected {expected}")
        for a, b in itertools.combinations(found, 2):
            if group_isomorphic(a, b):
                sys.exit(f"order {order}: {a.name} and {b.name} are isomorphic")
    names = [g.name for g in groups]
    if len(set(names)) != len(names):
        sys.exit("duplicate group names")


def render(groups: list[FiniteGroup]) -> str:
    lines = [
        "# Groups of order 1..27, one record per isomorphism class.",
        "# Generators are right-regular permutations (x -> x*g) on 0..order-1.",
        "# Regenerate with tools/build_catalog.py.",
    ]
    for g in groups:
        gens = regular_representation(g) or [tuple(range(g.order))]
        lines.append(f"group {g.order} {g.name}")
        for p in gens:
            lines.append("gen " + " ".join(map(str, p)))
        lines.append("end")
    return "\n".join(lines) + "\n"


if __name__ == "__main__":
    gs = build()
    check(gs)
    OUT.write_text(render(gs), encoding="utf-8")
    print(f"wrote {len(gs)} groups to {OUT}")
