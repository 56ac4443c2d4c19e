"""Finite fields GF(p^r) as addition and multiplication tables.

Element ``sum(c_i * p**i)`` stands for the polynomial ``sum(c_i x^i)`` reduced
modulo the lexicographically smallest monic irreducible polynomial of degree
``r`` (coefficients compared low degree first).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import NotPrimePower


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n ** 0.5) + 1))


def prime_power(q: int) -> tuple[int, int]:
    """``(p, r)`` with ``q = p**r``, or :class:`NotPrimePower`."""
    if q < 2:
        raise NotPrimePower(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    if not _is_prime(p):
        raise NotPrimePower(f"{q} is not a prime power")
    r, rest = 0, q
    while rest % p == 0:
        rest //= p
        r += 1
    if rest != 1:
        raise NotPrimePower(f"{q} is not a prime power")
    return p, r


def _poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo monic ``f`` (coefficient lists, low degree first)."""
    a = a[:]
    df = len(f) - 1
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return [x % p for x in a[:df]] + [0] * max(0, df - len(a))


def _monic(p: int, degree: int):
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def _divides(d: list[int], f: list[int], p: int) -> bool:
    return not any(_poly_mod(f, d, p))


@lru_cache(maxsize=None)
def smallest_irreducible(p: int, r: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree ``r`` over GF(p)."""
    if r == 1:
        return (0, 1)
    # lexicographic on (c0, ..., c_{r-1}) matches itertools.product order
    for f in _monic(p, r):
        if f[0] == 0:
            continue
        if not any(_divides(d, f, p) for deg in range(1, r // 2 + 1) for d in _monic(p, deg)):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


@dataclass(frozen=True, eq=False)
class FiniteField:
    p: int
    r: int
    modulus: tuple[int, ...]
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)

    @property
    def q(self) -> int:
        return self.p ** self.r

    @property
    def neg(self) -> np.ndarray:
        return np.argmin(self.add, axis=1)

    def sub(self, x: int, y: int) -> int:
        return int(self.add[x, self.neg[y]])

    def squares(self) -> frozenset[int]:
        """Non-zero quadratic residues."""
        return frozenset(int(self.mul[x, x]) for x in range(1, self.q))

    def verify(self) -> None:
        """Exhaustive check of the field axioms."""
        q, p, add, mul = self.q, self.p, self.add, self.mul
        r = np.arange(q)
        assert np.array_equal(add, add.T) and np.array_equal(mul, mul.T)
        assert np.array_equal(add[0], r) and np.array_equal(mul[1], r) and not mul[0].any()
        assert np.array_equal(add[add, :], add[:, add])
        assert np.array_equal(mul[mul, :], mul[:, mul])
        # additive group elementary abelian: p * x = 0
        acc = np.zeros(q, dtype=np.int64)
        for _ in range(p):
            acc = add[acc, r]
        assert not acc.any()
        # multiplicative group cyclic of order q - 1
        assert any(self.multiplicative_order(x) == q - 1 for x in range(1, q))
        # distributivity x(y + z) = xy + xz
        left = mul[r[:, None, None], add[None, :, :]]
        right = add[mul[:, :, None], mul[:, None, :]]
        assert np.array_equal(left, right)
        assert len(self.squares()) == (q - 1) // 2 or p == 2

    def multiplicative_order(self, x: int) -> int:
        y, k = x, 1
        while y != 1:
            y = int(self.mul[y, x])
            k += 1
        return k


@lru_cache(maxsize=None)
def galois_field(q: int) -> FiniteField:
    p, r = prime_power(q)
    f = list(smallest_irreducible(p, r))
    elems = [[(x // p ** i) % p for i in range(r)] for x in range(q)]

    def index(c: list[int]) -> int:
        return sum(ci * p ** i for i, ci in enumerate(c))

    add = np.zeros((q, q), dtype=np.int64)
    mul = np.zeros((q, q), dtype=np.int64)
    for a in range(q):
        for b in range(q):
            ca, cb = elems[a], elems[b]
            add[a, b] = index([(x + y) % p for x, y in zip(ca, cb)])
            prod = [0] * (2 * r - 1)
            for i, x in enumerate(ca):
                for j, y in enumerate(cb):
                    prod[i + j] += x * y
            mul[a, b] = index(_poly_mod(prod, f, p) if r > 1 else [prod[0] % p])
    add.setflags(write=False)
    mul.setflags(write=False)
    return FiniteField(p, r, tuple(f), add, mul)
