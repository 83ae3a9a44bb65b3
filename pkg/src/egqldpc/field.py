"""Arithmetic in GF(p^s).

Elements are integer codes: the coefficient vector (c_0, ..., c_{s-1}) of a
polynomial in x is stored as sum(c_i * p**i).  Codes 0 and 1 are the additive
and multiplicative identities.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

import numpy as np

from .errors import DegreeOutOfRange, ElementOutOfRange, NotPrime, ZeroInverse

TABLE_CAP = 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_power(q: int) -> tuple[int, int]:
    """Split q into (p, s) with q = p**s, raising NotPrime if q is not a prime power."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = next(d for d in range(2, q + 1) if q % d == 0)
    s, r = 0, q
    while r % p == 0:
        r //= p
        s += 1
    if r != 1:
        raise NotPrime(f"{q} is not a prime power")
    return p, s


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    # den is monic, coefficients are low-degree first
    num = list(num)
    d = len(den) - 1
    for i in range(len(num) - 1, d - 1, -1):
        c = num[i] % p
        if c:
            for j in range(d + 1):
                num[i - d + j] = (num[i - d + j] - c * den[j]) % p
    return [c % p for c in num[:d]] + [0] * max(0, d - len(num))


def _is_irreducible(monic: list[int], p: int) -> bool:
    """Exhaustive divisor test: no monic factor of degree 1..s//2."""
    s = len(monic) - 1
    for deg in range(1, s // 2 + 1):
        for low in product(range(p), repeat=deg):
            if not any(_poly_mod(monic, list(low) + [1], p)):
                return False
    return True


def _decode(code: int, p: int, s: int) -> list[int]:
    out = []
    for _ in range(s):
        code, c = divmod(code, p)
        out.append(c)
    return out


def _encode(coeffs: list[int], p: int) -> int:
    return sum(c * p**i for i, c in enumerate(coeffs))


@dataclass(frozen=True)
class FieldSpec:
    """The finite field GF(p^s).

    ``modulus`` holds the s+1 coefficients (low degree first) of the monic
    irreducible polynomial used for reduction; for prime fields it is
    ``(0, 1)`` and is never consulted.
    """

    p: int
    s: int
    modulus: tuple[int, ...] = field(compare=True)

    @property
    def q(self) -> int:
        return self.p**self.s

    def __repr__(self) -> str:
        return f"GF({self.q})"

    def check(self, a: int) -> int:
        if not isinstance(a, (int, np.integer)) or not 0 <= a < self.q:
            raise ElementOutOfRange(f"{a!r} is not an element of GF({self.q})")
        return int(a)

    def add(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        if self.s == 1:
            return (a + b) % self.p
        p = self.p
        return _encode([(x + y) % p for x, y in zip(_decode(a, p, self.s), _decode(b, p, self.s))], p)

    def neg(self, a: int) -> int:
        a = self.check(a)
        if self.s == 1:
            return (-a) % self.p
        p = self.p
        return _encode([(-x) % p for x in _decode(a, p, self.s)], p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        a, b = self.check(a), self.check(b)
        p, s = self.p, self.s
        if s == 1:
            return (a * b) % p
        x, y = _decode(a, p, s), _decode(b, p, s)
        prod = [0] * (2 * s - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        return _encode(_poly_mod(prod, list(self.modulus), p), p)

    def inv(self, a: int) -> int:
        a = self.check(a)
        if a == 0:
            raise ZeroInverse("0 has no multiplicative inverse")
        # a^(q-2) = a^-1 in the multiplicative group of order q-1
        result, base, e = 1, a, self.q - 2
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    @cached_property
    def add_table(self) -> np.ndarray:
        """q x q addition table; only built for q <= TABLE_CAP."""
        return self._table(self.add)

    @cached_property
    def mul_table(self) -> np.ndarray:
        return self._table(self.mul)

    @cached_property
    def inv_table(self) -> np.ndarray:
        out = np.zeros(self.q, dtype=np.int64)
        for a in range(1, self.q):
            out[a] = self.inv(a)
        return out

    def _table(self, op) -> np.ndarray:
        q = self.q
        if q > TABLE_CAP:
            raise ElementOutOfRange(f"lookup tables are limited to q <= {TABLE_CAP}")
        t = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(a, q):
                t[a, b] = t[b, a] = op(a, b)
        t.setflags(write=False)
        return t


def make_field(p: int, s: int = 1) -> FieldSpec:
    """Build GF(p^s) using the irreducible modulus with the smallest encoding."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if s < 1:
        raise DegreeOutOfRange(f"extension degree must be >= 1, got {s}")
    if s == 1:
        return FieldSpec(p, 1, (0, 1))
    for code in range(p**s):
        monic = _decode(code, p, s) + [1]
        if _is_irreducible(monic, p):
            return FieldSpec(p, s, tuple(monic))
    raise AssertionError("unreachable: an irreducible polynomial of every degree exists")


def field_of_order(q: int) -> FieldSpec:
    return make_field(*prime_power(q))
