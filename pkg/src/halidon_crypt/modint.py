"""Exact modular arithmetic on arbitrary-precision integers.

Everything here works on plain Python ints, so no result depends on word
size. Values returned by the functions in this module are always canonical,
i.e. reduced into ``[0, n)``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAUnit


def check_modulus(n: int) -> int:
    if not isinstance(n, int) or n < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {n!r}")
    return n


def mod_pow(base: int, exponent: int, n: int) -> int:
    """Return ``base**exponent mod n`` using square-and-multiply.

    ``0**0`` is taken to be 1 (empty product).
    """
    check_modulus(n)
    if exponent < 0:
        raise ValueError("exponent must be non-negative")
    # builtin three-argument pow is square-and-multiply on bignums
    return pow(base % n, exponent, n)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Extended Euclid: return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b)``."""
    if a == 0 and b == 0:
        raise ValueError("ext_gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n``; raises :class:`NotAUnit` if none exists."""
    check_modulus(n)
    a %= n
    g, x, _ = ext_gcd(a, n)
    if g != 1:
        raise NotAUnit(a, n, g)
    return x % n


def is_unit(a: int, n: int) -> bool:
    return math.gcd(a % n, n) == 1


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    """Combine ``x = r_i mod m_i`` for pairwise coprime moduli into ``x mod prod(m_i)``."""
    if len(residues) != len(moduli):
        raise ValueError("residues and moduli differ in length")
    x, big = 0, 1
    for r, mi in zip(residues, moduli):
        # x + big * k = r (mod mi)
        k = ((r - x) * mod_inverse(big, mi)) % mi
        x += big * k
        big *= mi
    return x % big


def prime_factors(k: int) -> list[int]:
    """Distinct prime factors of ``k`` by trial division (only for small ``k``)."""
    factors = []
    d = 2
    while d * d <= k:
        if k % d == 0:
            factors.append(d)
            while k % d == 0:
                k //= d
        d += 1 if d == 2 else 2
    if k > 1:
        factors.append(k)
    return factors


def totient(k: int) -> int:
    result = k
    for p in prime_factors(k):
        result -= result // p
    return result


_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int, rounds: int = 40, rng: random.Random | None = None) -> bool:
    """Miller-Rabin test with ``rounds`` random bases.

    The base sequence comes from ``rng`` (or a generator seeded with ``n``),
    so the answer for a given ``n`` is reproducible.
    """
    if n < 2:
        return False
    for p in _SMALL_PRIMES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    rng = rng or random.Random(n)
    for _ in range(rounds):
        a = rng.randrange(2, n - 1)
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class Residue:
    """An element of Z_n held in canonical form.

    A convenience wrapper for interactive use; the algebra modules work on
    plain ints for speed.
    """

    value: int
    n: int

    def __post_init__(self):
        check_modulus(self.n)
        object.__setattr__(self, "value", self.value % self.n)

    def _coerce(self, other) -> int:
        if isinstance(other, Residue):
            if other.n != self.n:
                raise ValueError(f"moduli differ: {self.n} vs {other.n}")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value + o, self.n)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value - o, self.n)

    def __rsub__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(o - self.value, self.n)

    def __mul__(self, other):
        o = self._coerce(other)
        return NotImplemented if o is NotImplemented else Residue(self.value * o, self.n)

    __rmul__ = __mul__

    def __neg__(self):
        return Residue(self.n - self.value, self.n)

    def __pow__(self, exponent: int):
        if exponent < 0:
            return Residue(mod_pow(self.inverse().value, -exponent, self.n), self.n)
        return Residue(mod_pow(self.value, exponent, self.n), self.n)

    def inverse(self) -> Residue:
        return Residue(mod_inverse(self.value, self.n), self.n)

    def is_unit(self) -> bool:
        return is_unit(self.value, self.n)

    def __int__(self) -> int:
        return self.value

    def __repr__(self) -> str:
        return f"Residue({self.value} mod {self.n})"


def canonical(values: Iterable[int], n: int) -> tuple[int, ...]:
    return tuple(v % n for v in values)
