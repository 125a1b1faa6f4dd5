"""Primitive m-th roots of unity in Z_n and the halidon context built on them.

In a ring with zero divisors, multiplicative order m is not enough: every
geometric sum ``1 + w^r + w^(2r) + ... + w^((m-1)r)`` with ``0 < r < m``
must vanish as well. :func:`is_primitive_root` checks that condition by
literal summation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import product

from .errors import IndexNotInvertible, NotPrimitiveRoot
from .modint import check_modulus, crt, mod_inverse, prime_factors


def _powers(omega: int, m: int, n: int) -> list[int]:
    powers = [1 % n] * m
    for k in range(1, m):
        powers[k] = powers[k - 1] * omega % n
    return powers


def primitive_root_failure(omega: int, m: int, n: int) -> tuple[str, int | None] | None:
    """Return ``None`` if ``omega`` is a primitive m-th root mod n.

    Otherwise return ``(check, r)`` naming the first failing condition:
    ``"order"``, ``"minimality"`` (``r`` is the smaller exponent) or
    ``"geometric-sum"`` (``r`` is the offending frequency).
    """
    if m < 1:
        raise ValueError("index m must be positive")
    omega %= n
    if pow(omega, m, n) != 1 % n:
        return ("order", None)
    powers = _powers(omega, m, n)
    for j in range(1, m):
        if powers[j] == 1:
            return ("minimality", j)
    # omega^m = 1, so (omega^r)^k = omega^(r*k mod m)
    for r in range(1, m):
        total = 0
        for k in range(m):
            total += powers[r * k % m]
        if total % n:
            return ("geometric-sum", r)
    return None


def is_primitive_root(omega: int, m: int, n: int) -> bool:
    return primitive_root_failure(omega, m, n) is None


def max_index(p1: int, p2: int) -> int:
    """Largest index m for which Z_{p1*p2} is a halidon ring."""
    return math.gcd(p1 - 1, p2 - 1)


def _order_m_elements(p: int, m: int) -> list[int]:
    """All elements of multiplicative order exactly ``m`` in Z_p (``p`` prime)."""
    if (p - 1) % m:
        return []
    cofactor = (p - 1) // m
    qs = prime_factors(m)
    for x in range(2 if p > 2 else 1, p):
        y = pow(x, cofactor, p)
        if all(pow(y, m // q, p) != 1 for q in qs):
            break
    else:
        # only reachable for p == 2, m == 1
        y = 1
    return sorted({pow(y, k, p) for k in range(m) if math.gcd(k, m) == 1})


def find_primitive_roots(
    n: int,
    m: int,
    limit: int | None = None,
    factors: tuple[int, int] | None = None,
) -> list[int]:
    """List the primitive m-th roots of unity in Z_n in ascending order.

    Without ``factors`` every residue in ``[1, n)`` is tested. With
    ``factors=(p1, p2)`` the candidates are built by Chinese remaindering
    elements of order m modulo each prime; each candidate still has to pass
    :func:`is_primitive_root`. ``limit`` truncates to the smallest roots.
    The index must be invertible: ``gcd(m, n) > 1`` raises
    :class:`IndexNotInvertible`.
    """
    check_modulus(n)
    if m < 1:
        raise ValueError("index m must be positive")
    g = math.gcd(m, n)
    if g != 1:
        raise IndexNotInvertible(m, n, g)
    if factors is None:
        roots = []
        for omega in range(1, n):
            if is_primitive_root(omega, m, n):
                roots.append(omega)
                if limit is not None and len(roots) >= limit:
                    break
        return roots

    p1, p2 = factors
    if p1 * p2 != n or p1 == p2:
        raise ValueError(f"factors {factors} are not two distinct primes with product {n}")
    candidates = (
        crt((x1, x2), (p1, p2))
        for x1, x2 in product(_order_m_elements(p1, m), _order_m_elements(p2, m))
    )
    roots = sorted(w for w in candidates if is_primitive_root(w, m, n))
    return roots if limit is None else roots[:limit]


@dataclass(frozen=True)
class HalidonContext:
    """Z_n with index ``m``, a validated primitive root ``omega`` and its power table.

    Construction fails with :class:`IndexNotInvertible` or
    :class:`NotPrimitiveRoot`, so every live context satisfies the halidon
    conditions.
    """

    n: int
    m: int
    omega: int
    m_inv: int = field(init=False)
    omega_powers: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        check_modulus(self.n)
        if self.m < 1:
            raise ValueError("index m must be positive")
        g = math.gcd(self.m, self.n)
        if g != 1:
            raise IndexNotInvertible(self.m, self.n, g)
        object.__setattr__(self, "omega", self.omega % self.n)
        failure = primitive_root_failure(self.omega, self.m, self.n)
        if failure is not None:
            raise NotPrimitiveRoot(self.omega, self.m, *failure)
        object.__setattr__(self, "m_inv", mod_inverse(self.m, self.n))
        object.__setattr__(self, "omega_powers", tuple(_powers(self.omega, self.m, self.n)))

    def power(self, k: int) -> int:
        """``omega**k`` for any integer ``k``, read from the table."""
        return self.omega_powers[k % self.m]


def make_context(n: int, m: int, omega: int) -> HalidonContext:
    return HalidonContext(n, m, omega)
