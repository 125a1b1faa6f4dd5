"""Brute-force reference implementations for tests. Not used on the encryption path.

The dihedral group is realised concretely as the affine maps x -> s*x + t
on Z_m (s = +-1), with a = (x -> x + 1) and b = (x -> -x). The group table is
obtained by composing these maps, so :func:`naive_multiply` shares no index
formulas with :func:`halidon_crypt.dihedral.multiply`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .dihedral import GroupRingElement
from .errors import MixedParameters, Singular
from .modint import crt

Affine = tuple[int, int]  # (sign, translation)


def _compose(f: Affine, g: Affine, m: int) -> Affine:
    # (f o g)(x) = s_f * (s_g * x + t_g) + t_f
    return f[0] * g[0], (f[0] * g[1] + f[1]) % m


def dihedral_elements(m: int) -> list[Affine]:
    """Group elements in normal-form order: a^0..a^(m-1), then a^0 b..a^(m-1) b."""
    e: Affine = (1, 0)
    a: Affine = (1, 1 % m)
    b: Affine = (-1, 0)
    powers = [e]
    for _ in range(m - 1):
        powers.append(_compose(powers[-1], a, m))
    elements = powers + [_compose(p, b, m) for p in powers]

    a_m = e
    for _ in range(m):
        a_m = _compose(a_m, a, m)
    ab = _compose(a, b, m)
    assert a_m == e and _compose(b, b, m) == e and _compose(ab, ab, m) == e
    assert len(set(elements)) == 2 * m
    return elements


def group_table(m: int) -> list[list[int]]:
    """``table[g][h]`` is the normal-form index of the product g*h."""
    elements = dihedral_elements(m)
    index = {g: k for k, g in enumerate(elements)}
    return [[index[_compose(g, h, m)] for h in elements] for g in elements]


def naive_multiply(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    if (u.m, u.n) != (v.m, v.n):
        raise MixedParameters("operands belong to different group rings")
    table = group_table(u.m)
    out = [0] * (2 * u.m)
    for g, x in enumerate(u.coeffs):
        if x:
            for h, y in enumerate(v.coeffs):
                out[table[g][h]] += x * y
    return GroupRingElement(u.m, u.n, tuple(out))


@dataclass(frozen=True)
class DenseMatrix:
    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    @classmethod
    def identity(cls, order: int, n: int) -> DenseMatrix:
        return cls(n, tuple(tuple(int(i == j) for j in range(order)) for i in range(order)))

    def __matmul__(self, other: DenseMatrix) -> DenseMatrix:
        cols = list(zip(*other.rows))
        return DenseMatrix(
            self.n, tuple(tuple(sum(a * b for a, b in zip(r, c)) % self.n for c in cols) for r in self.rows)
        )


def gauss_jordan_inverse(rows: Sequence[Sequence[int]], p: int) -> list[list[int]]:
    """Invert a square matrix over the field Z_p."""
    k = len(rows)
    aug = [[x % p for x in row] + [int(i == j) for j in range(k)] for i, row in enumerate(rows)]
    for col in range(k):
        pivot = next((r for r in range(col, k) if aug[r][col]), None)
        if pivot is None:
            raise Singular(p)
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = pow(aug[col][col], p - 2, p)
        aug[col] = [x * inv % p for x in aug[col]]
        for r in range(k):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [(x - f * y) % p for x, y in zip(aug[r], aug[col])]
    return [row[k:] for row in aug]


def matrix_inverse_crt(a, p1: int, p2: int) -> DenseMatrix:
    """Inverse of ``a`` modulo ``p1 * p2`` via separate inversion mod each prime."""
    rows = a.rows if hasattr(a, "rows") else a
    inv1 = gauss_jordan_inverse(rows, p1)
    inv2 = gauss_jordan_inverse(rows, p2)
    k = len(rows)
    combined = tuple(tuple(crt((inv1[i][j], inv2[i][j]), (p1, p2)) for j in range(k)) for i in range(k))
    return DenseMatrix(p1 * p2, combined)
