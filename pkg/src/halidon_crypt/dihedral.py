"""The group ring Z_n[D_m] of the dihedral group of order 2m.

An element is stored in the normal form

    u = sum_i alpha_i a^(i-1) + sum_i alpha_(m+i) a^(i-1) b,    i = 1..m

as a tuple of 2m canonical residues: ``coeffs[k]`` is the coefficient of
``a^k`` and ``coeffs[m + k]`` the coefficient of ``a^k b`` (0-based inside
the code, 1-based in every message or file).

Units are detected and inverted spectrally: evaluating the coefficient
blocks at the powers of a primitive m-th root splits inversion into m
independent 2x2 problems, each solvable iff its determinant is a unit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import MixedParameters, NotAUnitElement
from .halidon import HalidonContext
from .modint import check_modulus, mod_inverse


def wrap(i: int, m: int) -> int:
    """Reduce ``i`` into ``1..m`` with 0 (and every multiple of m) mapped to m."""
    return (i - 1) % m + 1


@dataclass(frozen=True)
class GroupRingElement:
    m: int
    n: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        check_modulus(self.n)
        if self.m < 1:
            raise ValueError("m must be positive")
        coeffs = tuple(int(c) % self.n for c in self.coeffs)
        if len(coeffs) != 2 * self.m:
            raise ValueError(f"expected {2 * self.m} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], n: int) -> GroupRingElement:
        coeffs = tuple(coeffs)
        if len(coeffs) % 2 or not coeffs:
            raise ValueError("coefficient vector must have even positive length 2m")
        return cls(len(coeffs) // 2, n, coeffs)

    @property
    def rotation_part(self) -> tuple[int, ...]:
        """Coefficients of a^0 .. a^(m-1)."""
        return self.coeffs[: self.m]

    @property
    def reflection_part(self) -> tuple[int, ...]:
        """Coefficients of a^0 b .. a^(m-1) b."""
        return self.coeffs[self.m :]

    def _check_same_ring(self, other: GroupRingElement):
        if not isinstance(other, GroupRingElement):
            raise TypeError(f"expected GroupRingElement, got {type(other).__name__}")
        if (self.m, self.n) != (other.m, other.n):
            raise MixedParameters(
                f"cannot combine elements of Z_{self.n}[D_{self.m}] and Z_{other.n}[D_{other.m}]"
            )

    def __add__(self, other: GroupRingElement) -> GroupRingElement:
        self._check_same_ring(other)
        return GroupRingElement(self.m, self.n, tuple(x + y for x, y in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: GroupRingElement) -> GroupRingElement:
        self._check_same_ring(other)
        return GroupRingElement(self.m, self.n, tuple(x - y for x, y in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> GroupRingElement:
        return GroupRingElement(self.m, self.n, tuple(self.n - c for c in self.coeffs))

    def __mul__(self, other: GroupRingElement) -> GroupRingElement:
        return multiply(self, other)

    def __str__(self) -> str:
        terms = [f"{c}a^({k})" for k, c in enumerate(self.rotation_part) if c]
        terms += [f"{c}a^({k})b" for k, c in enumerate(self.reflection_part) if c]
        return " + ".join(terms) or "0"


def identity(m: int, n: int) -> GroupRingElement:
    coeffs = [0] * (2 * m)
    coeffs[0] = 1
    return GroupRingElement(m, n, tuple(coeffs))


def zero(m: int, n: int) -> GroupRingElement:
    return GroupRingElement(m, n, (0,) * (2 * m))


def group_element(rotation: int, reflection: int, m: int, n: int) -> GroupRingElement:
    """The basis element ``a^rotation b^reflection`` (reflection in {0, 1})."""
    coeffs = [0] * (2 * m)
    coeffs[(reflection % 2) * m + rotation % m] = 1
    return GroupRingElement(m, n, tuple(coeffs))


def multiply(u: GroupRingElement, v: GroupRingElement) -> GroupRingElement:
    """Product in Z_n[D_m], expanded with ``b a = a^(m-1) b``.

    a^i * a^j = a^(i+j),  a^i * a^j b = a^(i+j) b,
    a^i b * a^j = a^(i-j) b,  a^i b * a^j b = a^(i-j).
    """
    u._check_same_ring(v)
    m, n = u.m, u.n
    ur, uf = u.rotation_part, u.reflection_part
    vr, vf = v.rotation_part, v.reflection_part
    rot = [0] * m
    ref = [0] * m
    for i in range(m):
        x, y = ur[i], uf[i]
        if not (x or y):
            continue
        for j in range(m):
            plus, minus = (i + j) % m, (i - j) % m
            rot[plus] += x * vr[j]
            ref[plus] += x * vf[j]
            ref[minus] += y * vr[j]
            rot[minus] += y * vf[j]
    return GroupRingElement(m, n, tuple(rot + ref))


# --- matrix embedding -------------------------------------------------------


def circulant(first_row: Sequence[int]) -> list[list[int]]:
    """Circulant matrix whose rows are successive right rotations of ``first_row``."""
    k = len(first_row)
    return [[first_row[(j - i) % k] for j in range(k)] for i in range(k)]


@dataclass(frozen=True)
class BlockCirculantMatrix:
    """A 2m x 2m matrix over Z_n made of four m x m circulant blocks."""

    n: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.rows)

    def block(self, r: int, c: int) -> list[list[int]]:
        """The (r, c) block, r and c in {0, 1}."""
        m = self.order // 2
        return [list(row[c * m : (c + 1) * m]) for row in self.rows[r * m : (r + 1) * m]]

    def is_block_circulant(self) -> bool:
        for r in (0, 1):
            for c in (0, 1):
                blk = self.block(r, c)
                if blk != circulant(blk[0]):
                    return False
        return True

    def __matmul__(self, other: BlockCirculantMatrix) -> BlockCirculantMatrix:
        if self.n != other.n or self.order != other.order:
            raise MixedParameters("matrix shapes or moduli differ")
        cols = list(zip(*other.rows))
        rows = tuple(
            tuple(sum(a * b for a, b in zip(row, col)) % self.n for col in cols) for row in self.rows
        )
        return BlockCirculantMatrix(self.n, rows)


def to_matrix(u: GroupRingElement) -> BlockCirculantMatrix:
    """Embed ``u`` as a block-circulant matrix so that products are preserved.

    The diagonal blocks are circ(alpha_1, alpha_m, ..., alpha_2) and
    circ(alpha_1, ..., alpha_m). The top-right block is
    circ(alpha_(m+1), alpha_2m, ..., alpha_(m+2)) and the bottom-left
    circ(alpha_(m+1), ..., alpha_2m); with right-rotating circulants this is
    the orientation for which ``to_matrix(u * v) == to_matrix(u) @ to_matrix(v)``.
    """
    m = u.m
    rot, ref = u.rotation_part, u.reflection_part
    reversed_rot = [rot[-k % m] for k in range(m)]
    reversed_ref = [ref[-k % m] for k in range(m)]
    top_left, top_right = circulant(reversed_rot), circulant(reversed_ref)
    bottom_left, bottom_right = circulant(list(ref)), circulant(list(rot))
    rows = [tuple(top_left[i] + top_right[i]) for i in range(m)]
    rows += [tuple(bottom_left[i] + bottom_right[i]) for i in range(m)]
    return BlockCirculantMatrix(u.n, tuple(rows))


# --- spectral inversion -----------------------------------------------------


@dataclass(frozen=True)
class SpectralData:
    """The four spectra of an element and the per-frequency determinants.

    Tuples are 0-based: ``lam[i]`` is lambda_(i+1). The partner frequency of
    ``i`` is ``-i mod m`` (1-based: wrap(m - i + 2)).
    """

    m: int
    n: int
    lam: tuple[int, ...]
    gamma: tuple[int, ...]
    delta: tuple[int, ...]
    eta: tuple[int, ...]
    dets: tuple[int, ...]

    def partner(self, i: int) -> int:
        return -i % self.m


def _evaluate(seq: Sequence[int], ctx: HalidonContext) -> tuple[int, ...]:
    # out[i] = sum_r seq[r] * omega^(i*r mod m)
    m, n, w = ctx.m, ctx.n, ctx.omega_powers
    return tuple(sum(seq[r] * w[i * r % m] for r in range(m)) % n for i in range(m))


def _check_context(u: GroupRingElement, ctx: HalidonContext):
    if (u.m, u.n) != (ctx.m, ctx.n):
        raise MixedParameters(
            f"element of Z_{u.n}[D_{u.m}] used with context (n={ctx.n}, m={ctx.m})"
        )


def spectral_transform(u: GroupRingElement, ctx: HalidonContext) -> SpectralData:
    _check_context(u, ctx)
    m, n = ctx.m, ctx.n
    rot, ref = u.rotation_part, u.reflection_part
    lam = _evaluate([rot[-r % m] for r in range(m)], ctx)
    gamma = _evaluate(ref, ctx)
    delta = _evaluate([ref[-r % m] for r in range(m)], ctx)
    eta = _evaluate(rot, ctx)
    for i in range(m):
        if lam[-i % m] != eta[i] or gamma[-i % m] != delta[i]:
            raise AssertionError(f"spectral symmetry broken at frequency {i + 1}")
    dets = tuple((lam[i] * lam[-i % m] - gamma[i] * gamma[-i % m]) % n for i in range(m))
    return SpectralData(m, n, lam, gamma, delta, eta, dets)


def _first_non_unit(dets: Sequence[int], n: int) -> tuple[int, int] | None:
    for i, d in enumerate(dets):
        g = math.gcd(d, n)
        if g != 1:
            return i, g
    return None


def is_unit_element(u: GroupRingElement, ctx: HalidonContext) -> bool:
    return _first_non_unit(spectral_transform(u, ctx).dets, ctx.n) is None


def inverse_weights(spectra: SpectralData, form: str = "closed") -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Per-frequency weights ``(l, s)`` of the inverse.

    ``form="closed"`` uses only lambda and gamma:
        l_i = lambda_p / (lambda_i lambda_p - gamma_i gamma_p),
        s_i = -gamma_p / (same),   p = partner of i.
    ``form="direct"`` uses all four spectra:
        l_i = eta_i / (lambda_i eta_i - gamma_i delta_i),
        s_i = -delta_i / (same).
    """
    m, n = spectra.m, spectra.n
    lam, gamma, delta, eta = spectra.lam, spectra.gamma, spectra.delta, spectra.eta
    if form == "closed":
        dets = spectra.dets
        num_l = [lam[-i % m] for i in range(m)]
        num_s = [(n - gamma[-i % m]) % n for i in range(m)]
    elif form == "direct":
        dets = tuple((lam[i] * eta[i] - gamma[i] * delta[i]) % n for i in range(m))
        num_l = list(eta)
        num_s = [(n - d) % n for d in delta]
    else:
        raise ValueError(f"unknown form {form!r}")
    bad = _first_non_unit(dets, n)
    if bad is not None:
        i, g = bad
        raise NotAUnitElement(i + 1, dets[i], g)
    inv = [mod_inverse(d, n) for d in dets]
    l = tuple(x * y % n for x, y in zip(num_l, inv))
    s = tuple(x * y % n for x, y in zip(num_s, inv))
    return l, s


def invert(u: GroupRingElement, ctx: HalidonContext, verify: bool = False) -> GroupRingElement:
    """Two-sided inverse of ``u`` in Z_n[D_m].

    Raises :class:`NotAUnitElement` naming the first frequency whose
    determinant is not a unit. With ``verify=True`` both weight formulas are
    computed and compared, and ``u * u^-1 == u^-1 * u == 1`` is checked.
    """
    spectra = spectral_transform(u, ctx)
    l, s = inverse_weights(spectra, "closed")
    if verify and (l, s) != inverse_weights(spectra, "direct"):
        raise AssertionError("closed and direct inverse weights disagree")
    m_inv, n = ctx.m_inv, ctx.n
    beta_rot = [b * m_inv % n for b in _evaluate(l, ctx)]
    beta_ref = [b * m_inv % n for b in _evaluate(s, ctx)]
    result = GroupRingElement(ctx.m, n, tuple(beta_rot + beta_ref))
    if verify:
        one = identity(ctx.m, n)
        if multiply(u, result) != one or multiply(result, u) != one:
            raise AssertionError("computed inverse fails u * u^-1 == 1")
    return result
