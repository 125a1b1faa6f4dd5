"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class HalidonError(Exception):
    """Base class for all errors raised by halidon_crypt."""


class NotAUnit(HalidonError, ValueError):
    """A residue has no multiplicative inverse modulo n."""

    def __init__(self, value: int, modulus: int, gcd: int):
        self.value = value
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"{value} is not a unit mod {modulus} (gcd = {gcd})")


class IndexNotInvertible(HalidonError, ValueError):
    def __init__(self, m: int, modulus: int, gcd: int):
        self.m = m
        self.modulus = modulus
        self.gcd = gcd
        super().__init__(f"index m={m} is not invertible mod {modulus} (gcd = {gcd})")


class NotPrimitiveRoot(HalidonError, ValueError):
    """``omega`` fails one of the three checks of a primitive m-th root.

    ``check`` is one of ``"order"`` (omega^m != 1), ``"minimality"``
    (a smaller positive power is already 1) or ``"geometric-sum"``
    (some sum 1 + w^r + ... + w^(r(m-1)) is nonzero; ``r`` records which).
    """

    def __init__(self, omega: int, m: int, check: str, r: int | None = None):
        self.omega = omega
        self.m = m
        self.check = check
        self.r = r
        detail = f" at r={r}" if r is not None else ""
        super().__init__(f"{omega} is not a primitive {m}-th root: {check} check failed{detail}")


class MixedParameters(HalidonError, ValueError):
    """Operands live in different group rings (different m or n)."""


class NotAUnitElement(HalidonError, ArithmeticError):
    """A group-ring element is not invertible.

    ``frequency`` is the 1-based spectral index whose determinant is not a
    unit mod n. ``block_index`` is filled in by the block cipher layer.
    """

    def __init__(self, frequency: int, det: int, gcd: int, block_index: int | None = None):
        self.frequency = frequency
        self.det = det
        self.gcd = gcd
        self.block_index = block_index
        where = f"block {block_index}: " if block_index is not None else ""
        super().__init__(
            f"{where}element is not a unit: determinant {det} at frequency {frequency} "
            f"shares factor {gcd} with n"
        )


class SearchExhausted(HalidonError, RuntimeError):
    pass


class LengthMismatch(HalidonError, ValueError):
    pass


class CodeOutOfRange(HalidonError, ValueError):
    def __init__(self, position: int, value: int):
        self.position = position
        self.value = value
        super().__init__(f"value {value} at position {position} is not a valid symbol code")


class UnknownSymbol(HalidonError, ValueError):
    def __init__(self, position: int, character: str):
        self.position = position
        self.character = character
        super().__init__(f"character {character!r} at position {position} is not in the symbol table")


class DuplicateSymbol(HalidonError, ValueError):
    pass


class DuplicateCode(HalidonError, ValueError):
    pass


class Singular(HalidonError, ArithmeticError):
    """Gauss-Jordan elimination found no pivot modulo the prime ``p``."""

    def __init__(self, p: int):
        self.p = p
        super().__init__(f"matrix is singular mod {p}")


class InvalidKey(HalidonError, ValueError):
    """Key material violates an RSA or index invariant."""
