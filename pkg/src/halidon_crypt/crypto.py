"""Two-stage protocol: RSA transport of the secret root, then group-ring block encryption.

Stage 1 is textbook RSA with primes ``p_i = m * t_i + 1`` (``gcd(t1, t2) = 1``)
so that Z_n has index exactly m. Bob picks a primitive m-th root omega,
sends ``c = omega^e mod n``, and Alice recovers ``omega = c^d mod n``.

Stage 2 maps a block of 2m symbol codes to the coefficients of its inverse
in Z_n[D_m]. Inversion is an involution, so the same map decrypts.
"""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from typing import Sequence

from .codec import DEFAULT_TABLE, CipherBlock, SymbolTable, decode, encode
from .dihedral import GroupRingElement, invert
from .errors import (
    CodeOutOfRange,
    InvalidKey,
    LengthMismatch,
    NotAUnit,
    NotAUnitElement,
    NotPrimitiveRoot,
    SearchExhausted,
)
from .halidon import HalidonContext, primitive_root_failure
from .modint import is_probable_prime, mod_inverse, mod_pow

log = logging.getLogger(__name__)

DEFAULT_EXPONENT = 65537
MR_ROUNDS = 40


def choose_exponent(phi: int, start: int = DEFAULT_EXPONENT) -> int:
    """``start`` if coprime to ``phi``, else the next odd integer that is."""
    e = start
    while math.gcd(e, phi) != 1:
        e += 2 if e % 2 else 1
    return e


@dataclass(frozen=True)
class PublicKey:
    n: int
    e: int
    m: int


@dataclass(frozen=True)
class RsaKeyPair:
    """Alice's key material. Construction validates every invariant."""

    p1: int
    p2: int
    e: int
    d: int
    m: int

    def __post_init__(self):
        p1, p2, m = self.p1, self.p2, self.m
        if m < 2:
            raise InvalidKey(f"index m must be >= 2, got {m}")
        if p1 == p2:
            raise InvalidKey("p1 and p2 must be distinct")
        for p in (p1, p2):
            if not is_probable_prime(p, MR_ROUNDS):
                raise InvalidKey(f"{p} is not prime")
            if (p - 1) % m:
                raise InvalidKey(f"{p} is not congruent to 1 mod {m}")
        if math.gcd(self.t1, self.t2) != 1:
            raise InvalidKey(f"t1={self.t1} and t2={self.t2} are not coprime")
        if math.gcd(self.e, self.phi) != 1:
            raise InvalidKey(f"e={self.e} is not coprime to phi={self.phi}")
        if self.e * self.d % self.phi != 1:
            raise InvalidKey("e * d is not 1 mod phi")

    @classmethod
    def from_primes(cls, p1: int, p2: int, m: int, e: int | None = None) -> RsaKeyPair:
        phi = (p1 - 1) * (p2 - 1)
        if e is None:
            e = choose_exponent(phi)
        try:
            d = mod_inverse(e, phi)
        except NotAUnit as exc:
            raise InvalidKey(f"e={e} is not invertible mod phi={phi}") from exc
        return cls(p1, p2, e, d, m)

    @property
    def n(self) -> int:
        return self.p1 * self.p2

    @property
    def phi(self) -> int:
        return (self.p1 - 1) * (self.p2 - 1)

    @property
    def t1(self) -> int:
        return (self.p1 - 1) // self.m

    @property
    def t2(self) -> int:
        return (self.p2 - 1) // self.m

    @property
    def public(self) -> PublicKey:
        return PublicKey(self.n, self.e, self.m)


def keygen(m: int, bit_size: int, seed: int | None = None, max_attempts: int = 100_000) -> RsaKeyPair:
    """Generate a key pair with primes ``p = m*t + 1`` of at most ``bit_size`` bits.

    ``t`` is drawn uniformly from ``[1, (2**bit_size - 2) // m]``; the output
    is a pure function of ``seed``.
    """
    if m < 2:
        raise ValueError(f"index m must be >= 2, got {m}")
    t_max = (2**bit_size - 2) // m
    if t_max < 2:
        raise SearchExhausted(f"no room for two primes 1 mod {m} below 2^{bit_size}")
    rng = random.Random(seed)

    def draw_prime() -> int:
        for _ in range(max_attempts):
            p = m * rng.randint(1, t_max) + 1
            if is_probable_prime(p, MR_ROUNDS):
                return p
        raise SearchExhausted(f"no prime 1 mod {m} below 2^{bit_size} after {max_attempts} draws")

    p1 = draw_prime()
    for _ in range(max_attempts):
        p2 = draw_prime()
        if p2 != p1 and math.gcd((p1 - 1) // m, (p2 - 1) // m) == 1:
            lo, hi = sorted((p1, p2))
            return RsaKeyPair.from_primes(lo, hi, m)
    raise SearchExhausted(f"no second prime with coprime cofactor after {max_attempts} draws")


@dataclass(frozen=True)
class WrappedRoot:
    c: int
    n: int

    def __post_init__(self):
        if not 0 <= self.c < self.n:
            raise ValueError(f"wrapped value {self.c} is outside [0, {self.n})")


def wrap_root(omega: int, pub: PublicKey, validate: bool = False) -> WrappedRoot:
    """Bob's step: ``c = omega^e mod n``."""
    if validate:
        failure = primitive_root_failure(omega, pub.m, pub.n)
        if failure is not None:
            raise NotPrimitiveRoot(omega, pub.m, *failure)
    return WrappedRoot(mod_pow(omega, pub.e, pub.n), pub.n)


def unwrap_root(c: WrappedRoot | int, keys: RsaKeyPair, validate: bool = False) -> int:
    """Alice's step: ``omega = c^d mod n``.

    With ``validate`` the result must be a primitive m-th root, which catches
    a tampered ``c`` or mismatched keys.
    """
    value = c.c if isinstance(c, WrappedRoot) else c
    omega = mod_pow(value, keys.d, keys.n)
    if validate:
        failure = primitive_root_failure(omega, keys.m, keys.n)
        if failure is not None:
            raise NotPrimitiveRoot(omega, keys.m, *failure)
    return omega


def _check_length(values: Sequence[int], ctx: HalidonContext):
    if len(values) != 2 * ctx.m:
        raise LengthMismatch(f"block has {len(values)} values, expected 2m = {2 * ctx.m}")


def _apply(values: Sequence[int], ctx: HalidonContext, block_index: int) -> tuple[int, ...]:
    u = GroupRingElement(ctx.m, ctx.n, tuple(values))
    try:
        return invert(u, ctx).coeffs
    except NotAUnitElement as exc:
        exc.block_index = block_index
        exc.args = (f"block {block_index}: {exc.args[0]}",)
        raise


def encrypt_block(codes: Sequence[int], ctx: HalidonContext, block_index: int = 1) -> CipherBlock:
    """Encrypt 2m symbol codes as the coefficients of the inverse element.

    Raises :class:`NotAUnitElement` (carrying ``block_index``) when the block
    has no inverse; no re-padding is attempted.
    """
    _check_length(codes, ctx)
    values = _apply(codes, ctx, block_index)
    if values == tuple(codes):
        log.info("block %d is a fixed point of inversion", block_index)
    return CipherBlock(values, block_index)


def decrypt_block(
    block: CipherBlock | Sequence[int],
    ctx: HalidonContext,
    table: SymbolTable = DEFAULT_TABLE,
) -> list[int]:
    """Invert a cipher block and check every coefficient is a symbol code.

    The inverse of a unit is unique, so every primitive m-th root gives the
    same result; a :class:`CodeOutOfRange` here means a corrupted block.
    """
    if not isinstance(block, CipherBlock):
        block = CipherBlock(tuple(block))
    _check_length(block.values, ctx)
    for position, v in enumerate(block.values, start=1):
        if not 0 <= v < ctx.n:
            raise CodeOutOfRange(position, v)
    codes = list(_apply(block.values, ctx, block.block_index))
    for position, c in enumerate(codes, start=1):
        if not table.min_code <= c <= table.max_code:
            raise CodeOutOfRange(position, c)
    return codes


def encrypt_message(text: str, ctx: HalidonContext, table: SymbolTable = DEFAULT_TABLE) -> list[CipherBlock]:
    blocks = encode(text, table, ctx.m)
    return [encrypt_block(codes, ctx, k) for k, codes in enumerate(blocks, start=1)]


def decrypt_message(blocks: Sequence[CipherBlock], ctx: HalidonContext, table: SymbolTable = DEFAULT_TABLE) -> str:
    """Decrypt blocks in order; the padded message is returned untrimmed."""
    return "".join(decode(decrypt_block(b, ctx, table), table) for b in blocks)
