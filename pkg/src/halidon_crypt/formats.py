"""Plain-text key and cipher file formats.

Key files are ``key = value`` lines with decimal values. A public file
carries ``n``, ``e`` and ``m``; a private file adds ``p1``, ``p2``, ``phi``
and ``d``. Either may carry ``table = c1,c2,...,c42``: the code of each
default symbol, in default-symbol order.

Cipher files start with ``n = ...``, ``m = ...`` and ``blocks = ...``
headers, followed by one block per line of 2m space-separated values.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Sequence

from .codec import DEFAULT_TABLE, CipherBlock, SymbolTable
from .crypto import PublicKey, RsaKeyPair
from .errors import HalidonError

PUBLIC_FIELDS = ("n", "e", "m")
PRIVATE_FIELDS = PUBLIC_FIELDS + ("p1", "p2", "phi", "d")


class FormatError(HalidonError, ValueError):
    pass


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str, text: str):
    if path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def parse_pairs(text: str) -> dict[str, str]:
    pairs: dict[str, str] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, sep, value = line.partition("=")
        if not sep:
            raise FormatError(f"line {lineno}: expected 'key = value', got {raw!r}")
        key, value = key.strip(), value.strip()
        if key in pairs:
            raise FormatError(f"line {lineno}: duplicate key {key!r}")
        pairs[key] = value
    return pairs


def _decimal(key: str, value: str) -> int:
    if not value.isdigit():
        raise FormatError(f"{key} must be a non-negative decimal integer, got {value!r}")
    return int(value)


def _table(value: str) -> SymbolTable:
    try:
        return SymbolTable.from_codes([int(v) for v in value.split(",")])
    except ValueError as exc:
        raise FormatError(f"bad table: {exc}") from exc


@dataclass(frozen=True)
class KeyFile:
    public: PublicKey
    private: RsaKeyPair | None = None
    table: SymbolTable = DEFAULT_TABLE


def dumps_key(keys: RsaKeyPair | PublicKey, table: SymbolTable | None = None, private: bool = False) -> str:
    pub = keys.public if isinstance(keys, RsaKeyPair) else keys
    lines = [f"n = {pub.n}", f"e = {pub.e}", f"m = {pub.m}"]
    if private:
        if not isinstance(keys, RsaKeyPair):
            raise TypeError("private key file needs an RsaKeyPair")
        lines += [f"p1 = {keys.p1}", f"p2 = {keys.p2}", f"phi = {keys.phi}", f"d = {keys.d}"]
    if table is not None and table != DEFAULT_TABLE:
        lines.append("table = " + ",".join(map(str, table.codes_in_alphabet_order())))
    return "\n".join(lines) + "\n"


def loads_key(text: str) -> KeyFile:
    """Parse and re-validate a public or private key file."""
    pairs = parse_pairs(text)
    table = _table(pairs.pop("table")) if "table" in pairs else DEFAULT_TABLE
    keys = set(pairs)
    if keys == set(PUBLIC_FIELDS):
        kind = "public"
    elif keys == set(PRIVATE_FIELDS):
        kind = "private"
    else:
        unknown = keys - set(PRIVATE_FIELDS)
        if unknown:
            raise FormatError(f"unknown keys: {', '.join(sorted(unknown))}")
        missing = set(PUBLIC_FIELDS) - keys or set(PRIVATE_FIELDS) - keys
        raise FormatError(f"missing keys: {', '.join(sorted(missing))}")
    values = {k: _decimal(k, v) for k, v in pairs.items()}
    pub = PublicKey(values["n"], values["e"], values["m"])
    if pub.n < 2 or pub.m < 2 or pub.e < 1 or math.gcd(pub.m, pub.n) != 1:
        raise FormatError(f"inconsistent public key {pub}")
    if kind == "public":
        return KeyFile(pub, None, table)
    pair = RsaKeyPair(values["p1"], values["p2"], pub.e, values["d"], pub.m)
    if pair.n != pub.n or pair.phi != values["phi"]:
        raise FormatError("n or phi does not match p1, p2")
    return KeyFile(pub, pair, table)


def read_key(path: str) -> KeyFile:
    return loads_key(_read_text(path))


def write_key(path: str, keys, table: SymbolTable | None = None, private: bool = False):
    _write_text(path, dumps_key(keys, table, private))


def dumps_cipher(blocks: Sequence[CipherBlock], n: int, m: int) -> str:
    lines = [f"n = {n}", f"m = {m}", f"blocks = {len(blocks)}"]
    lines += [" ".join(map(str, b.values)) for b in blocks]
    return "\n".join(lines) + "\n"


def loads_cipher(text: str) -> tuple[int, int, list[CipherBlock]]:
    """Return ``(n, m, blocks)``; every line must hold exactly 2m values below n."""
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if len(lines) < 3:
        raise FormatError("cipher file needs n, m and blocks headers")
    header = parse_pairs("\n".join(lines[:3]))
    if set(header) != {"n", "m", "blocks"}:
        raise FormatError(f"cipher headers must be n, m, blocks; got {sorted(header)}")
    n, m, count = (_decimal(k, header[k]) for k in ("n", "m", "blocks"))
    body = lines[3:]
    if len(body) != count:
        raise FormatError(f"header says {count} blocks, found {len(body)}")
    blocks = []
    for k, line in enumerate(body):
        values = tuple(_decimal(f"block {k + 1}", v) for v in line.split())
        if len(values) != 2 * m:
            raise FormatError(f"block {k + 1} has {len(values)} values, expected {2 * m}")
        if any(v >= n for v in values):
            raise FormatError(f"block {k + 1} has a value >= n")
        blocks.append(CipherBlock(values, k + 1))
    return n, m, blocks


def read_cipher(path: str):
    return loads_cipher(_read_text(path))


def write_cipher(path: str, blocks: Sequence[CipherBlock], n: int, m: int):
    _write_text(path, dumps_cipher(blocks, n, m))


def read_message(path: str) -> str:
    return _read_text(path).rstrip("\r\n")


def write_message(path: str, text: str):
    _write_text(path, text + "\n")
