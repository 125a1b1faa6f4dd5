"""Text <-> symbol-code translation, padding and blocking."""

from __future__ import annotations

import string
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import CodeOutOfRange, DuplicateCode, DuplicateSymbol, UnknownSymbol

ALPHABET = string.digits[1:] + string.ascii_uppercase + " :.-+0,"
TABLE_SIZE = len(ALPHABET)  # 42
BLANK = " "


class SymbolTable:
    """A bijection between the 42 message symbols and the codes 1..42."""

    def __init__(self, mapping: Mapping[str, int]):
        if len(mapping) != TABLE_SIZE:
            raise ValueError(f"a symbol table needs exactly {TABLE_SIZE} entries, got {len(mapping)}")
        codes: dict[int, str] = {}
        for position, (symbol, code) in enumerate(mapping.items(), start=1):
            if not (isinstance(symbol, str) and len(symbol) == 1 and symbol in ALPHABET):
                raise ValueError(f"symbol {symbol!r} is not in the message alphabet")
            if not 1 <= code <= TABLE_SIZE:
                raise CodeOutOfRange(position, code)
            if code in codes:
                raise DuplicateCode(f"code {code} assigned to both {codes[code]!r} and {symbol!r}")
            codes[code] = symbol
        self._encode = dict(mapping)
        self._decode = codes

    @property
    def min_code(self) -> int:
        return 1

    @property
    def max_code(self) -> int:
        return TABLE_SIZE

    def code(self, symbol: str) -> int:
        return self._encode[symbol]

    def symbol(self, code: int) -> str:
        return self._decode[code]

    def __contains__(self, symbol: str) -> bool:
        return symbol in self._encode

    def __eq__(self, other) -> bool:
        return isinstance(other, SymbolTable) and self._encode == other._encode

    def items(self):
        return self._encode.items()

    def codes_in_alphabet_order(self) -> list[int]:
        """Codes listed in default-symbol order; the key-file representation."""
        return [self._encode[s] for s in ALPHABET]

    @classmethod
    def from_codes(cls, codes: Sequence[int]) -> SymbolTable:
        """Inverse of :meth:`codes_in_alphabet_order`."""
        if len(codes) != TABLE_SIZE:
            raise ValueError(f"expected {TABLE_SIZE} codes, got {len(codes)}")
        return cls(dict(zip(ALPHABET, codes)))

    def __repr__(self) -> str:
        return f"SymbolTable({self.codes_in_alphabet_order()})"


DEFAULT_TABLE = SymbolTable({s: k for k, s in enumerate(ALPHABET, start=1)})


def custom_table(assignment: Iterable[tuple[str, int]]) -> SymbolTable:
    pairs = list(assignment)
    seen: set[str] = set()
    for symbol, _ in pairs:
        if symbol in seen:
            raise DuplicateSymbol(f"symbol {symbol!r} assigned twice")
        seen.add(symbol)
    if len(pairs) != TABLE_SIZE:
        raise ValueError(f"a symbol table needs exactly {TABLE_SIZE} pairs, got {len(pairs)}")
    return SymbolTable(dict(pairs))


@dataclass(frozen=True)
class CipherBlock:
    values: tuple[int, ...]
    block_index: int = 1  # 1-based

    def __len__(self) -> int:
        return len(self.values)


def encode(text: str, table: SymbolTable = DEFAULT_TABLE, m: int = 50) -> list[list[int]]:
    """Translate ``text`` into blocks of exactly 2m codes.

    Lowercase letters are folded to uppercase. The last block is padded with
    the blank code; an empty message yields one all-blank block.
    """
    size = 2 * m
    codes = []
    for position, ch in enumerate(text.upper(), start=1):
        if ch not in table:
            raise UnknownSymbol(position, ch)
        codes.append(table.code(ch))
    blocks = [codes[k : k + size] for k in range(0, len(codes), size)] or [[]]
    blank = table.code(BLANK)
    blocks[-1] += [blank] * (size - len(blocks[-1]))
    return blocks


def decode(codes: Sequence[int], table: SymbolTable = DEFAULT_TABLE) -> str:
    """Inverse of :func:`encode` for one block; trailing blanks are kept."""
    out = []
    for position, c in enumerate(codes, start=1):
        if not table.min_code <= c <= table.max_code:
            raise CodeOutOfRange(position, c)
        out.append(table.symbol(c))
    return "".join(out)
