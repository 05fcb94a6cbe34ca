"""Bit matrices over Z_2 (binary patterns)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

BitRows = Tuple[Tuple[int, ...], ...]


@dataclass(frozen=True)
class BinaryPattern:
    """An n×n matrix over Z_2; row i is ``bits[i]``."""

    n: int
    bits: BitRows

    def __post_init__(self):
        if len(self.bits) != self.n or any(len(r) != self.n for r in self.bits):
            raise ValueError(f"pattern is not {self.n}x{self.n}")
        if any(b not in (0, 1) for r in self.bits for b in r):
            raise ValueError("pattern entries must be 0 or 1")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "BinaryPattern":
        bits = tuple(tuple(int(b) for b in r) for r in rows)
        return cls(len(bits), bits)

    @classmethod
    def from_strings(cls, rows: Iterable[str]) -> "BinaryPattern":
        return cls.from_rows([[int(c) for c in r.replace(" ", "")] for r in rows])

    def transpose(self) -> "BinaryPattern":
        return BinaryPattern(self.n, tuple(zip(*self.bits)))

    def row_weights(self) -> Tuple[int, ...]:
        return tuple(sum(r) for r in self.bits)

    def column_weights(self) -> Tuple[int, ...]:
        return tuple(sum(c) for c in zip(*self.bits))

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> "BinaryPattern":
        """Pattern P with ``P[row_perm[i]][col_perm[j]] = self[i][j]``."""
        out = [[0] * self.n for _ in range(self.n)]
        for i, row in enumerate(self.bits):
            for j, b in enumerate(row):
                out[row_perm[i]][col_perm[j]] = b
        return BinaryPattern.from_rows(out)

    def to_strings(self) -> Tuple[str, ...]:
        return tuple("".join(str(b) for b in r) for r in self.bits)
