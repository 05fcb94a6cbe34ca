"""
Generators of O_n(Z[1/2]) and L_n and their action as row operations.

A word stores generators in application order: item 0 acts first on a
column vector, so ``evaluate_word([G1, ..., Gq]) = Gq ... G2 G1``.
Every generator is symmetric and self-inverse, which makes the inverse of
a word its reversal and right multiplication a transposed row operation.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Sequence, Tuple

from ..errors import InvalidGeneratorError, ShapeError
from ..exact.matrix import (
    DyadicVector,
    ScaledDyadicMatrix,
    identity,
    normalize,
    normalize_vector,
    transpose,
)

logger = logging.getLogger(__name__)


class Ring(str, Enum):
    INTEGRAL = "integral"   # O_n(Z[1/2]), generated by M, X, K
    SCALED = "scaled"       # L_n, adds I⊗H when n is even


class GeneratorKind(str, Enum):
    NEG_ONE = "M"
    TWO_LEVEL_X = "X"
    FOUR_LEVEL_K = "K"
    IH = "IH"


_ARITY = {
    GeneratorKind.NEG_ONE: 1,
    GeneratorKind.TWO_LEVEL_X: 2,
    GeneratorKind.FOUR_LEVEL_K: 4,
    GeneratorKind.IH: 0,
}

# 2*K restricted to its four levels
_K_ROWS = ((1, 1, 1, 1), (1, -1, 1, -1), (1, 1, -1, -1), (1, -1, -1, 1))


@dataclass(frozen=True)
class Generator:
    kind: GeneratorKind
    levels: Tuple[int, ...] = ()

    def __post_init__(self):
        if len(self.levels) != _ARITY[self.kind]:
            raise InvalidGeneratorError(
                f"{self.kind.value} takes {_ARITY[self.kind]} level indices, got {len(self.levels)}"
            )
        if any(a < 0 for a in self.levels):
            raise InvalidGeneratorError(f"negative level index in {self}")
        if any(a >= b for a, b in zip(self.levels, self.levels[1:])):
            raise InvalidGeneratorError(f"level indices must be strictly increasing: {self}")

    @classmethod
    def neg_one(cls, a: int) -> "Generator":
        return cls(GeneratorKind.NEG_ONE, (a,))

    @classmethod
    def x(cls, a: int, b: int) -> "Generator":
        return cls(GeneratorKind.TWO_LEVEL_X, (a, b))

    @classmethod
    def k(cls, a: int, b: int, c: int, d: int) -> "Generator":
        return cls(GeneratorKind.FOUR_LEVEL_K, (a, b, c, d))

    @classmethod
    def ih(cls) -> "Generator":
        return cls(GeneratorKind.IH)

    @classmethod
    def swap(cls, a: int, b: int) -> "Generator":
        """X on two levels given in either order."""
        return cls.x(min(a, b), max(a, b))

    def validate(self, n: int) -> None:
        if any(a >= n for a in self.levels):
            raise InvalidGeneratorError(f"{self} has a level index out of range for n={n}")
        if self.kind is GeneratorKind.IH and n % 2:
            raise InvalidGeneratorError(f"IH requires an even dimension, got n={n}")

    def __str__(self) -> str:
        if self.kind is GeneratorKind.IH:
            return "IH"
        return f"{self.kind.value}[{','.join(str(a) for a in self.levels)}]"


@dataclass(frozen=True)
class GeneratorWord:
    """Generators in application order at dimension n."""

    n: int
    items: Tuple[Generator, ...] = ()

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError("word dimension must be positive")
        for g in self.items:
            g.validate(self.n)

    @classmethod
    def of(cls, n: int, items: Iterable[Generator]) -> "GeneratorWord":
        return cls(n, tuple(items))

    def __len__(self) -> int:
        return len(self.items)

    def __iter__(self) -> Iterator[Generator]:
        return iter(self.items)

    def __getitem__(self, i):
        return self.items[i]

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if other.n != self.n:
            raise ShapeError(f"cannot concatenate words of dimension {self.n} and {other.n}")
        return GeneratorWord(self.n, self.items + other.items)

    def count(self, kind: GeneratorKind) -> int:
        return sum(1 for g in self.items if g.kind is kind)

    def __str__(self) -> str:
        return " ".join(str(g) for g in self.items) or "ε"


# ---------------------------------------------------------------------------
# Matrix semantics
# ---------------------------------------------------------------------------

def generator_matrix(g: Generator, n: int) -> ScaledDyadicMatrix:
    """The n×n m-level matrix of g."""
    g.validate(n)
    if g.kind is GeneratorKind.NEG_ONE:
        raw = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        (a,) = g.levels
        raw[a][a] = -1
        return normalize(raw, 0)
    if g.kind is GeneratorKind.TWO_LEVEL_X:
        a, b = g.levels
        raw = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        raw[a][a] = raw[b][b] = 0
        raw[a][b] = raw[b][a] = 1
        return normalize(raw, 0)
    if g.kind is GeneratorKind.FOUR_LEVEL_K:
        raw = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for p, i in enumerate(g.levels):
            for q, j in enumerate(g.levels):
                raw[i][j] = _K_ROWS[p][q]
        return normalize(raw, 2)
    raw = [[0] * n for _ in range(n)]
    for a in range(0, n, 2):
        raw[a][a] = raw[a][a + 1] = raw[a + 1][a] = 1
        raw[a + 1][a + 1] = -1
    return normalize(raw, 1)


def _apply_rows(g: Generator, rows: List[List[int]], k: int) -> int:
    """Apply g to ``rows / sqrt(2)^k`` in place; return the new (unreduced) exponent."""
    if g.kind is GeneratorKind.NEG_ONE:
        (a,) = g.levels
        rows[a] = [-v for v in rows[a]]
        return k
    if g.kind is GeneratorKind.TWO_LEVEL_X:
        a, b = g.levels
        rows[a], rows[b] = rows[b], rows[a]
        return k
    if g.kind is GeneratorKind.FOUR_LEVEL_K:
        a, b, c, d = g.levels
        ra, rb, rc, rd = rows[a], rows[b], rows[c], rows[d]
        plus = [x + y for x, y in zip(ra, rb)]
        minus = [x - y for x, y in zip(ra, rb)]
        cplus = [x + y for x, y in zip(rc, rd)]
        cminus = [x - y for x, y in zip(rc, rd)]
        new = {
            a: [x + y for x, y in zip(plus, cplus)],
            b: [x + y for x, y in zip(minus, cminus)],
            c: [x - y for x, y in zip(plus, cplus)],
            d: [x - y for x, y in zip(minus, cminus)],
        }
        for i in range(len(rows)):
            rows[i] = new[i] if i in new else [2 * v for v in rows[i]]
        return k + 2
    for a in range(0, len(rows), 2):
        r0, r1 = rows[a], rows[a + 1]
        rows[a] = [x + y for x, y in zip(r0, r1)]
        rows[a + 1] = [x - y for x, y in zip(r0, r1)]
    return k + 1


def apply_left(g: Generator, u: ScaledDyadicMatrix) -> ScaledDyadicMatrix:
    """G·U computed as row operations on the affected levels."""
    g.validate(u.n)
    if g.kind in (GeneratorKind.NEG_ONE, GeneratorKind.TWO_LEVEL_X):
        rows = list(u.entries)
        if g.kind is GeneratorKind.NEG_ONE:
            (a,) = g.levels
            rows[a] = tuple(-v for v in rows[a])
        else:
            a, b = g.levels
            rows[a], rows[b] = rows[b], rows[a]
        # sign flips and swaps keep the canonical form
        return ScaledDyadicMatrix(u.n, u.k, tuple(rows))
    rows = [list(r) for r in u.entries]
    k = _apply_rows(g, rows, u.k)
    return normalize(rows, k)


def apply_right(u: ScaledDyadicMatrix, g: Generator) -> ScaledDyadicMatrix:
    """U·G, using G = G^T."""
    return transpose(apply_left(g, transpose(u)))


def apply_left_vector(g: Generator, v: DyadicVector) -> DyadicVector:
    g.validate(v.n)
    rows = [[x] for x in v.entries]
    k = _apply_rows(g, rows, v.k)
    return normalize_vector([r[0] for r in rows], k)


def apply_word(w: GeneratorWord, u: ScaledDyadicMatrix) -> ScaledDyadicMatrix:
    """evaluate_word(w) · U."""
    if w.n != u.n:
        raise ShapeError(f"word dimension {w.n} does not match matrix dimension {u.n}")
    for g in w.items:
        u = apply_left(g, u)
    return u


def apply_word_vector(w: GeneratorWord, v: DyadicVector) -> DyadicVector:
    if w.n != v.n:
        raise ShapeError(f"word dimension {w.n} does not match vector dimension {v.n}")
    for g in w.items:
        v = apply_left_vector(g, v)
    return v


def evaluate_word(w: GeneratorWord) -> ScaledDyadicMatrix:
    return apply_word(w, identity(w.n))


def word_inverse(w: GeneratorWord) -> GeneratorWord:
    return GeneratorWord(w.n, tuple(reversed(w.items)))


def permutation_word(n: int, order: Sequence[int]) -> Tuple[GeneratorWord, List[int]]:
    """Transpositions that move row ``order[r]`` to position r, selection-sort style.

    Returns the word (applied on the left) and the realized arrangement.
    At most n - 1 items are emitted.
    """
    if sorted(order) != list(range(n)):
        raise ShapeError(f"not a permutation of 0..{n - 1}: {list(order)}")
    current = list(range(n))
    pos = list(range(n))
    items = []
    for r in range(n):
        s = pos[order[r]]
        if s != r:
            items.append(Generator.swap(r, s))
            current[r], current[s] = current[s], current[r]
            pos[current[r]] = r
            pos[current[s]] = s
    return GeneratorWord(n, tuple(items)), current
