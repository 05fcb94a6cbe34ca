"""
Exact matrices and vectors of the form M / sqrt(2)^k.

Every value is kept in canonical form: k is the least scaled denominator
exponent, i.e. it is never the case that k >= 2 and every entry is even.
Canonical forms make structural equality coincide with value equality.

Entries are plain Python ints, so they never overflow as k grows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from ..errors import NotOrthogonalError, ShapeError
from .bits import BinaryPattern

Rows = Tuple[Tuple[int, ...], ...]


def _all_even(values: Iterable[int]) -> bool:
    return all(v % 2 == 0 for v in values)


def _reduce(rows: List[List[int]], k: int) -> Tuple[List[List[int]], int]:
    flat = [v for r in rows for v in r]
    if not any(flat):
        return rows, 0
    while k >= 2 and _all_even(flat):
        rows = [[v // 2 for v in r] for r in rows]
        flat = [v // 2 for v in flat]
        k -= 2
    return rows, k


@dataclass(frozen=True)
class ScaledDyadicMatrix:
    """The n×n matrix ``entries / sqrt(2)^k`` in canonical form."""

    n: int
    k: int
    entries: Rows

    def __post_init__(self):
        if self.n < 1:
            raise ShapeError("dimension must be positive")
        if self.k < 0:
            raise ShapeError("exponent must be non-negative")
        if len(self.entries) != self.n or any(len(r) != self.n for r in self.entries):
            raise ShapeError(f"entries are not {self.n}x{self.n}")
        flat = [v for r in self.entries for v in r]
        if (self.k >= 2 and _all_even(flat)) or (self.k > 0 and not any(flat)):
            raise ShapeError("matrix is not in canonical form; use normalize()")

    def __matmul__(self, other: "ScaledDyadicMatrix") -> "ScaledDyadicMatrix":
        return multiply(self, other)

    @property
    def lde(self) -> int:
        return self.k

    def row(self, i: int) -> Tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> "DyadicVector":
        return normalize_vector([r[j] for r in self.entries], self.k)

    def columns(self) -> List["DyadicVector"]:
        return [self.column(j) for j in range(self.n)]

    def is_identity(self) -> bool:
        return self.k == 0 and self.entries == identity(self.n).entries

    def __str__(self) -> str:
        body = "\n".join(" ".join(f"{v:>4d}" for v in r) for r in self.entries)
        return f"1/sqrt2^{self.k} *\n{body}"


@dataclass(frozen=True)
class DyadicVector:
    """The length-n vector ``entries / sqrt(2)^k`` in canonical form."""

    n: int
    k: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if len(self.entries) != self.n:
            raise ShapeError(f"vector has {len(self.entries)} entries, expected {self.n}")
        if (self.k >= 2 and _all_even(self.entries)) or (self.k > 0 and not any(self.entries)):
            raise ShapeError("vector is not in canonical form; use normalize_vector()")

    def norm_squared_numerator(self) -> int:
        return sum(v * v for v in self.entries)

    def is_unit(self) -> bool:
        """Sum of squared entries equals 2^k."""
        return self.norm_squared_numerator() == 1 << self.k

    def negate(self) -> "DyadicVector":
        return DyadicVector(self.n, self.k, tuple(-v for v in self.entries))


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def normalize(raw: Sequence[Sequence[int]], raw_k: int) -> ScaledDyadicMatrix:
    """Canonical form of ``raw / sqrt(2)^raw_k``.

    While k >= 2 and every entry is even, halve the entries and drop k by 2.
    The all-zero matrix gets k = 0.
    """
    if raw_k < 0:
        raise ShapeError("exponent must be non-negative")
    rows = [[int(v) for v in r] for r in raw]
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise ShapeError("matrix must be square and non-empty")
    rows, k = _reduce(rows, raw_k)
    return ScaledDyadicMatrix(n, k, tuple(tuple(r) for r in rows))


def normalize_vector(raw: Sequence[int], raw_k: int) -> DyadicVector:
    if raw_k < 0:
        raise ShapeError("exponent must be non-negative")
    rows, k = _reduce([[int(v) for v in raw]], raw_k)
    return DyadicVector(len(raw), k, tuple(rows[0]))


def identity(n: int) -> ScaledDyadicMatrix:
    return ScaledDyadicMatrix(
        n, 0, tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    )


def basis_vector(n: int, j: int, sign: int = 1) -> DyadicVector:
    return DyadicVector(n, 0, tuple(sign if i == j else 0 for i in range(n)))


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------

def lde_sqrt2(u: ScaledDyadicMatrix) -> int:
    return u.k


def base2_lde(u: ScaledDyadicMatrix) -> int:
    """Base-2 least denominator exponent, ceil(k/2)."""
    return (u.k + 1) // 2


def vector_base2_lde(v: DyadicVector) -> int:
    return (v.k + 1) // 2


def multiply(a: ScaledDyadicMatrix, b: ScaledDyadicMatrix) -> ScaledDyadicMatrix:
    if a.n != b.n:
        raise ShapeError(f"dimension mismatch: {a.n} vs {b.n}")
    cols = list(zip(*b.entries))
    raw = [[sum(x * y for x, y in zip(row, col)) for col in cols] for row in a.entries]
    return normalize(raw, a.k + b.k)


def multiply_vector(a: ScaledDyadicMatrix, v: DyadicVector) -> DyadicVector:
    if a.n != v.n:
        raise ShapeError(f"dimension mismatch: {a.n} vs {v.n}")
    raw = [sum(x * y for x, y in zip(row, v.entries)) for row in a.entries]
    return normalize_vector(raw, a.k + v.k)


def transpose(u: ScaledDyadicMatrix) -> ScaledDyadicMatrix:
    return ScaledDyadicMatrix(u.n, u.k, tuple(zip(*u.entries)))


def is_orthogonal(u: ScaledDyadicMatrix) -> bool:
    """True iff U^T U = I, checked as M^T M = 2^k I over the integers."""
    scale = 1 << u.k
    cols = list(zip(*u.entries))
    for i, ci in enumerate(cols):
        for j in range(i, u.n):
            dot = sum(x * y for x, y in zip(ci, cols[j]))
            if dot != (scale if i == j else 0):
                return False
    return True


def require_orthogonal(u: ScaledDyadicMatrix) -> None:
    if not is_orthogonal(u):
        raise NotOrthogonalError(f"{u.n}x{u.n} matrix at k={u.k} is not orthogonal")


def binary_pattern(u: ScaledDyadicMatrix) -> BinaryPattern:
    """Entrywise residues mod 2 of M at the least scaled denominator exponent."""
    return BinaryPattern(u.n, tuple(tuple(v % 2 for v in r) for r in u.entries))


def dot(u: DyadicVector, w: DyadicVector) -> Tuple[int, int]:
    """Inner product as (integer numerator, sqrt(2)-exponent)."""
    if u.n != w.n:
        raise ShapeError(f"dimension mismatch: {u.n} vs {w.n}")
    return sum(x * y for x, y in zip(u.entries, w.entries)), u.k + w.k


def outer_projector_sum(vectors: Sequence[DyadicVector], signs: Sequence[int]) -> ScaledDyadicMatrix:
    """Exact sum of ``sign * |v><v|`` over the given vectors."""
    if not vectors:
        raise ShapeError("no vectors")
    n = vectors[0].n
    k = max(v.k for v in vectors)
    # each |v><v| has exponent 2*v.k; lift all to 2*k (always an even gap)
    acc = [[0] * n for _ in range(n)]
    for v, s in zip(vectors, signs):
        scale = s * (1 << (k - v.k))
        e = v.entries
        for i in range(n):
            if e[i]:
                row = acc[i]
                f = scale * e[i]
                for j in range(n):
                    row[j] += f * e[j]
    return normalize(acc, 2 * k)


def reflection_matrix(psi: DyadicVector) -> ScaledDyadicMatrix:
    """R = I - 2|psi><psi| for a unit vector psi."""
    n, k = psi.n, psi.k
    scale = 1 << k
    e = psi.entries
    raw = [[(scale if i == j else 0) - 2 * e[i] * e[j] for j in range(n)] for i in range(n)]
    return normalize(raw, 2 * k)


def block(u: ScaledDyadicMatrix, row0: int, col0: int, size: int) -> ScaledDyadicMatrix:
    """Square sub-block ``u[row0:row0+size, col0:col0+size]`` (zero block allowed)."""
    if row0 + size > u.n or col0 + size > u.n:
        raise ShapeError("block out of range")
    raw = [list(u.entries[i][col0:col0 + size]) for i in range(row0, row0 + size)]
    return normalize(raw, u.k)


def is_zero(u: ScaledDyadicMatrix) -> bool:
    return not any(v for r in u.entries for v in r)
