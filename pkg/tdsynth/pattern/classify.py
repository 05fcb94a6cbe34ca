"""
Pairing detection and classification of binary patterns.

A pattern is row-paired when its rows split into pairs of identical rows;
column-paired when its transpose is row-paired. classify_pattern finds the
canonical table entry a pattern equals up to row permutation, column
permutation and transpose, together with an explicit witness.
"""

from __future__ import annotations

import logging
from collections import Counter, defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from ..errors import PatternMatchError, ShapeError, UnsupportedDimensionError
from ..exact.bits import BinaryPattern
from .tables import tables_for

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Permutation:
    """Bijection on 0..n-1; ``image[i]`` is where element i is sent."""

    image: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.image) != list(range(len(self.image))):
            raise ShapeError(f"not a permutation: {list(self.image)}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> "Permutation":
        """The permutation that sends ``order[r]`` to position r."""
        image = [0] * len(order)
        for r, i in enumerate(order):
            image[i] = r
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def order(self) -> List[int]:
        """Inverse image: ``order()[r]`` is the element placed at position r."""
        out = [0] * self.n
        for i, r in enumerate(self.image):
            out[r] = i
        return out

    def inverse(self) -> "Permutation":
        return Permutation(tuple(self.order()))

    def is_identity(self) -> bool:
        return all(i == r for i, r in enumerate(self.image))


@dataclass(frozen=True)
class PatternId:
    """Classification result with witness.

    ``bits[i][j] == T[row_perm.image[i]][col_perm.image[j]]`` where T is the
    table entry, transposed when ``transposed`` is set.
    """

    label: str
    transposed: bool
    row_perm: Permutation
    col_perm: Permutation

    def table(self) -> BinaryPattern:
        t = tables_for(self.row_perm.n)[self.label]
        return t.transpose() if self.transposed else t

    def reconstruct(self) -> BinaryPattern:
        t = self.table().bits
        rp, cp = self.row_perm.image, self.col_perm.image
        n = self.row_perm.n
        return BinaryPattern.from_rows(
            [[t[rp[i]][cp[j]] for j in range(n)] for i in range(n)]
        )


# ---------------------------------------------------------------------------
# Pairing
# ---------------------------------------------------------------------------

def find_row_pairing(b: BinaryPattern) -> Optional[Permutation]:
    """Permutation placing identical rows at positions (2i, 2i+1), or None.

    Rows are grouped by value; groups go in ascending bit-string order and
    members in ascending original index.
    """
    if b.n % 2:
        raise ShapeError(f"pairing needs an even dimension, got n={b.n}")
    groups: Dict[Tuple[int, ...], List[int]] = defaultdict(list)
    for i, row in enumerate(b.bits):
        groups[row].append(i)
    if any(len(members) % 2 for members in groups.values()):
        return None
    order = [i for key in sorted(groups) for i in groups[key]]
    return Permutation.from_order(order)


def is_column_paired(b: BinaryPattern) -> Optional[Permutation]:
    """Column permutation placing identical columns adjacently, or None."""
    return find_row_pairing(b.transpose())


def is_row_paired(b: BinaryPattern) -> bool:
    return find_row_pairing(b) is not None


# ---------------------------------------------------------------------------
# Classification
# ---------------------------------------------------------------------------

def _match(b: BinaryPattern, t: BinaryPattern) -> Optional[Tuple[List[int], List[int]]]:
    """Witness (row_image, col_image) with b[i][j] == t[row_image[i]][col_image[j]].

    Rows are searched depth-first in ascending order and columns are then
    assigned greedily, so the witness is the lexicographically smallest
    (row_image, col_image) against this table.
    """
    n = b.n
    if sorted(b.row_weights()) != sorted(t.row_weights()):
        return None
    if sorted(b.column_weights()) != sorted(t.column_weights()):
        return None

    b_rw = b.row_weights()
    t_rw = t.row_weights()
    row_image: List[int] = []
    used = [False] * n

    def prefixes_agree(m: int) -> bool:
        ours = Counter(tuple(b.bits[i][j] for i in range(m)) for j in range(n))
        theirs = Counter(tuple(t.bits[r][j] for r in row_image) for j in range(n))
        return ours == theirs

    def search(i: int) -> bool:
        if i == n:
            return True
        for r in range(n):
            if used[r] or t_rw[r] != b_rw[i]:
                continue
            used[r] = True
            row_image.append(r)
            if prefixes_agree(i + 1) and search(i + 1):
                return True
            row_image.pop()
            used[r] = False
        return False

    if not search(0):
        return None

    # column multisets agree, so greedy assignment always completes
    t_cols = [tuple(t.bits[r][c] for r in row_image) for c in range(n)]
    b_cols = list(zip(*b.bits))
    taken = [False] * n
    col_image = []
    for col in b_cols:
        c = next(c for c in range(n) if not taken[c] and t_cols[c] == col)
        taken[c] = True
        col_image.append(c)
    return row_image, col_image


def classify_pattern(b: BinaryPattern) -> PatternId:
    """Label and witness of the table entry equal to b up to permutations and transpose.

    Labels are tried in table order. Within the first label that matches,
    the witness with the smallest (row_perm, col_perm, transposed) wins.
    """
    try:
        tables = tables_for(b.n)
    except ValueError as exc:
        raise UnsupportedDimensionError(str(exc), n=b.n) from exc

    for label, table in tables.items():
        candidates = [(False, table)]
        flipped = table.transpose()
        if flipped != table:
            candidates.append((True, flipped))
        found = []
        for transposed, t in candidates:
            witness = _match(b, t)
            if witness is not None:
                rows, cols = witness
                found.append((tuple(rows), tuple(cols), transposed))
        if found:
            rows, cols, transposed = min(found)
            return PatternId(label, transposed, Permutation(rows), Permutation(cols))

    logger.error("no pattern table matches:\n%s", "\n".join(b.to_strings()))
    raise PatternMatchError(f"{b.n}x{b.n} binary pattern matches no stored table")
