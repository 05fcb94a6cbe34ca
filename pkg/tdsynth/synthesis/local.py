"""
Column-by-column exact synthesis over {M, X, K} (and I⊗H for odd exponents).

Each column is driven to a standard basis vector. While the column has
base-2 lde k > 0 its odd entries come in multiples of four; every group of
four is made congruent to 1 mod 4 by sign flips and then sent to even
entries by one K, which lets the whole column be halved. At k = 0 the
column is ±|p>, fixed by an optional sign flip and an optional swap.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from ..errors import NotOrthogonalError, ParityError, ReductionError
from ..exact.matrix import (
    DyadicVector,
    ScaledDyadicMatrix,
    require_orthogonal,
    vector_base2_lde,
)
from ..generators.gates import (
    Generator,
    GeneratorWord,
    Ring,
    apply_left,
    apply_word,
    word_inverse,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class QuadrupleStep:
    indices: Tuple[int, int, int, int]
    tau: Tuple[int, int, int, int]
    result: Tuple[int, int, int, int]   # entries after the flips and K, same exponent


def reduce_quadruple(
    v: Sequence[int], indices: Sequence[int]
) -> Tuple[QuadrupleStep, List[Generator]]:
    """Sign-flip entries that are 3 mod 4, then apply K on the four positions."""
    idx = tuple(indices)
    if len(idx) != 4 or any(a >= b for a, b in zip(idx, idx[1:])):
        raise ValueError(f"need four increasing positions, got {idx}")
    vals = [v[i] for i in idx]
    if any(x % 2 == 0 for x in vals):
        logger.error("quadruple %s has even entries %s", idx, vals)
        raise ReductionError(f"entries at {idx} are not all odd: {vals}")

    tau = tuple(1 if x % 4 == 3 else 0 for x in vals)
    gens = [Generator.neg_one(i) for i, t in zip(idx, tau) if t]
    gens.append(Generator.k(*idx))

    a, b, c, d = (-x if t else x for x, t in zip(vals, tau))
    result = (
        (a + b + c + d) // 2,
        (a - b + c - d) // 2,
        (a + b - c - d) // 2,
        (a - b - c + d) // 2,
    )
    return QuadrupleStep(idx, tau, result), gens


def reduce_column(u: DyadicVector, target_j: int, min_index: int = 0) -> GeneratorWord:
    """Word w with w|u> = |target_j>, for a unit vector with even sqrt(2)-exponent.

    ``min_index`` is the first level the base case may land on; the local
    algorithm passes the column index so fixed columns stay untouched.
    """
    n = u.n
    if not 0 <= target_j < n:
        raise ValueError(f"target {target_j} out of range for n={n}")
    if not u.is_unit():
        raise NotOrthogonalError("column is not a unit vector")
    if u.k % 2:
        raise ParityError(f"column has odd sqrt(2)-exponent {u.k}")

    items: List[Generator] = []
    e = list(u.entries)
    k = u.k
    while k > 0:
        odd = [i for i, x in enumerate(e) if x % 2]
        if not odd or len(odd) % 4:
            logger.error("column at k=%d has %d odd entries: %s", k, len(odd), e)
            raise ReductionError(f"{len(odd)} odd entries at k={k}, expected a multiple of 4")
        for q in range(0, len(odd), 4):
            step, gens = reduce_quadruple(e, odd[q:q + 4])
            items.extend(gens)
            for i, x in zip(step.indices, step.result):
                e[i] = x
        before = k
        while k >= 2 and all(x % 2 == 0 for x in e):
            e = [x // 2 for x in e]
            k -= 2
        if k >= before:
            logger.error("column exponent stuck at %d: %s", before, e)
            raise ReductionError(f"column exponent did not drop from {before}")

    (p,) = [i for i, x in enumerate(e) if x]
    if p < min_index:
        logger.error("column reduced to level %d below %d: %s", p, min_index, e)
        raise ReductionError(f"column landed on fixed level {p} < {min_index}")
    if e[p] < 0:
        items.append(Generator.neg_one(p))
    if p != target_j:
        items.append(Generator.swap(p, target_j))
    return GeneratorWord(n, tuple(items))


def synthesize_local(u: ScaledDyadicMatrix, ring: Ring = Ring.SCALED) -> GeneratorWord:
    """A word evaluating exactly to U, built column by column."""
    ring = Ring(ring)
    require_orthogonal(u)
    n = u.n
    reduction: List[Generator] = []
    work = u
    if u.k % 2:
        if ring is Ring.INTEGRAL:
            raise ParityError(f"odd exponent {u.k} is outside O_{n}(Z[1/2])")
        if n % 2:
            raise ParityError(f"odd exponent {u.k} is impossible at odd n={n}")
        ih = Generator.ih()
        work = apply_left(ih, work)
        reduction.append(ih)

    for j in range(n):
        column = work.column(j)
        logger.debug("column %d: base-2 lde %d", j, vector_base2_lde(column))
        word = reduce_column(column, j, min_index=j)
        work = apply_word(word, work)
        reduction.extend(word.items)

    if not work.is_identity():
        logger.error("local reduction of %dx%d (k=%d) left a residue:\n%s", n, n, u.k, work)
        raise ReductionError("local reduction did not reach the identity")
    result = word_inverse(GeneratorWord(n, tuple(reduction)))
    logger.debug("local synthesis n=%d k=%d -> %d generators", n, u.k, len(result))
    return result


def column_cost_bound(n: int, k: int) -> int:
    """Most generators reduce_column emits for base-2 lde k: 5 per quadruple per round, plus 2."""
    return 5 * (n // 4) * k + 2


def local_cost_envelope(n: int, k: int) -> int:
    """Closed-form gate budget (2^(n+1) - n - 2)·k of the column-by-column algorithm."""
    return ((1 << (n + 1)) - n - 2) * k
