"""
Global synthesis for dimensions 2, 4 and 8.

Instead of working column by column, each step lowers the exponent of the
whole matrix. When the binary pattern is row-paired, permuting identical
rows next to each other and applying I⊗H on the left halves every row
pair; column-paired patterns get the same treatment on the right. At
n = 8 the three patterns that are neither (L, M, N) are first aligned to
their table layout and conjugated by I⊗H, which yields a paired pattern
without raising the exponent.

At exponent 1 every row and column has exactly two odd entries and
distinct rows share an even number of them, so a pairing always exists
and the loop runs down to exponent 0. The remaining signed permutation
is finished by the local algorithm, so the result contains only M, X and
I⊗H.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import List, Tuple

from ..config import dimension_config, get_config
from ..errors import ReductionError, UnsupportedDimensionError
from ..exact.matrix import ScaledDyadicMatrix, binary_pattern, require_orthogonal, transpose
from ..generators.gates import (
    Generator,
    GeneratorWord,
    Ring,
    apply_left,
    apply_word,
    permutation_word,
)
from ..models.entities import StepRecord
from ..pattern.classify import Permutation, classify_pattern, find_row_pairing, is_column_paired
from ..pattern.tables import NON_PAIRED_LABELS
from .local import synthesize_local

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ConjugationFragment:
    """Generators applied on each side, in the order they were applied."""

    left: GeneratorWord
    right: GeneratorWord


@dataclass
class GlobalRun:
    word: GeneratorWord
    k_initial: int
    steps: List[StepRecord] = field(default_factory=list)


def _left_permute_and_halve(u: ScaledDyadicMatrix, perm: Permutation) -> Tuple[GeneratorWord, ScaledDyadicMatrix]:
    word, _ = permutation_word(u.n, perm.order())
    fragment = word + GeneratorWord(u.n, (Generator.ih(),))
    return fragment, apply_word(fragment, u)


def reduce_paired_step(
    u: ScaledDyadicMatrix, side: str = "row"
) -> Tuple[Permutation, GeneratorWord, ScaledDyadicMatrix]:
    """One exponent-lowering step on a row- or column-paired matrix.

    side="row":    U_next = (I⊗H)·P·U; the fragment is applied on the left.
    side="column": U_next = U·P·(I⊗H); the fragment items are applied on the
                   right, first item innermost.
    """
    if u.k < 1:
        raise ReductionError("paired reduction needs exponent >= 1")
    if side == "row":
        perm = find_row_pairing(binary_pattern(u))
        target = u
    elif side == "column":
        perm = is_column_paired(binary_pattern(u))
        target = transpose(u)
    else:
        raise ValueError(f"side must be 'row' or 'column', got {side!r}")
    if perm is None:
        bits = binary_pattern(u)
        logger.error("%s pairing failed at exponent %d:\n%s", side, u.k, "\n".join(bits.to_strings()))
        raise ReductionError(f"binary pattern is not {side}-paired")

    fragment, reduced = _left_permute_and_halve(target, perm)
    u_next = reduced if side == "row" else transpose(reduced)
    if u_next.k >= u.k:
        logger.error("%s-paired step did not lower exponent %d:\n%s", side, u.k, u)
        raise ReductionError(f"{side}-paired step left the exponent at {u_next.k} (was {u.k})")
    return perm, fragment, u_next


def conjugate_step(u: ScaledDyadicMatrix) -> Tuple[ConjugationFragment, ScaledDyadicMatrix]:
    """Align a pattern-L/M/N matrix to its table layout, then conjugate by I⊗H."""
    if u.n != 8:
        raise UnsupportedDimensionError("conjugation step is defined for n = 8 only", n=u.n)
    if u.k < 2:
        raise ReductionError("conjugation step needs exponent >= 2")
    bits = binary_pattern(u)
    pid = classify_pattern(bits)
    if pid.label not in NON_PAIRED_LABELS:
        logger.error("conjugation requested for paired pattern %s at exponent %d", pid.label, u.k)
        raise ReductionError(f"pattern {pid.label} is paired; conjugation does not apply")

    ih = GeneratorWord(8, (Generator.ih(),))
    row_word, _ = permutation_word(8, pid.row_perm.order())
    col_word, _ = permutation_word(8, pid.col_perm.order())
    left = row_word + ih
    right = col_word + ih

    # right-hand generators act as left ones on the transpose
    u_next = apply_word(left, transpose(apply_word(right, transpose(u))))
    if u_next.k > u.k:
        logger.error("conjugation raised exponent %d -> %d (pattern %s)", u.k, u_next.k, pid.label)
        raise ReductionError(f"conjugation raised the exponent from {u.k} to {u_next.k}")
    nxt = binary_pattern(u_next)
    if u_next.k > 0 and find_row_pairing(nxt) is None and is_column_paired(nxt) is None:
        logger.error(
            "conjugated pattern %s is not paired:\n%s", pid.label, "\n".join(nxt.to_strings())
        )
        raise ReductionError(f"conjugating pattern {pid.label} did not produce a paired pattern")
    return ConjugationFragment(left, right), u_next


def run_global(u: ScaledDyadicMatrix) -> GlobalRun:
    """Global synthesis with its step log."""
    n = u.n
    dim = dimension_config(n)
    if not dim.global_supported:
        raise UnsupportedDimensionError(
            f"global synthesis is restricted to n in {{2, 4, 8}}, got n={n}", n=n
        )
    require_orthogonal(u)
    if dim.max_lde is not None and u.k > dim.max_lde:
        logger.error("exponent %d exceeds the bound %d at n=%d", u.k, dim.max_lde, n)
        raise ReductionError(f"exponent {u.k} exceeds the bound {dim.max_lde} at n={n}")

    k_initial = u.k
    guard = 4 * k_initial + get_config().global_guard_slack
    left: List[Generator] = []
    right: List[Generator] = []
    steps: List[StepRecord] = []
    work = u
    iterations = 0
    while work.k > 0:
        iterations += 1
        if iterations > guard:
            logger.error("global reduction stalled at exponent %d after %d iterations", work.k, guard)
            raise ReductionError(f"global reduction exceeded {guard} iterations at exponent {work.k}")
        before = work.k
        bits = binary_pattern(work)
        if find_row_pairing(bits) is not None:
            _, fragment, work = reduce_paired_step(work, "row")
            left.extend(fragment.items)
            kind = "row-paired"
        elif is_column_paired(bits) is not None:
            _, fragment, work = reduce_paired_step(work, "column")
            right.extend(fragment.items)
            kind = "column-paired"
        elif n == 8:
            conj, work = conjugate_step(work)
            left.extend(conj.left.items)
            right.extend(conj.right.items)
            kind = "conjugate"
        else:
            logger.error("unpaired pattern at n=%d, exponent %d:\n%s", n, before, "\n".join(bits.to_strings()))
            raise ReductionError(f"pattern at n={n} is neither row- nor column-paired")
        steps.append(StepRecord(kind=kind, lde_before=before, lde_after=work.k))
        logger.debug("%s step: exponent %d -> %d", kind, before, work.k)

    base = synthesize_local(work, Ring.SCALED)
    steps.append(StepRecord(kind="base", lde_before=0, lde_after=0))

    # work = L·U·R, so U = L^-1 · base · R^-1
    items = tuple(right) + base.items + tuple(reversed(left))
    return GlobalRun(GeneratorWord(n, items), k_initial, steps)


def synthesize_global(u: ScaledDyadicMatrix) -> GeneratorWord:
    return run_global(u).word
