"""
Householder synthesis.

U (dimension n) is embedded as the symmetric involution

    U' = |+><-| ⊗ U + |-><+| ⊗ U^T        (dimension 2n, ancilla most significant)

whose -1 eigenspace is spanned by the orthonormal vectors

    |w_j> = (|-> |j> - |+> |u_j>) / sqrt(2),   u_j = column j of U.

U' is the product of the n commuting reflections I - 2|w_j><w_j|, and each
reflection is G^-1 · (-1)[0] · G for any word G sending |w_j> to |0>.
Wrapped as C = (H⊗I)·D·(HX⊗I), the circuit satisfies C|0>|phi> = |0>U|phi>.

When k is odd the axes are not scaled-dyadic. Then V = (I⊗H)U is
synthesized instead and I⊗H is appended at dimension 2n; it acts on the
last system qubit and commutes with the ancilla gates.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..analysis.parallel import map_ordered
from ..errors import NotOrthogonalError, ParityError, VerificationError
from ..exact.matrix import (
    DyadicVector,
    ScaledDyadicMatrix,
    multiply,
    normalize,
    normalize_vector,
    require_orthogonal,
    transpose,
)
from ..generators.gates import (
    Generator,
    GeneratorKind,
    GeneratorWord,
    Ring,
    apply_left,
    apply_left_vector,
    word_inverse,
)
from ..models.entities import WrapperSpec
from .local import reduce_column

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class EmbeddedOperator:
    source: ScaledDyadicMatrix      # U, dimension n
    embedded: ScaledDyadicMatrix    # U', dimension 2n


@dataclass(frozen=True)
class Reflection:
    axis: DyadicVector
    word: GeneratorWord             # evaluates to I - 2|axis><axis|


def embed(u: ScaledDyadicMatrix) -> EmbeddedOperator:
    require_orthogonal(u)
    n = u.n
    m = u.entries
    raw = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            s = m[i][j] + m[j][i]       # M + M^T
            d = m[i][j] - m[j][i]       # M - M^T
            raw[i][j] = s
            raw[i][n + j] = -d
            raw[n + i][j] = d
            raw[n + i][n + j] = -s
    embedded = normalize(raw, u.k + 2)
    if transpose(embedded) != embedded or not multiply(embedded, embedded).is_identity():
        raise VerificationError("embedded operator is not a symmetric involution")
    return EmbeddedOperator(u, embedded)


def _axes(u: ScaledDyadicMatrix, sign: int) -> List[DyadicVector]:
    if u.k % 2:
        raise ParityError(f"reflection axes of an odd exponent ({u.k}) matrix are not scaled-dyadic")
    require_orthogonal(u)
    n = u.n
    root = 1 << (u.k // 2)      # sqrt(2)^k
    out = []
    for j in range(n):
        col = [r[j] for r in u.entries]
        top = [(root if i == j else 0) + sign * col[i] for i in range(n)]
        bottom = [(-root if i == j else 0) + sign * col[i] for i in range(n)]
        out.append(normalize_vector(top + bottom, u.k + 2))
    return out


def reflection_vectors(u: ScaledDyadicMatrix) -> List[DyadicVector]:
    """The -1 eigenvectors |w_j> of U', j = 0..n-1."""
    return _axes(u, -1)


def fixed_vectors(u: ScaledDyadicMatrix) -> List[DyadicVector]:
    """The +1 eigenvectors (|-> |j> + |+> |u_j>) / sqrt(2) of U'."""
    return _axes(u, 1)


def synthesize_reflection(axis: DyadicVector) -> Reflection:
    if not axis.is_unit():
        raise NotOrthogonalError("reflection axis is not a unit vector")
    m = axis.n
    items: List[Generator] = []
    # R_psi = R_-psi: reduce the representative whose leading entry is positive
    v = axis if next(x for x in axis.entries if x) > 0 else axis.negate()
    if axis.k % 2:
        if m % 2:
            raise ParityError(f"odd-exponent axis at odd dimension {m}")
        ih = Generator.ih()
        v = apply_left_vector(ih, v)
        items.append(ih)
    items.extend(reduce_column(v, 0).items)
    to_zero = GeneratorWord(m, tuple(items))
    word = to_zero + GeneratorWord(m, (Generator.neg_one(0),)) + word_inverse(to_zero)
    return Reflection(axis, word)


def householder_factors(u: ScaledDyadicMatrix, threads: Optional[int] = None) -> Tuple[EmbeddedOperator, List[Reflection]]:
    op = embed(u)
    reflections = map_ordered(synthesize_reflection, reflection_vectors(u), threads)
    return op, reflections


def synthesize_householder(
    u: ScaledDyadicMatrix, ring: Ring = Ring.SCALED, threads: Optional[int] = None
) -> Tuple[GeneratorWord, WrapperSpec]:
    """Word for U' at dimension 2n (or for (I⊗H)·V' when k is odd) and its wrapper."""
    ring = Ring(ring)
    require_orthogonal(u)
    n = u.n
    source = u
    odd = bool(u.k % 2)
    if odd:
        if ring is Ring.INTEGRAL:
            raise ParityError(f"odd exponent {u.k} is outside O_{n}(Z[1/2])")
        if n % 2:
            raise ParityError(f"odd exponent {u.k} is impossible at odd n={n}")
        source = apply_left(Generator.ih(), u)

    _, reflections = householder_factors(source, threads)
    items: List[Generator] = []
    for r in reflections:
        items.extend(r.word.items)
    if odd:
        items.append(Generator.ih())
    word = GeneratorWord(2 * n, tuple(items))

    wrapper = WrapperSpec(available=ring is Ring.SCALED)
    logger.debug(
        "householder n=%d k=%d: %d reflections, %d generators (%d K)",
        n, u.k, len(reflections), len(word), word.count(GeneratorKind.FOUR_LEVEL_K),
    )
    return word, wrapper


def householder_target(u: ScaledDyadicMatrix) -> ScaledDyadicMatrix:
    """The matrix synthesize_householder's word evaluates to."""
    if u.k % 2:
        v = apply_left(Generator.ih(), u)
        return apply_left(Generator.ih(), embed(v).embedded)
    return embed(u).embedded
