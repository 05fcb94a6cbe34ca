"""
Macro-gate circuits with exact evaluation.

Register convention: basis index = big-endian bit string, qubit 0 most
significant. Ancillas occupy qubits 0..a-1, system qubits follow, so the
ancillas-in-|0> block of a circuit matrix is its top-left 2^m × 2^m block.
Generator macros act on the full register.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple

from ..config import dimension_config
from ..errors import ShapeError, UnsupportedDimensionError
from ..exact.matrix import ScaledDyadicMatrix, identity, normalize
from ..generators.gates import Generator, GeneratorKind, GeneratorWord, apply_left
from ..models.entities import WrapperSpec

logger = logging.getLogger(__name__)

_ARITY = {"h": 1, "x": 1, "cx": 2, "ccx": 3, "gen": 0}


@dataclass(frozen=True)
class Gate:
    name: str                                   # h | x | cx | ccx | gen
    qubits: Tuple[int, ...] = ()                # controls first, target last
    generator: Optional[Generator] = None       # payload of a gen macro

    def __post_init__(self):
        if self.name not in _ARITY:
            raise ShapeError(f"unknown gate {self.name!r}")
        if len(self.qubits) != _ARITY[self.name]:
            raise ShapeError(f"{self.name} takes {_ARITY[self.name]} qubits, got {len(self.qubits)}")
        if len(set(self.qubits)) != len(self.qubits):
            raise ShapeError(f"repeated qubit in {self.name} {self.qubits}")
        if (self.name == "gen") != (self.generator is not None):
            raise ShapeError("only gen gates carry a generator")


@dataclass(frozen=True)
class Circuit:
    qubits: int                 # system qubits m
    ancillas: int = 0
    gates: Tuple[Gate, ...] = ()

    def __post_init__(self):
        if self.qubits < 0 or self.ancillas < 0 or self.width < 1:
            raise ShapeError("circuit needs at least one qubit")
        dim = 1 << self.width
        for g in self.gates:
            if any(not 0 <= q < self.width for q in g.qubits):
                raise ShapeError(f"qubit index out of range in {g}")
            if g.generator is not None:
                g.generator.validate(dim)

    @property
    def width(self) -> int:
        return self.qubits + self.ancillas

    def __len__(self) -> int:
        return len(self.gates)


def word_to_circuit(w: GeneratorWord, m: int) -> Circuit:
    """One gate per generator; IH becomes H on the last qubit."""
    if m < 1:
        raise UnsupportedDimensionError(f"circuits need at least one qubit, got m={m}", n=w.n)
    if w.n != 1 << m:
        raise UnsupportedDimensionError(f"word dimension {w.n} is not 2^{m}", n=w.n)
    gates = [
        Gate("h", (m - 1,)) if g.kind is GeneratorKind.IH else Gate("gen", generator=g)
        for g in w.items
    ]
    return Circuit(m, 0, tuple(gates))


def householder_circuit(word: GeneratorWord, wrapper: WrapperSpec, m: int) -> Circuit:
    """(H⊗I)·D·(HX⊗I) with one ancilla on qubit 0; ``word`` has dimension 2^(m+1)."""
    if not wrapper.available:
        raise UnsupportedDimensionError("no wrapper circuit for the integral ring")
    if word.n != 1 << (m + 1):
        raise ShapeError(f"reflection word has dimension {word.n}, expected {1 << (m + 1)}")
    width = m + 1
    gates: List[Gate] = [_wrapper_gate(tok) for tok in wrapper.pre]
    for g in word.items:
        gates.append(Gate("h", (width - 1,)) if g.kind is GeneratorKind.IH else Gate("gen", generator=g))
    gates.extend(_wrapper_gate(tok) for tok in wrapper.post)
    return Circuit(m, 1, tuple(gates))


def _wrapper_gate(token: str) -> Gate:
    name, _, where = token.partition("@")
    if where != "anc" or name not in ("X", "H"):
        raise ShapeError(f"unsupported wrapper gate {token!r}")
    return Gate(name.lower(), (0,))


def _mask(width: int, q: int) -> int:
    return 1 << (width - 1 - q)


def _apply_gate(g: Gate, u: ScaledDyadicMatrix, width: int) -> ScaledDyadicMatrix:
    if g.name == "gen":
        return apply_left(g.generator, u)
    rows = [list(r) for r in u.entries]
    if g.name == "h":
        mask = _mask(width, g.qubits[0])
        for i in range(len(rows)):
            if not i & mask:
                r0, r1 = rows[i], rows[i | mask]
                rows[i] = [a + b for a, b in zip(r0, r1)]
                rows[i | mask] = [a - b for a, b in zip(r0, r1)]
        return normalize(rows, u.k + 1)
    *controls, target = g.qubits
    cmask = sum(_mask(width, c) for c in controls)
    tmask = _mask(width, target)
    for i in range(len(rows)):
        if i & cmask == cmask and not i & tmask:
            rows[i], rows[i | tmask] = rows[i | tmask], rows[i]
    return ScaledDyadicMatrix(u.n, u.k, tuple(tuple(r) for r in rows))


def evaluate_circuit(c: Circuit) -> ScaledDyadicMatrix:
    """Exact matrix of the whole register, ancillas included."""
    u = identity(1 << c.width)
    for g in c.gates:
        u = _apply_gate(g, u, c.width)
    return u


def check_ancilla_contract(c: Circuit, expected: ScaledDyadicMatrix) -> bool:
    """True iff the circuit maps |0...0>|phi> to |0...0>·expected|phi> exactly."""
    d = 1 << c.qubits
    if expected.n != d or c.ancillas < 1:
        return False
    full = evaluate_circuit(c)
    if any(full.entries[i][j] for i in range(d, full.n) for j in range(d)):
        return False
    top = normalize([list(full.entries[i][:d]) for i in range(d)], full.k)
    return top == expected


def qubit_count(n: int) -> int:
    q = dimension_config(n).qubits
    if q is None:
        raise UnsupportedDimensionError(f"dimension {n} is not a power of two", n=n)
    return q
