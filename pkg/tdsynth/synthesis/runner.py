"""Algorithm dispatch with mandatory exact re-verification."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

from ..circuit.ir import Circuit, check_ancilla_contract, householder_circuit
from ..config import dimension_config
from ..errors import ParityError, ReductionError, VerificationError
from ..exact.matrix import ScaledDyadicMatrix, require_orthogonal
from ..generators.gates import GeneratorKind, GeneratorWord, Ring, evaluate_word
from ..models.entities import SynthesisReport
from .globalsyn import run_global
from .householder import householder_target, synthesize_householder
from .local import synthesize_local
from .rewrite import eliminate_ih_pairs, rewrite_blowup

logger = logging.getLogger(__name__)

ALGORITHMS = ("local", "householder", "global")


@dataclass
class SynthesisOutcome:
    word: GeneratorWord
    report: SynthesisReport
    circuit: Optional[Circuit] = None


def synthesize(
    u: ScaledDyadicMatrix,
    algorithm: str = "local",
    ring: Ring = Ring.SCALED,
    with_circuit: bool = False,
) -> SynthesisOutcome:
    """Run one algorithm and check the result exactly before returning it.

    Global synthesis in the integral ring also eliminates the I⊗H pairs, so
    the returned word uses M, X and K only.
    """
    ring = Ring(ring)
    require_orthogonal(u)
    if ring is Ring.INTEGRAL and u.k % 2:
        raise ParityError(f"odd exponent {u.k} is outside O_{u.n}(Z[1/2])")

    steps = []
    blowup = None
    wrapper = None
    circuit = None
    target = u
    if algorithm == "local":
        word = synthesize_local(u, ring)
    elif algorithm == "householder":
        word, wrapper = synthesize_householder(u, ring)
        target = householder_target(u)
        qubits = dimension_config(u.n).qubits
        if with_circuit and wrapper.available and qubits is not None:
            circuit = householder_circuit(word, wrapper, qubits)
            if not check_ancilla_contract(circuit, u):
                raise VerificationError("wrapper circuit breaks the ancilla contract")
    elif algorithm == "global":
        run = run_global(u)
        word = run.word
        steps = run.steps
        bad = [s for s in steps if not s.progressed]
        if bad:
            raise ReductionError(f"{len(bad)} global steps did not make progress")
        if ring is Ring.INTEGRAL:
            before = word
            word = eliminate_ih_pairs(word)
            blowup = rewrite_blowup(before, word)
    else:
        raise ValueError(f"unknown algorithm {algorithm!r}")

    if evaluate_word(word) != target:
        logger.error("%s synthesis of a %dx%d matrix (k=%d) failed verification", algorithm, u.n, u.n, u.k)
        raise VerificationError(f"{algorithm} word does not evaluate to its target")

    report = SynthesisReport(
        algorithm=algorithm,
        ring=ring.value,
        n=u.n,
        k_initial=u.k,
        word_length=len(word),
        ih_count=word.count(GeneratorKind.IH),
        steps=steps,
        verified=True,
        rewrite_blowup=blowup,
        wrapper=wrapper,
    )
    logger.info("%s n=%d k=%d -> %d generators", algorithm, u.n, u.k, len(word))
    return SynthesisOutcome(word, report, circuit)
