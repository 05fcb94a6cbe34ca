"""
Circuit text format.

    qubits 2 ancillas 1
    x 0
    h 0
    gen K[0,1,2,3]
    cx 0 2
    ccx 0 1 2
    h 0
"""

import re
from pathlib import Path
from typing import Union

from ..errors import InvalidGeneratorError, ParseError, ShapeError
from ..generators.wordio import parse_generator
from .ir import Circuit, Gate

_HEADER = re.compile(r"^qubits\s+(\d+)\s+ancillas\s+(\d+)$")


def format_circuit(c: Circuit) -> str:
    lines = [f"qubits {c.qubits} ancillas {c.ancillas}"]
    for g in c.gates:
        if g.name == "gen":
            lines.append(f"gen {g.generator}")
        else:
            lines.append(" ".join([g.name, *(str(q) for q in g.qubits)]))
    return "\n".join(lines) + "\n"


def parse_circuit(text: str) -> Circuit:
    header = None
    gates = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if header is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError("expected header 'qubits <m> ancillas <a>'", lineno)
            header = (int(m.group(1)), int(m.group(2)))
            continue
        name, _, rest = line.partition(" ")
        try:
            if name == "gen":
                gates.append(Gate("gen", generator=parse_generator(rest, lineno)))
            else:
                gates.append(Gate(name, tuple(int(q) for q in rest.split())))
        except (ShapeError, ValueError) as exc:
            raise ParseError(str(exc), lineno) from exc
    if header is None:
        raise ParseError("missing header 'qubits <m> ancillas <a>'")
    try:
        return Circuit(header[0], header[1], tuple(gates))
    except (ShapeError, InvalidGeneratorError) as exc:
        raise ParseError(str(exc)) from exc


def read_circuit(path: Union[str, Path]) -> Circuit:
    with open(path) as fh:
        return parse_circuit(fh.read())


def write_circuit(c: Circuit, path: Union[str, Path]) -> None:
    with open(path, "w") as fh:
        fh.write(format_circuit(c))
