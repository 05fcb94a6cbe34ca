from .ir import (
    Circuit,
    Gate,
    check_ancilla_contract,
    evaluate_circuit,
    householder_circuit,
    qubit_count,
    word_to_circuit,
)
from .textio import format_circuit, parse_circuit, read_circuit, write_circuit

__all__ = [
    "Circuit", "Gate", "check_ancilla_contract", "evaluate_circuit",
    "householder_circuit", "qubit_count", "word_to_circuit",
    "format_circuit", "parse_circuit", "read_circuit", "write_circuit",
]
